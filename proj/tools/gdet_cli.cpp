// gdet: command-line front end over the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gdet/gdet.h"

namespace {

struct Output {
    bool json = false;
    bool timing = false;
};

int exit_code(gdet_status s) {
    switch (s) {
    case GDET_OK: return 0;
    case GDET_INVALID_INPUT:
    case GDET_BUDGET_EXCEEDED: return 2;
    default: return 1;
    }
}

// Prints whatever report came back, then the error if there is one.
int finish(gdet_status s, gdet_report* const* slot, const Output& out) {
    gdet_report* r = *slot;
    if (r) {
        std::cout << (out.json ? gdet_report_json(r, out.timing) : gdet_report_text(r, out.timing));
        if (out.json) std::cout << "\n";
        gdet_report_free(r);
    }
    if (s != GDET_OK) std::cerr << "gdet: " << gdet_status_name(s) << ": " << gdet_last_error() << "\n";
    return exit_code(s);
}

bool read_input(const std::string& path, std::string& text) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) return false;
        ss << in.rdbuf();
    }
    text = ss.str();
    return true;
}

int poly_command(const std::string& path, bool oracle, const Output& out) {
    std::string text;
    if (!read_input(path, text)) {
        std::cerr << "gdet: cannot read '" << path << "'\n";
        return 2;
    }
    gdet_poly* poly = nullptr;
    gdet_status s = gdet_poly_parse(text.c_str(), &poly);
    gdet_report* none = nullptr;
    if (s != GDET_OK) return finish(s, &none, out);
    gdet_report* r = nullptr;
    s = oracle ? gdet_oracle(poly, &r) : gdet_compute(poly, &r);
    gdet_poly_free(poly);
    return finish(s, &r, out);
}

bool parse_range(const std::string& text, long& lo, long& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        lo = std::stol(a, &used);
        if (used != a.size()) return false;
        hi = std::stol(b, &used);
        return used == b.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer group determinants for Z_p^n, H_p, D_2n and Q_4n"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "Print the report as JSON");
    app.add_flag("--timing", out.timing, "Include elapsed time in the report");

    std::string poly_path;
    auto* compute = app.add_subcommand("compute", "Group determinant via the fastest available route");
    compute->add_option("poly", poly_path, "Polynomial JSON file ('-' for stdin)")->required();
    auto* oracle = app.add_subcommand("oracle", "Group determinant from the Cayley matrix");
    oracle->add_option("poly", poly_path, "Polynomial JSON file ('-' for stdin)")->required();

    unsigned long p = 3;
    std::uint64_t trials = 100, seed = 1;
    long height = 2;
    auto* verify = app.add_subcommand("verify", "Randomized checks of the congruence and the two lemmas");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* v_cong = verify->add_subcommand("congruence", "M = F(1,1,1)^{p^3} mod p^3 on random F over H_p");
    auto* v_l1 = verify->add_subcommand("lemma1", "(1/p) sum f(y)^p = prod f(y) mod p^2");
    auto* v_l2 = verify->add_subcommand("lemma2", "p-th powers of roots with p | e_i give p^3 | e_i");
    for (auto* sc : {v_cong, v_l1, v_l2}) {
        sc->add_option("--p", p, "Odd prime")->required();
        sc->add_option("--trials", trials, "Number of random instances")->capture_default_str();
        sc->add_option("--seed", seed, "Master seed")->capture_default_str();
        sc->add_option("--height", height, "Coefficient bound")->capture_default_str();
    }

    std::string a_text, m_text;
    auto* achieve = app.add_subcommand("achieve", "F over H_p with M = a^{p^2} + m p^3");
    achieve->add_option("--p", p, "Odd prime")->required();
    achieve->add_option("--a", a_text, "Positive integer coprime to p")->required();
    achieve->add_option("--m", m_text, "Integer")->required();

    std::string family;
    unsigned long k = 0;
    auto* sharp = app.add_subcommand("sharp", "Families attaining the divisibility bounds exactly");
    sharp->add_option("--family", family, "zp2 or heisenberg")->required()->check(CLI::IsMember({"zp2", "heisenberg"}));
    sharp->add_option("--p", p, "Prime >= 5")->required();
    sharp->add_option("--k", k, "Extra valuation (zp2 only)")->capture_default_str();

    std::string m_range;
    auto* h3 = app.add_subcommand("h3-values", "The five H_3 families and their closed forms");
    h3->add_option("--m-range", m_range, "LO..HI")->required();

    std::string group, filter = "all";
    bool exhaustive = false;
    auto* search = app.add_subcommand("search", "Collect attained determinant values");
    search->add_option("--group", group, "heisenberg:3, dihedral:4, elementary:3:2, cyclic:9, dicyclic:3, product:4,2")
        ->required();
    search->add_option("--height", height, "Coefficients range over [-H, H]")->required();
    auto* ex = search->add_flag("--exhaustive", exhaustive, "Enumerate every coefficient vector");
    auto* tr = search->add_option("--trials", trials, "Random trials");
    search->add_option("--seed", seed, "Master seed")->capture_default_str();
    search->add_option("--filter", filter, "all, coprime or multiples")->capture_default_str();
    ex->excludes(tr);

    auto* lambda = app.add_subcommand("lambda", "Smallest nontrivial |M| over H_p and a witness");
    lambda->add_option("--p", p, "Odd prime")->required();

    std::string kind, f_expr, g_expr;
    unsigned points = 512;
    auto* measure = app.add_subcommand("measure", "Numeric Mahler-type measures");
    measure->add_option("kind", kind, "mahler, dinf, dinfh or heis")
        ->required()
        ->check(CLI::IsMember({"mahler", "dinf", "dinfh", "heis"}));
    measure->add_option("--f", f_expr, "Polynomial, e.g. x^2-1 (heis: f0 in y, z)")->required();
    measure->add_option("--g", g_expr, "Second polynomial (heis: the x^k component)");
    measure->add_option("--points", points, "Quadrature points for heis")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    double budget = 0;
    if (const char* env = std::getenv("GDET_BUDGET")) {
        char* end = nullptr;
        budget = std::strtod(env, &end);
        if (end == env || *end != '\0' || budget <= 0) {
            std::cerr << "gdet: GDET_BUDGET must be a positive number, got '" << env << "'\n";
            return 2;
        }
    }

    gdet_report* r = nullptr;
    if (*compute) return poly_command(poly_path, false, out);
    if (*oracle) return poly_command(poly_path, true, out);
    if (*verify) {
        gdet_status s;
        if (*v_cong) s = gdet_verify_congruence(p, trials, height, seed, &r);
        else s = gdet_verify_lemma(*v_l1 ? 1 : 2, p, trials, height, seed, &r);
        return finish(s, &r, out);
    }
    if (*achieve) return finish(gdet_achieve(p, a_text.c_str(), m_text.c_str(), &r), &r, out);
    if (*sharp) return finish(gdet_sharp(family.c_str(), p, k, &r), &r, out);
    if (*h3) {
        long lo = 0, hi = 0;
        if (!parse_range(m_range, lo, hi)) {
            std::cerr << "gdet: --m-range expects LO..HI, got '" << m_range << "'\n";
            return 2;
        }
        return finish(gdet_h3_values(lo, hi, &r), &r, out);
    }
    if (*search) {
        if (!exhaustive && tr->count() == 0) {
            std::cerr << "gdet: search needs --exhaustive or --trials N\n";
            return 2;
        }
        return finish(gdet_search(group.c_str(), height, exhaustive, trials, seed, filter.c_str(), budget, &r), &r, out);
    }
    if (*lambda) return finish(gdet_lambda(p, &r), &r, out);
    if (*measure) {
        return finish(gdet_measure(kind.c_str(), f_expr.c_str(), g_expr.empty() ? nullptr : g_expr.c_str(), points, &r),
                      &r, out);
    }
    return 2;
}

// One PASS/FAIL line per acceptance criterion. Reference values come from
// the Cayley-matrix determinant, brute scans and closed forms written out
// here, never from the fast paths under test.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/expr.hpp"
#include "gdet/fast_measures.hpp"
#include "gdet/groups.hpp"
#include "gdet/infinite.hpp"
#include "gdet/linalg.hpp"
#include "gdet/search.hpp"
#include "gdet/theorems.hpp"

using namespace gdet;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        });
}

// Every H_p value coprime to p seen anywhere below; checked at the end.
struct CoprimeLog {
    std::mutex mu;
    std::vector<std::pair<Integer, unsigned long>> values;
    void add(const Integer& M, unsigned long p) {
        if (sgn(M) == 0 || mpz_divisible_ui_p(M.get_mpz_t(), p)) return;
        std::lock_guard lock(mu);
        values.emplace_back(M, p);
    }
} coprime_log;

// Z_p^r values coprime to p; these must land in T_r.
struct AbelianLog {
    std::mutex mu;
    std::vector<std::tuple<Integer, unsigned long, unsigned long>> values;
    void add(const Integer& M, unsigned long p, unsigned long rank) {
        if (sgn(M) == 0 || mpz_divisible_ui_p(M.get_mpz_t(), p)) return;
        std::lock_guard lock(mu);
        values.emplace_back(M, p, rank);
    }
} abelian_log;

Integer cayley(const HeisenbergPoly& f) { return group_determinant(to_group_ring(f)); }

HeisenbergPoly random_heisenberg(unsigned long p, std::mt19937_64& rng, long h) {
    std::uniform_int_distribution<long> coef(-h, h);
    std::vector<Integer> a(p * p * p);
    for (auto& v : a) v = coef(rng);
    return HeisenbergPoly(p, a);
}

unsigned long vp(const Integer& M, unsigned long p) {
    Integer m = abs(M);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        ++v;
    }
    return v;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    Integer base = b % m;
    if (base < 0) base += m;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer ipow(long b, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), std::labs(b), e);
    return (b < 0 && e % 2) ? Integer(-r) : r;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& run) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// ---- 1
Outcome oracle_equivalence() {
    const auto t0 = Clock::now();
    std::atomic<int> bad{0};
    for (auto [p, n, h] : {std::tuple{3ul, 300u, 5L}, {5ul, 20u, 5L}}) {
        parallel_for(n, [&, p = p, h = h](std::size_t i) {
            std::mt19937_64 rng(trial_rng(1000 + p, i));
            const auto f = random_heisenberg(p, rng, h);
            const auto fac = heisenberg_measure(f);
            const Integer ref = cayley(f);
            if (fac.M != ref || fac.M != fac.M1 * pow(fac.M2, p)) ++bad;
            coprime_log.add(ref, p);
        });
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 60, fmt("300 H_3 + 20 H_5 inputs, %d mismatches, %.1f s of 60 s", bad.load(), secs)};
}

// ---- 2
Outcome congruence() {
    std::atomic<int> bad{0};
    for (unsigned long p : {3ul, 5ul}) {
        const Integer mod = ipow(p, 3);
        parallel_for(500, [&](std::size_t i) {
            std::mt19937_64 rng(trial_rng(2000 + p, i));
            const auto f = random_heisenberg(p, rng, 4);
            // p = 3 against the Cayley determinant; p = 5 uses the factorization checked in criterion 1
            const Integer M = p == 3 ? cayley(f) : heisenberg_measure(f).M;
            const Integer lhs = powmod(M, 1, mod), rhs = powmod(f.value_at_one(), mod, mod);
            if (lhs != rhs || !verify_congruence_main(f, M).holds) ++bad;
            coprime_log.add(M, p);
        });
    }
    return {bad == 0, fmt("500 inputs each for p = 3, 5; %d failures", bad.load())};
}

// ---- 3
Outcome achieve() {
    int bad = 0, count = 0;
    for (unsigned long p : {3ul, 5ul}) {
        for (long a : {1L, 2L, 4L, 7L}) {
            for (long m = -3; m <= 3; ++m) {
                const auto r = achieve_construction(a, m, p);
                const Integer expected = ipow(a, p * p) + Integer(m) * ipow(p, 3);
                const Integer M = p == 3 ? cayley(r.poly) : heisenberg_measure(r.poly).M;
                if (M != expected || r.M != expected) ++bad;
                coprime_log.add(M, p);
                ++count;
            }
        }
    }
    return {bad == 0, fmt("%d (a, m, p) triples, %d wrong", count, bad)};
}

// ---- 4
Outcome h3_families() {
    const Integer t12 = ipow(3, 12);
    int bad = 0, count = 0;
    for (long m = -5; m <= 5; ++m) {
        const std::vector<Integer> closed{t12 * (1 + 9 * m), t12 * (2 + 9 * m), t12 * 3 * (1 + 3 * m), t12 * 9 * m,
                                          t12 * (4 + 9 * m)};
        for (int fam = 1; fam <= 5; ++fam) {
            const auto f = h3_family_polynomial(fam, m);
            const Integer plus = cayley(f), minus = cayley(-f);
            if (plus != closed[fam - 1] || minus != -closed[fam - 1]) ++bad;
            count += 2;
        }
        for (const auto& v : h3_family_values(m))
            if (!v.matches) ++bad;
    }
    return {bad == 0, fmt("%d values for m in [-5, 5], %d mismatches", count, bad)};
}

// ---- 5
Outcome zp2() {
    std::atomic<int> bad{0}, zero{0};
    int checked = 0;
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        auto grp = GroupSpec::build(GroupDescriptor::elementary(p, 2));
        const unsigned long bound = p == 3 ? 6 : p + 3;
        const unsigned trials = p == 7 ? 60 : 150;
        parallel_for(trials, [&](std::size_t i) {
            std::mt19937_64 rng(trial_rng(5000 + p, i));
            std::uniform_int_distribution<long> coef(-3, 3);
            std::vector<Integer> c(p * p);
            for (auto& v : c) v = coef(rng);
            Integer s = 0;
            for (const auto& v : c) s += v;
            c[0] -= s % Integer(p);
            const Integer M = group_determinant(GroupRingElt(grp, c));
            if (sgn(M) == 0) ++zero;
            else if (vp(M, p) < bound) ++bad;
            std::vector<Integer> u = c;
            u[0] += 1; // a unit-augmentation neighbour for the T_2 log
            abelian_log.add(group_determinant(GroupRingElt(grp, u)), p, 2);
        });
        checked += trials;
    }
    int sharp_bad = 0;
    for (unsigned long p : {5ul, 7ul}) {
        auto grp = GroupSpec::build(GroupDescriptor::elementary(p, 2));
        for (unsigned long k = 0; k <= 2; ++k) {
            const auto [poly, rep] = zp2_sharp_family(p, k);
            const Integer M = group_determinant(GroupRingElt(grp, poly.coeffs));
            if (sgn(M) == 0 || vp(M, p) != p + 3 + k || !rep.exact) ++sharp_bad;
        }
    }
    return {bad == 0 && sharp_bad == 0,
            fmt("%d random multiples (%d zero), %d below bound; sharp family off in %d of 6", checked, zero.load(),
                bad.load(), sharp_bad)};
}

// ---- 6
Outcome heisenberg_bound() {
    std::atomic<int> bad{0}, zero{0};
    parallel_for(240, [&](std::size_t i) {
        std::mt19937_64 rng(trial_rng(6000, i));
        auto f = random_heisenberg(3, rng, 3);
        f.add(0, 0, 0, -mod_nonneg(f.value_at_one(), 3));
        const Integer M = cayley(f);
        if (sgn(M) == 0) ++zero;
        else if (vp(M, 3) < 12) ++bad;
    });
    const auto [f5, rep] = heisenberg_sharp_family(5);
    const Integer M5 = cayley(f5);
    const bool sharp = sgn(M5) != 0 && vp(M5, 5) == 28 && rep.exact;
    return {bad == 0 && sharp, fmt("240 H_3 multiples of 3 (%d zero), %d below 3^12; p = 5 family v_5 = %lu",
                                   zero.load(), bad.load(), sgn(M5) ? vp(M5, 5) : 0ul)};
}

// ---- 9
Outcome lambda_h3() {
    long scan = 0;
    for (long x = 2; x <= 27 && !scan; ++x)
        if ((x * x) % 27 == 1) scan = x;
    const auto lam = lambda_heisenberg(3);
    const auto w = achieve_construction(1, -1, 3);
    const Integer wM = cayley(w.poly);
    coprime_log.add(wM, 3);

    SearchConfig cfg;
    cfg.group = GroupDescriptor::heisenberg(3);
    cfg.height = 2;
    cfg.exhaustive = false;
    cfg.trials = 100000;
    cfg.seed = 9;
    const auto res = enumerate_values(cfg);
    int small = 0;
    for (const auto& v : res.attained_values) {
        if (abs(v) >= 2 && abs(v) <= 25) ++small;
        coprime_log.add(v, 3);
    }
    const bool ok = scan == 26 && lam.minimum == 26 && wM == -26 && !res.truncated && res.evaluated == 100000 &&
                    small == 0;
    return {ok, fmt("scan min %ld, witness M = %s, %llu random trials with %d values in [2, 25]", scan,
                    wM.get_str().c_str(), static_cast<unsigned long long>(res.evaluated), small)};
}

// ---- 10
Outcome d8() {
    SearchConfig cfg;
    cfg.group = GroupDescriptor::dihedral(4);
    cfg.height = 2;
    cfg.exhaustive = true;
    const auto res = enumerate_values(cfg);
    int odd_bad = 0, even_bad = 0;
    for (const auto& v : res.attained_values) {
        if (mpz_odd_p(v.get_mpz_t())) {
            if (mod_nonneg(v, 4) != 1) ++odd_bad;
        } else if (!mpz_divisible_2exp_p(v.get_mpz_t(), 8)) {
            ++even_bad;
        }
    }
    // spot-check the enumerated values against the Cayley matrix
    auto grp = GroupSpec::build(cfg.group);
    int spot_bad = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto c = random_coefficients(10, i, 8, 2);
        const Integer M = group_determinant(GroupRingElt(grp, c));
        if (!std::binary_search(res.attained_values.begin(), res.attained_values.end(), M)) ++spot_bad;
    }
    const bool ok = res.evaluated == 390625 && !res.truncated && odd_bad == 0 && even_bad == 0 && spot_bad == 0;
    return {ok, fmt("%llu inputs, %zu distinct values; %d odd not 1 mod 4, %d even not divisible by 2^8",
                    static_cast<unsigned long long>(res.evaluated), res.attained_values.size(), odd_bad, even_bad)};
}

// ---- 11
Outcome lehmer() {
    const auto t0 = Clock::now();
    // log of Lehmer's number 1.17628081825991750654407033847...
    const long double ref = std::log(1.17628081825991750654407033847L);
    const double m = mahler_measure(to_laurent(parse_expression("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")));
    const double d = d_infinity_measure(to_laurent(parse_expression("x^2-1")),
                                        to_laurent(parse_expression("x^5+x^4-1")));
    const double secs = seconds_since(t0);
    const double e1 = std::fabs(m - static_cast<double>(ref)), e2 = std::fabs(d - static_cast<double>(ref / 2));
    return {e1 < 1e-9 && e2 < 1e-8 && secs < 1,
            fmt("m = %.15f (err %.1e), dinf = %.15f (err %.1e), %.3f s", m, e1, d, e2, secs)};
}

// ---- 12
// Midpoint double sum of max(mean log|f0|, mean log|fk|) on an n x n grid.
double riemann(const BiLaurent& f0, const BiLaurent& fk, unsigned n) {
    std::vector<std::complex<double>> phase(2 * n);
    for (unsigned k = 0; k < 2 * n; ++k) phase[k] = std::polar(1.0, std::numbers::pi * k / n);
    std::vector<double> rows(n);
    auto mean_log = [&](const BiLaurent& f, unsigned i) {
        double s = 0;
        for (unsigned j = 0; j < n; ++j) {
            std::complex<double> v = 0;
            for (const auto& [e, c] : f.terms) {
                // e(a (j + 1/2) / n + b (i + 1/2) / n) = phase[(2aj + 2bi + a + b) mod 2n]
                const long idx = 2 * e.first * long(j) + 2 * e.second * long(i) + e.first + e.second;
                v += c.get_d() * phase[((idx % long(2 * n)) + 2 * n) % (2 * n)];
            }
            s += std::log(std::abs(v));
        }
        return s / n;
    };
    parallel_for(n, [&](std::size_t i) { rows[i] = std::max(mean_log(f0, i), mean_log(fk, i)); });
    double total = 0;
    for (double r : rows) total += r;
    return total / n;
}

Outcome heisenberg_numeric() {
    const std::pair<const char*, const char*> inputs[] = {{"y+z+3", "1"}, {"2+z", "y+2"}, {"3+y+z^2", "3-y z"}};
    double worst = 0;
    std::string detail;
    for (const auto& [a, b] : inputs) {
        const auto f0 = to_bilaurent(parse_expression(a)), fk = to_bilaurent(parse_expression(b));
        const double fast = heisenberg_infinite_measure(f0, fk);
        const double ref = riemann(f0, fk, 4096);
        worst = std::max(worst, std::fabs(fast - ref));
        detail += fmt("%s|%s %.6f vs %.6f; ", a, b, fast, ref);
    }
    detail += fmt("max diff %.1e", worst);
    return {worst < 1e-3, detail};
}

// ---- 8
std::vector<Integer> powered_symmetric(const std::vector<Integer>& P, unsigned long p) {
    // prod_k P(w^k t) = prod_i (1 + alpha_i^p t^p) for odd p
    std::vector<CycInt> acc{CycInt(p, Integer(1))};
    for (unsigned long k = 0; k < p; ++k) {
        std::vector<CycInt> next(acc.size() + P.size() - 1, CycInt(p));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < P.size(); ++j)
                next[i + j] += acc[i] * (CycInt::root_power(p, static_cast<long>(k * j)) * P[j]);
        acc = next;
    }
    std::vector<Integer> out;
    for (std::size_t i = p; i < acc.size(); i += p) out.push_back(*cyc_is_integer(acc[i]));
    while (!out.empty() && out.back() == 0) out.pop_back(); // P may have trailing zero coefficients
    return out;
}

Outcome lemmas() {
    int bad1 = 0, bad2 = 0, n1 = 0, n2 = 0;
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        const Integer p2 = ipow(p, 2), p3 = ipow(p, 3);
        std::mt19937_64 rng(8000 + p);
        std::uniform_int_distribution<long> coef(-9, 9);
        for (int t = 0; t < 200; ++t, ++n1) {
            std::vector<Integer> f(1 + t % (2 * p));
            for (auto& v : f) v = coef(rng);
            // circulant determinant and the constant term of f^p mod y^p - 1
            std::vector<Integer> red(p, 0), acc(p, 0);
            for (std::size_t i = 0; i < f.size(); ++i) red[i % p] += f[i];
            SquareMatrix<Integer> circ(p, Integer(0));
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t c = 0; c < p; ++c) circ(r, c) = red[(c + p - r) % p];
            const Integer prod = det_bareiss(circ);
            acc[0] = 1;
            for (unsigned long k = 0; k < p; ++k) {
                std::vector<Integer> next(p, 0);
                for (std::size_t i = 0; i < p; ++i)
                    for (std::size_t j = 0; j < p; ++j) next[(i + j) % p] += acc[i] * red[j];
                acc = next;
            }
            const auto rep = lemma1_check(f, p);
            if (!rep.holds || rep.product != prod || rep.power_sum != acc[0] ||
                mod_nonneg(acc[0] - prod, p2) != 0)
                ++bad1;
        }
        std::uniform_int_distribution<long> small(-5, 5);
        for (int t = 0; t < 200; ++t, ++n2) {
            std::vector<Integer> P(2 + t % (p - 1));
            P[0] = 1;
            for (std::size_t i = 1; i < P.size(); ++i) P[i] = Integer(small(rng)) * p;
            const auto ref = powered_symmetric(P, p);
            bool divisible = true;
            for (const auto& e : ref) divisible = divisible && mod_nonneg(e, p3) == 0;
            const auto rep = lemma2_check(P, p);
            if (!rep.holds || rep.powered != ref || !divisible) ++bad2;
        }
    }
    return {bad1 == 0 && bad2 == 0, fmt("lemma 1: %d inputs, %d failures; lemma 2: %d inputs, %d failures", n1, bad1,
                                        n2, bad2)};
}

// ---- 7
Outcome coprime_values() {
    int bad = 0;
    for (const auto& [M, p] : coprime_log.values) {
        const Integer p3 = ipow(p, 3);
        if (powmod(M, p - 1, p3) != 1) ++bad;
    }
    int abad = 0;
    for (const auto& [M, p, r] : abelian_log.values)
        if (powmod(M, p - 1, ipow(p, r)) != 1) ++abad;
    return {bad == 0 && abad == 0 && !coprime_log.values.empty(),
            fmt("%zu H_p values coprime to p, %d outside T_3; %zu Z_p^2 values, %d outside T_2",
                coprime_log.values.size(), bad, abelian_log.values.size(), abad)};
}

} // namespace

int main() {
    report(1, "fast factorization equals the Cayley determinant", oracle_equivalence);
    report(2, "M = F(1,1,1)^(p^3) mod p^3", congruence);
    report(3, "construction attains a^(p^2) + m p^3", achieve);
    report(4, "five H_3 families and their negations", h3_families);
    report(5, "Z_p^2 divisibility and the sharp family", zp2);
    report(6, "H_p divisibility and the sharp family", heisenberg_bound);
    report(8, "lemmas on p-th powers", lemmas);
    report(9, "lambda(H_3) minimum, witness and random search", lambda_h3);
    report(10, "D_8 exhaustive values at height 2", d8);
    report(11, "Lehmer measure and its D_infinity half", lehmer);
    report(12, "discrete Heisenberg measure against a 4096^2 Riemann sum", heisenberg_numeric);
    // runs last so that it sees every value collected above
    report(7, "coprime values lie in T_3", coprime_values);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures ? 1 : 0;
}

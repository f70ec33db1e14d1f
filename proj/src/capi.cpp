#include "gdet/gdet.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "commands.hpp"
#include "gdet/error.hpp"
#include "gdet/fast_measures.hpp"

struct gdet_poly {
    gdet::ParsedPoly parsed;
};

struct gdet_report {
    gdet::Report report;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string last_error;

gdet_status status_of(gdet::ErrorKind k) {
    using gdet::ErrorKind;
    switch (k) {
    case ErrorKind::BudgetExceeded: return GDET_BUDGET_EXCEEDED;
    case ErrorKind::NotInteger:
    case ErrorKind::InexactDivision: return GDET_VERIFY_FAILED;
    case ErrorKind::RootFindingFailed: return GDET_INTERNAL;
    default: return GDET_INVALID_INPUT;
    }
}

template <class F>
gdet_status guarded(F&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const gdet::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return GDET_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GDET_INTERNAL;
    }
}

template <class F>
gdet_status make_report(gdet_report** out, F&& build) {
    if (!out) {
        last_error = "null output pointer";
        return GDET_INVALID_INPUT;
    }
    *out = nullptr;
    return guarded([&] {
        auto* r = new gdet_report{build(), {}, {}};
        *out = r;
        if (r->report.passed) return GDET_OK;
        last_error = r->report.command + ": verification failed";
        return GDET_VERIFY_FAILED;
    });
}

gdet_status null_arg(const char* what) {
    last_error = std::string("null argument: ") + what;
    return GDET_INVALID_INPUT;
}

} // namespace

extern "C" {

const char* gdet_version(void) { return "1.0.0"; }

const char* gdet_last_error(void) { return last_error.c_str(); }

const char* gdet_status_name(gdet_status s) {
    switch (s) {
    case GDET_OK: return "ok";
    case GDET_VERIFY_FAILED: return "verification failed";
    case GDET_INVALID_INPUT: return "invalid input";
    case GDET_BUDGET_EXCEEDED: return "budget exceeded";
    case GDET_INTERNAL: return "internal error";
    }
    return "unknown";
}

gdet_status gdet_poly_parse(const char* json, gdet_poly** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        *out = new gdet_poly{gdet::parse_poly_json(json)};
        return GDET_OK;
    });
}

void gdet_poly_free(gdet_poly* poly) { delete poly; }

size_t gdet_poly_order(const gdet_poly* poly) { return poly ? poly->parsed.elt.group().order() : 0; }

gdet_status gdet_poly_determinant(const gdet_poly* poly, int oracle, char** out) {
    if (!poly) return null_arg("poly");
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        const gdet::Integer M =
            oracle ? gdet::group_determinant(poly->parsed.elt) : gdet::fast_group_determinant(poly->parsed.elt);
        const std::string s = M.get_str();
        char* buf = new char[s.size() + 1];
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *out = buf;
        return GDET_OK;
    });
}

void gdet_string_free(char* s) { delete[] s; }

const char* gdet_report_json(gdet_report* report, int with_timing) {
    if (!report) return nullptr;
    report->json = report->report.to_json(with_timing != 0).dump(2);
    return report->json.c_str();
}

const char* gdet_report_text(gdet_report* report, int with_timing) {
    if (!report) return nullptr;
    report->text = report->report.to_text(with_timing != 0);
    return report->text.c_str();
}

int gdet_report_passed(const gdet_report* report) { return report && report->report.passed ? 1 : 0; }

void gdet_report_free(gdet_report* report) { delete report; }

gdet_status gdet_compute(const gdet_poly* poly, gdet_report** out) {
    if (!poly) return null_arg("poly");
    return make_report(out, [&] { return gdet::cmd_compute(poly->parsed); });
}

gdet_status gdet_oracle(const gdet_poly* poly, gdet_report** out) {
    if (!poly) return null_arg("poly");
    return make_report(out, [&] { return gdet::cmd_oracle(poly->parsed); });
}

gdet_status gdet_verify_congruence(unsigned long p, uint64_t trials, long height, uint64_t seed, gdet_report** out) {
    return make_report(out, [&] { return gdet::cmd_verify_congruence(p, trials, height, seed); });
}

gdet_status gdet_verify_lemma(int which, unsigned long p, uint64_t trials, long height, uint64_t seed,
                              gdet_report** out) {
    return make_report(out, [&] { return gdet::cmd_verify_lemma(which, p, trials, height, seed); });
}

gdet_status gdet_achieve(unsigned long p, const char* a, const char* m, gdet_report** out) {
    if (!a) return null_arg("a");
    if (!m) return null_arg("m");
    return make_report(out, [&] { return gdet::cmd_achieve(p, gdet::parse_integer(a), gdet::parse_integer(m)); });
}

gdet_status gdet_sharp(const char* family, unsigned long p, unsigned long k, gdet_report** out) {
    if (!family) return null_arg("family");
    return make_report(out, [&] { return gdet::cmd_sharp(family, p, k); });
}

gdet_status gdet_h3_values(long m_lo, long m_hi, gdet_report** out) {
    return make_report(out, [&] { return gdet::cmd_h3_values(m_lo, m_hi); });
}

gdet_status gdet_search(const char* group, long height, int exhaustive, uint64_t trials, uint64_t seed,
                        const char* filter, double budget, gdet_report** out) {
    if (!group) return null_arg("group");
    return make_report(out, [&] {
        return gdet::cmd_search(gdet::parse_group_spec(group), height, exhaustive != 0, trials, seed,
                                filter ? filter : "all", budget > 0 ? budget : 1e8);
    });
}

gdet_status gdet_lambda(unsigned long p, gdet_report** out) {
    return make_report(out, [&] { return gdet::cmd_lambda(p); });
}

gdet_status gdet_measure(const char* kind, const char* f, const char* g, unsigned points, gdet_report** out) {
    if (!kind) return null_arg("kind");
    if (!f) return null_arg("f");
    return make_report(out, [&] { return gdet::cmd_measure(kind, f, g ? g : "", points ? points : 512); });
}

} // extern "C"

/* C interface to the group determinant engine.
 *
 * Every entry point returns a gdet_status. On failure the message is
 * available from gdet_last_error() on the same thread until the next call.
 * Reports and polynomials are opaque; free them with the matching _free.
 */
#ifndef GDET_H
#define GDET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef GDET_BUILDING
#    define GDET_API __declspec(dllexport)
#  else
#    define GDET_API __declspec(dllimport)
#  endif
#else
#  define GDET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdet_status {
    GDET_OK = 0,
    GDET_VERIFY_FAILED = 1,   /* ran to completion, a checked statement failed */
    GDET_INVALID_INPUT = 2,
    GDET_BUDGET_EXCEEDED = 3,
    GDET_INTERNAL = 4
} gdet_status;

typedef struct gdet_poly gdet_poly;
typedef struct gdet_report gdet_report;

GDET_API const char* gdet_version(void);
GDET_API const char* gdet_last_error(void);
GDET_API const char* gdet_status_name(gdet_status s);

/* Group-ring element from the JSON format
 * {"group": {"kind": "heisenberg", "p": 3}, "terms": [{"exps": [i, j, k], "coef": "-12"}]} */
GDET_API gdet_status gdet_poly_parse(const char* json, gdet_poly** out);
GDET_API void gdet_poly_free(gdet_poly* poly);
GDET_API size_t gdet_poly_order(const gdet_poly* poly);
/* Determinant as a decimal string, fast path (oracle = 0) or Cayley matrix
 * (oracle != 0). Release with gdet_string_free. */
GDET_API gdet_status gdet_poly_determinant(const gdet_poly* poly, int oracle, char** out);
GDET_API void gdet_string_free(char* s);

/* Report accessors. Strings stay valid until gdet_report_free. A report is
 * also produced when the status is GDET_VERIFY_FAILED. */
GDET_API const char* gdet_report_json(gdet_report* report, int with_timing);
GDET_API const char* gdet_report_text(gdet_report* report, int with_timing);
GDET_API int gdet_report_passed(const gdet_report* report);
GDET_API void gdet_report_free(gdet_report* report);

GDET_API gdet_status gdet_compute(const gdet_poly* poly, gdet_report** out);
GDET_API gdet_status gdet_oracle(const gdet_poly* poly, gdet_report** out);
GDET_API gdet_status gdet_verify_congruence(unsigned long p, uint64_t trials, long height, uint64_t seed,
                                            gdet_report** out);
/* which = 1 or 2 */
GDET_API gdet_status gdet_verify_lemma(int which, unsigned long p, uint64_t trials, long height, uint64_t seed,
                                       gdet_report** out);
/* a and m are decimal strings */
GDET_API gdet_status gdet_achieve(unsigned long p, const char* a, const char* m, gdet_report** out);
/* family "zp2" (uses k) or "heisenberg" */
GDET_API gdet_status gdet_sharp(const char* family, unsigned long p, unsigned long k, gdet_report** out);
GDET_API gdet_status gdet_h3_values(long m_lo, long m_hi, gdet_report** out);
/* group: "heisenberg:3", "dihedral:4", "elementary:3:2", "product:4,2", "cyclic:9", "dicyclic:3"
 * or a JSON group object; filter: "all", "coprime", "multiples"; budget <= 0 means the default. */
GDET_API gdet_status gdet_search(const char* group, long height, int exhaustive, uint64_t trials, uint64_t seed,
                                 const char* filter, double budget, gdet_report** out);
GDET_API gdet_status gdet_lambda(unsigned long p, gdet_report** out);
/* kind: "mahler", "dinf", "dinfh", "heis"; g may be NULL for mahler/dinf/dinfh */
GDET_API gdet_status gdet_measure(const char* kind, const char* f, const char* g, unsigned points, gdet_report** out);

#ifdef __cplusplus
}
#endif

#endif

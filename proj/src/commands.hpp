#pragma once

// One function per CLI subcommand; each returns a filled Report and throws
// gdet::Error on bad input.

#include <cstdint>
#include <string>
#include <string_view>

#include "gdet/groups.hpp"
#include "report.hpp"

namespace gdet {

struct ParsedPoly {
    GroupPtr group;
    GroupRingElt elt;
    Json source;
};

/// {"group": {...}, "terms": [{"exps": [...], "coef": "..."}]}
ParsedPoly parse_poly_json(std::string_view text);
/// "heisenberg:3", "dihedral:4", "elementary:3:2", "product:4,2", or a JSON group object.
GroupDescriptor parse_group_spec(std::string_view text);
Json group_json(const GroupDescriptor& d);
/// Nonzero coefficients as [{"exps": [...], "coef": "..."}] in group element order.
Json terms_json(const GroupRingElt& f);

Report cmd_compute(const ParsedPoly& f);
Report cmd_oracle(const ParsedPoly& f);
Report cmd_verify_congruence(unsigned long p, std::uint64_t trials, long height, std::uint64_t seed);
Report cmd_verify_lemma(int which, unsigned long p, std::uint64_t trials, long height, std::uint64_t seed);
Report cmd_achieve(unsigned long p, const Integer& a, const Integer& m);
Report cmd_sharp(std::string_view family, unsigned long p, unsigned long k);
Report cmd_h3_values(long lo, long hi);
Report cmd_search(const GroupDescriptor& group, long height, bool exhaustive, std::uint64_t trials, std::uint64_t seed,
                  std::string_view filter, double budget);
Report cmd_lambda(unsigned long p);
Report cmd_measure(std::string_view kind, std::string_view f, std::string_view g, unsigned points);

} // namespace gdet

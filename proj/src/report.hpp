#pragma once

// Command reports: fixed key order, big integers as decimal strings, so
// identical inputs give byte-identical JSON.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "gdet/integer.hpp"

namespace gdet {

using Json = nlohmann::ordered_json;

inline Json big(const Integer& a) { return a.get_str(); }

struct Report {
    std::string command;
    Json input = Json::object();
    std::optional<std::uint64_t> seed;
    Json results = Json::object();
    bool passed = true;
    double elapsed_ms = 0;

    /// elapsed_ms is only emitted on request so that default output stays reproducible.
    Json to_json(bool with_timing) const;
    std::string to_text(bool with_timing) const;
};

/// FNV-1a over the canonical input dump, as 16 hex digits.
std::string input_digest(const Json& input);

} // namespace gdet

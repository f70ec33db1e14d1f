#include "report.hpp"

#include <cstdio>

namespace gdet {

std::string input_digest(const Json& input) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : input.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json Report::to_json(bool with_timing) const {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["input_digest"] = input_digest(input);
    if (seed) j["seed"] = *seed;
    j["results"] = results;
    j["passed"] = passed;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

namespace {

std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

bool all_scalars(const Json& a) {
    for (const auto& v : a)
        if (v.is_structured()) return false;
    return true;
}

std::string inline_object(const Json& o) {
    std::string s;
    for (auto it = o.begin(); it != o.end(); ++it) {
        if (!s.empty()) s += ", ";
        s += it.key() + ": ";
        if (it.value().is_object()) s += "{" + inline_object(it.value()) + "}";
        else if (it.value().is_array() && all_scalars(it.value())) {
            std::string list;
            for (const auto& v : it.value()) list += (list.empty() ? "" : " ") + scalar(v);
            s += "[" + list + "]";
        } else s += scalar(it.value());
    }
    return s;
}

void render(const Json& obj, const std::string& prefix, std::string& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string key = prefix + it.key();
        const Json& v = it.value();
        if (v.is_object()) {
            render(v, key + ".", out);
        } else if (v.is_array() && all_scalars(v)) {
            std::string list;
            for (const auto& e : v) list += (list.empty() ? "" : ", ") + scalar(e);
            out += key + ": " + list + "\n";
        } else if (v.is_array()) {
            out += key + ":\n";
            for (const auto& e : v) out += "  - " + (e.is_object() ? inline_object(e) : scalar(e)) + "\n";
        } else {
            out += key + ": " + scalar(v) + "\n";
        }
    }
}

} // namespace

std::string Report::to_text(bool with_timing) const {
    std::string out = "command: " + command + "\n";
    if (seed) out += "seed: " + std::to_string(*seed) + "\n";
    render(results, "", out);
    out += std::string("passed: ") + (passed ? "true" : "false") + "\n";
    if (with_timing) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", elapsed_ms);
        out += std::string("elapsed_ms: ") + buf + "\n";
    }
    return out;
}

} // namespace gdet

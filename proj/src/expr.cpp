#include "gdet/expr.hpp"

#include <cctype>

#include "gdet/error.hpp"

namespace gdet {

MultiPoly MultiPoly::constant(const Integer& c) {
    MultiPoly p;
    if (sgn(c) != 0) p.terms[{0, 0, 0}] = c;
    return p;
}

MultiPoly MultiPoly::variable(int var) {
    MultiPoly p;
    Exps e{0, 0, 0};
    e[static_cast<std::size_t>(var)] = 1;
    p.terms[e] = 1;
    return p;
}

bool MultiPoly::uses_only(std::initializer_list<int> vars) const {
    for (const auto& [e, c] : terms) {
        for (int v = 0; v < 3; ++v) {
            if (e[static_cast<std::size_t>(v)] == 0) continue;
            bool allowed = false;
            for (int w : vars) allowed = allowed || w == v;
            if (!allowed) return false;
        }
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    static const char names[] = {'x', 'y', 'z'};
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool is_const = e == Exps{0, 0, 0};
        Integer mag = abs(c);
        out += sgn(c) < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            const long k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names[v];
            if (k != 1) mono += "^" + std::to_string(k);
        }
        if (is_const || mag != 1) out += mag.get_str() + (mono.empty() ? "" : "*");
        out += mono;
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) {
        auto& slot = terms[e];
        slot += c;
        if (sgn(slot) == 0) terms.erase(e);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            MultiPoly::Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            r.terms[e] += ca * cb;
        }
    }
    std::erase_if(r.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    return r;
}

namespace {

constexpr long kMaxPower = 4096;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MultiPoly parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected token");
        return r;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        std::string tok = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string("end of input");
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t e = pos_;
            while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
            tok = std::string(s_.substr(pos_, e - pos_));
        }
        throw Error(ErrorKind::ParseError, why + ": '" + tok + "' at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
    }

    MultiPoly expr() {
        MultiPoly r = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+') r += term();
            else r -= term();
        }
        return r;
    }

    MultiPoly term() {
        MultiPoly r = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * unary();
            } else if (starts_atom(c)) {
                r = r * unary();
            } else {
                return r;
            }
        }
    }

    MultiPoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Integer digits() {
        skip();
        std::size_t e = pos_;
        while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
        if (e == pos_) fail("expected a number");
        Integer v(std::string(s_.substr(pos_, e - pos_)));
        pos_ = e;
        return v;
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
        }
        const std::size_t at = pos_;
        Integer k = digits();
        if (k > kMaxPower) {
            pos_ = at;
            fail("exponent too large");
        }
        const long e = k.get_si();
        if (neg) {
            if (base.terms.size() != 1) {
                pos_ = at;
                fail("negative power of a non-monomial");
            }
            auto exps = base.terms.begin()->first;
            const Integer coef = base.terms.begin()->second;
            if (abs(coef) != 1 && e != 0) {
                pos_ = at;
                fail("negative power of a non-unit coefficient");
            }
            MultiPoly r;
            for (auto& v : exps) v *= -e;
            r.terms[exps] = (e % 2 == 0) ? Integer(1) : coef;
            return r;
        }
        MultiPoly r = MultiPoly::constant(1);
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return MultiPoly::variable(c - 'x');
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(digits());
        fail("unexpected token");
    }
};

} // namespace

MultiPoly parse_expression(std::string_view text) { return Parser(text).parse(); }

} // namespace gdet

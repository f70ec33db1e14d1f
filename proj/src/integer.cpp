#include "gdet/integer.hpp"

#include "gdet/error.hpp"

namespace gdet {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroSlice: return "ZeroSlice";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (sgn(r) < 0) r += abs(m);
    return r;
}

Integer pow_mod(const Integer& a, const Integer& e, const Integer& m) {
    Integer base = mod_nonneg(a, m);
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

std::optional<unsigned long> valuation(const Integer& a, unsigned long p) {
    if (sgn(a) == 0) return std::nullopt;
    Integer base = p;
    Integer rest;
    return mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), base.get_mpz_t());
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_odd_prime(unsigned long p, std::string_view what) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidParameter,
                    std::string(what) + " needs an odd prime, got " + std::to_string(p));
    }
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; ok && i < s.size(); ++i) ok = s[i] >= '0' && s[i] <= '9';
    if (!ok) throw Error(ErrorKind::ParseError, "not a decimal integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace gdet

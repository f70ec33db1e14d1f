#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gdet {

using Integer = mpz_class;

/// Residue of a in [0, m) for m > 0.
Integer mod_nonneg(const Integer& a, const Integer& m);

/// a^e mod m, result in [0, m).
Integer pow_mod(const Integer& a, const Integer& e, const Integer& m);

Integer pow(const Integer& a, unsigned long e);

/// p-adic valuation of a nonzero integer; nullopt for zero.
std::optional<unsigned long> valuation(const Integer& a, unsigned long p);

bool is_prime(unsigned long n);

/// Throws InvalidParameter unless p is an odd prime.
void require_odd_prime(unsigned long p, std::string_view what);

/// Decimal parse; throws ParseError naming the text on failure.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& a) { return a.get_str(); }

} // namespace gdet

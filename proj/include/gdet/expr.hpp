#pragma once

// Text polynomials in x, y, z with integer coefficients and integer
// (possibly negative) exponents.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (['*'] unary)*        juxtaposition multiplies: 3x, 2(x+1)
//   unary  := ('+' | '-') unary | power
//   power  := atom ['^' ['-' | '+'] digits]
//   atom   := digits | 'x' | 'y' | 'z' | '(' expr ')'
//
// Negative powers are only allowed on monomials. Whitespace is ignored.

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "gdet/integer.hpp"

namespace gdet {

struct MultiPoly {
    using Exps = std::array<long, 3>; // exponents of x, y, z
    std::map<Exps, Integer> terms;    // no zero coefficients

    static MultiPoly constant(const Integer& c);
    static MultiPoly variable(int var);

    bool is_zero() const { return terms.empty(); }
    /// True when only the listed variables (0 = x, 1 = y, 2 = z) occur.
    bool uses_only(std::initializer_list<int> vars) const;
    std::string str() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;
    bool operator==(const MultiPoly&) const = default;
};

/// Throws ParseError naming the offending token and its offset.
MultiPoly parse_expression(std::string_view text);

} // namespace gdet

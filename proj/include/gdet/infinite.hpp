#pragma once

// Numeric Mahler measures: the classical one-variable measure and the
// measures attached to D_infinity, D_infinity x Z_2 and the discrete
// Heisenberg group (binomial-in-x case).

#include <complex>
#include <map>
#include <vector>

#include "gdet/expr.hpp"
#include "gdet/integer.hpp"

namespace gdet {

using Complex = std::complex<double>;

/// Integer Laurent polynomial in one variable.
struct LaurentPoly {
    std::map<long, Integer> terms; // no zero coefficients

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<const long, Integer>> t);
    static LaurentPoly from_dense(const std::vector<Integer>& coeffs); // coeffs[i] of x^i

    bool is_zero() const { return terms.empty(); }
    /// f(1/x)
    LaurentPoly reversed() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;
};

/// Bivariate integer Laurent polynomial f(y, z); y is the inner (theta) variable.
struct BiLaurent {
    std::map<std::pair<long, long>, Integer> terms;
    bool is_zero() const { return terms.empty(); }
};

/// Requires a polynomial in the single variable var (0 = x, 1 = y, 2 = z).
LaurentPoly to_laurent(const MultiPoly& p, int var = 0);
/// Requires a polynomial in y and z only.
BiLaurent to_bilaurent(const MultiPoly& p);

/// All complex roots of c[0] + c[1] x + .. + c[d] x^d (c[d] != 0).
/// Simultaneous (Aberth) iteration, at most 200 sweeps.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c);

/// log|lead| + sum log max(1, |root|). Integer input is split into
/// square-free parts first so repeated circle roots cost no accuracy.
double mahler_measure(const LaurentPoly& f);
double mahler_measure(const std::vector<Complex>& coeffs);

/// (1/2) m(f f~ - g g~)
double d_infinity_measure(const LaurentPoly& f, const LaurentPoly& g);
/// (1/4) [m(f f~ - g g~) + m(f f~ + g g~)]
double d_infinity_h_measure(const LaurentPoly& f, const LaurentPoly& g);
/// (1/4) m(|f0+f2|^2 - |f1+f3|^2) + (1/4) m(|f0-f2|^2 + |f1-f3|^2)
double d_infinity_h_fourcomponent(const LaurentPoly& f0, const LaurentPoly& f1, const LaurentPoly& f2,
                                  const LaurentPoly& f3);

/// int_0^1 max(m(f0(., e(xi))), m(fk(., e(xi)))) d xi on a uniform grid of
/// `points` values of xi.
double heisenberg_infinite_measure(const BiLaurent& f0, const BiLaurent& fk, unsigned points = 512,
                                   unsigned threads = 0);

} // namespace gdet

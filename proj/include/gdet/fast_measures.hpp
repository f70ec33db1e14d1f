#pragma once

// Group determinants through characters and representations instead of
// the full Cayley matrix.

#include <optional>
#include <span>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/groups.hpp"
#include "gdet/integer.hpp"

namespace gdet {

/// M = M1 * M2^p for H_p, with M1 the Z_p^2 measure of F(x, y, 1) and
/// M2 the product of D(w^j) = det phi_{w^j}(F), j = 1..p-1.
struct HeisenbergFactorization {
    unsigned long p = 0;
    Integer M1;
    Integer M2;
    Integer M;
    std::vector<CycInt> D_values;
    /// Constant coefficient of prod_{x^p=1} F(x, y, 1) mod y^p - 1, when requested.
    std::optional<Integer> c0;
};

/// prod over all characters of Z_p^rank of F; coeffs are indexed in
/// mixed radix (first exponent most significant).
Integer elementary_measure(unsigned long p, unsigned long rank, std::span<const Integer> coeffs);

/// Character product for Z_p^n (or Z_p); throws InvalidParameter for other groups.
Integer abelian_measure(const GroupRingElt& f);

/// phi_l(F) for l = w^j: the p x p matrix with (r, c) entry f_{(r-c) mod p}(l^c, l), 0-indexed.
SquareMatrix<CycInt> heisenberg_phi_matrix(const HeisenbergPoly& f, unsigned long j);

HeisenbergFactorization heisenberg_measure(const HeisenbergPoly& f, bool with_c0 = false);

/// Coefficients c_0..c_{p-1} of prod_{x^p=1} F(x, y, 1) reduced mod y^p - 1.
std::vector<Integer> heisenberg_x_product(const HeisenbergPoly& f);

/// Measure of F = f0(y, z) + x^k fk(y, z). f0 and fk are p x p arrays,
/// row-major in (y-exponent, z-exponent).
HeisenbergFactorization heisenberg_binomial_measure(std::span<const Integer> f0, std::span<const Integer> fk,
                                                    unsigned long k, unsigned long p);

/// det of multiplication by h on Z[x]/(x^n - s), s = +1 or -1; equals
/// the product of h over the roots of x^n - s.
Integer multiplication_determinant(std::span<const Integer> h, int s);

/// Coefficients of f(x)f(1/x) + sign * g(x)g(1/x) reduced mod x^n - s.
std::vector<Integer> reciprocal_combination(std::span<const Integer> f, std::span<const Integer> g, int sign,
                                            unsigned long n, int s);

/// D_{2n}: prod_{x^n=1} (f(x)f(1/x) - g(x)g(1/x)) for F = f(X) + g(X) Y.
Integer dihedral_measure(std::span<const Integer> f, std::span<const Integer> g, unsigned long n);

/// Q_{4n}: prod_{x^n=1} (ff~ - gg~) * prod_{x^n=-1} (ff~ + gg~) for F = f(X) + g(X) Y.
Integer dicyclic_measure(std::span<const Integer> f, std::span<const Integer> g, unsigned long n);

/// Fastest available route for the element's group, falling back to the
/// Cayley determinant.
Integer fast_group_determinant(const GroupRingElt& f);

/// True when fast_group_determinant avoids the Cayley matrix for this group.
bool has_fast_path(const GroupDescriptor& desc);

} // namespace gdet

#pragma once

// Finite groups as Cayley tables, group-ring elements, and the generic
// group determinant det(a_{g_i g_j^{-1}}) used as the reference for every
// faster route in the library.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdet/integer.hpp"
#include "gdet/linalg.hpp"

namespace gdet {

enum class GroupKind { Cyclic, Elementary, Product, Heisenberg, Dihedral, Dicyclic };

/// Names a group by its family and parameters.
///
/// Element exponent vectors follow the generators of each family:
///   cyclic(n)         x                 (x^n = 1)
///   elementary(p, r)  x_1 .. x_r        (Z_p^r)
///   product(n_1..n_r) x_1 .. x_r        (Z_{n_1} x ... x Z_{n_r})
///   heisenberg(p)     x, y, z           (x^p = y^p = z^p = 1, z central, yx = xyz)
///   dihedral(n)       X, Y              (order 2n; X^n = 1, Y^2 = 1, XY = YX^{-1})
///   dicyclic(n)       X, Y              (order 4n; X^{2n} = 1, Y^2 = X^n, XY = YX^{-1})
struct GroupDescriptor {
    GroupKind kind = GroupKind::Cyclic;
    unsigned long p = 0;
    unsigned long n = 0;
    std::vector<unsigned long> factors;

    static GroupDescriptor cyclic(unsigned long n);
    static GroupDescriptor elementary(unsigned long p, unsigned long rank);
    static GroupDescriptor product(std::vector<unsigned long> factors);
    static GroupDescriptor heisenberg(unsigned long p);
    static GroupDescriptor dihedral(unsigned long n);
    static GroupDescriptor dicyclic(unsigned long n);

    std::size_t order() const;
    std::size_t generator_count() const;
    bool is_abelian() const;
    /// Orders of the cyclic factors for abelian kinds.
    std::vector<unsigned long> cyclic_factors() const;
    /// Z_3^2, H_3, D_8, Q_12, Z_4 x Z_2 ...
    std::string name() const;

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

class GroupSpec {
public:
    using Index = std::uint32_t;

    static std::shared_ptr<const GroupSpec> build(const GroupDescriptor& desc, bool check_associativity = true);

    const GroupDescriptor& descriptor() const noexcept { return desc_; }
    std::size_t order() const noexcept { return order_; }

    Index mul(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Index inv(Index a) const { return inv_[a]; }
    const std::string& label(Index a) const { return labels_[a]; }

    /// Element g_1^{e_1} g_2^{e_2} ... for the family's generators; exponents may be negative.
    Index element(std::span<const long> exps) const;
    /// Normal-form exponent vector of an element.
    std::span<const long> exponents(Index a) const;
    Index generator(std::size_t i) const { return generators_[i]; }
    Index power(Index a, long e) const;

private:
    GroupSpec() = default;
    void validate(bool check_associativity) const;

    GroupDescriptor desc_;
    std::size_t order_ = 0;
    std::vector<Index> mul_;
    std::vector<Index> inv_;
    std::vector<std::string> labels_;
    std::vector<long> exps_;
    std::size_t exps_width_ = 0;
    std::vector<Index> generators_;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

/// F = sum_g a_g g in Z[G].
class GroupRingElt {
public:
    explicit GroupRingElt(GroupPtr group);
    GroupRingElt(GroupPtr group, std::vector<Integer> coeffs);

    const GroupSpec& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    Integer& operator[](GroupSpec::Index g) { return coeffs_[g]; }
    const Integer& operator[](GroupSpec::Index g) const { return coeffs_[g]; }

    /// Sum of coefficients, the value at the trivial character.
    Integer augmentation() const;

private:
    GroupPtr group_;
    std::vector<Integer> coeffs_;
};

/// (F1 * F2)(g) = sum_h F1(h) F2(h^{-1} g).
GroupRingElt convolve(const GroupRingElt& f1, const GroupRingElt& f2);

/// The order x order matrix M[i][j] = a_{g_i g_j^{-1}}.
SquareMatrix<Integer> cayley_matrix(const GroupRingElt& f);

/// Exact group determinant via Bareiss on the Cayley matrix.
Integer group_determinant(const GroupRingElt& f);

/// F = sum a_{ijk} x^i y^j z^k over H_p, 0 <= i, j, k < p.
class HeisenbergPoly {
public:
    explicit HeisenbergPoly(unsigned long p);
    HeisenbergPoly(unsigned long p, std::vector<Integer> coeffs);

    unsigned long prime() const noexcept { return p_; }
    Integer& at(unsigned long i, unsigned long j, unsigned long k) { return a_[(i * p_ + j) * p_ + k]; }
    const Integer& at(unsigned long i, unsigned long j, unsigned long k) const { return a_[(i * p_ + j) * p_ + k]; }
    std::span<const Integer> coeffs() const noexcept { return a_; }

    /// Adds c to the coefficient of x^i y^j z^k, exponents reduced mod p.
    void add(long i, long j, long k, const Integer& c);

    /// F(1, 1, 1).
    Integer value_at_one() const;
    /// Coefficients of f_i(y, z) = sum_{j,k} a_{ijk} y^j z^k, row-major in (j, k).
    std::vector<Integer> slice(unsigned long i) const;
    /// Coefficients b_{ij} of F(x, y, 1), row-major in (i, j).
    std::vector<Integer> at_z_one() const;

    HeisenbergPoly operator-() const;
    friend bool operator==(const HeisenbergPoly&, const HeisenbergPoly&) = default;

private:
    unsigned long p_;
    std::vector<Integer> a_;
};

/// One letter of a word over x, y, z and their inverses, e.g. y^-1.
struct Letter {
    char gen;
    long power;
};
using Word = std::vector<Letter>;

/// Parses words such as "yyx", "x^-1 y^2 z", "1" (the empty word).
Word parse_word(std::string_view text);

/// Normal form (a, b, c) of x^a y^b z^c for a word, by rewriting y x -> x y z.
std::array<unsigned long, 3> heisenberg_reduce(const Word& word, unsigned long p);

HeisenbergPoly heisenberg_normal_form(std::span<const std::pair<Word, Integer>> terms, unsigned long p);
/// Convenience overload taking words as text.
HeisenbergPoly heisenberg_normal_form(std::span<const std::pair<std::string, Integer>> terms, unsigned long p);

GroupRingElt to_group_ring(const HeisenbergPoly& f, GroupPtr group);
GroupRingElt to_group_ring(const HeisenbergPoly& f);

} // namespace gdet

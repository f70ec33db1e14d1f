#pragma once

// Constructions and checkers for the congruence, achievability and
// divisibility results on Z_p^2 and H_p group determinants.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdet/fast_measures.hpp"
#include "gdet/groups.hpp"
#include "gdet/integer.hpp"

namespace gdet {

/// M = F(1,1,1)^{p^3} mod p^3, residues normalized into [0, p^3).
struct CongruenceReport {
    Integer M;
    Integer base;
    Integer modulus;
    Integer lhs_residue;
    Integer rhs_residue;
    bool holds = false;
};

enum class SharpFamily { Zp2, Heisenberg };

struct SharpnessReport {
    SharpFamily family = SharpFamily::Zp2;
    unsigned long p = 0;
    unsigned long k = 0;
    /// False when the input was not a multiple of p (nothing to check).
    bool applicable = true;
    Integer M;
    unsigned long expected_valuation = 0;
    /// nullopt for M = 0 (infinite valuation).
    std::optional<unsigned long> actual_valuation;
    /// actual >= expected (divisibility checks).
    bool divisible = false;
    /// actual == expected (sharp families).
    bool exact = false;
};

/// Bivariate polynomial over Z_p^2 as a p x p array, row-major in (x, y) exponents.
struct BivariatePoly {
    unsigned long p = 0;
    std::vector<Integer> coeffs;

    const Integer& at(unsigned long i, unsigned long j) const { return coeffs[i * p + j]; }
    Integer& at(unsigned long i, unsigned long j) { return coeffs[i * p + j]; }
    Integer value_at_one() const;
};

/// x^{p-1} = 1 mod p^n with gcd(x, p) = 1.
bool t_n_member(const Integer& x, unsigned long p, unsigned long n);

CongruenceReport verify_congruence_main(const HeisenbergPoly& f);
CongruenceReport verify_congruence_main(const HeisenbergPoly& f, const Integer& M);

struct AchieveResult {
    HeisenbergPoly poly;
    Integer M;
    Integer expected;
    bool verified = false;
};

/// F with M_{H_p}(F) = a^{p^2} + m p^3 for p not dividing a, a >= 1.
AchieveResult achieve_construction(const Integer& a, const Integer& m, unsigned long p);

/// A1 p^{1+k} + A2 (1 - x) + A3 (1 - y)^2 over Z_p^2, p >= 5.
BivariatePoly zp2_sharp_polynomial(unsigned long p, unsigned long k, const Integer& a1, const Integer& a2,
                                   const Integer& a3);
std::pair<BivariatePoly, SharpnessReport> zp2_sharp_family(unsigned long p, unsigned long k, const Integer& a1 = 1,
                                                           const Integer& a2 = 1, const Integer& a3 = 1);

/// p | M_{Z_p^2}(F) implies p^{p+3} | M.
SharpnessReport zp2_divisibility_check(const BivariatePoly& f);

/// Smallest 2 <= A <= p-2 with A^p != A mod p^2.
unsigned long smallest_non_wieferich_base(unsigned long p);

/// p + (A-1)^2 (1 - x) - (1 - y)^2 over H_p, p >= 5.
HeisenbergPoly heisenberg_sharp_polynomial(unsigned long p);
std::pair<HeisenbergPoly, SharpnessReport> heisenberg_sharp_family(unsigned long p);

/// p | M_{H_p}(F) implies p^{p^2+3} | M.
SharpnessReport heisenberg_divisibility_check(const HeisenbergPoly& f);
SharpnessReport heisenberg_divisibility_check(const HeisenbergPoly& f, const Integer& M);

struct FamilyValue {
    int family = 0; // 1..5
    Integer m;
    bool negated = false;
    HeisenbergPoly poly;
    Integer claimed;
    Integer computed;
    bool matches = false;
};

/// The five explicit H_3 families at parameter m, each also negated.
std::vector<FamilyValue> h3_family_values(const Integer& m);
/// Single family polynomial (1..5) at parameter m.
HeisenbergPoly h3_family_polynomial(int family, const Integer& m);
Integer h3_family_claim(int family, const Integer& m);

/// (1/p) sum_{y^p=1} f(y)^p = prod_{y^p=1} f(y) mod p^2.
struct Lemma1Report {
    Integer power_sum; // (1/p) sum f(y)^p
    Integer product;   // prod f(y)
    bool holds = false;
};
Lemma1Report lemma1_check(std::span<const Integer> f, unsigned long p);

/// For P = 1 + e_1 x + .. + e_n x^n, p | e_i, n < p: coefficients of
/// prod (1 + alpha_i^p x) are all divisible by p^3.
struct Lemma2Report {
    std::vector<Integer> powered; // e_1..e_n of the alpha_i^p
    bool holds = false;
};
Lemma2Report lemma2_check(std::span<const Integer> e, unsigned long p);

/// gcd(M, p) = 1 required; membership of M in T_3.
bool s1_classification_check(const Integer& M, unsigned long p);

} // namespace gdet

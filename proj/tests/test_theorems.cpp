#include "doctest.h"

#include <random>
#include <vector>

#include "gdet/cyclotomic.hpp"
#include "gdet/error.hpp"
#include "gdet/fast_measures.hpp"
#include "gdet/groups.hpp"
#include "gdet/linalg.hpp"
#include "gdet/theorems.hpp"

using namespace gdet;

namespace {

Integer cayley(const HeisenbergPoly& f) { return group_determinant(to_group_ring(f)); }

HeisenbergPoly random_heisenberg(unsigned long p, std::mt19937_64& rng, long h) {
    std::uniform_int_distribution<long> coef(-h, h);
    std::vector<Integer> a(p * p * p);
    for (auto& v : a) v = coef(rng);
    return HeisenbergPoly(p, a);
}

// product of f over the p-th roots of unity as a circulant determinant
Integer circulant_product(const std::vector<Integer>& f, unsigned long p) {
    std::vector<Integer> red(p, 0);
    for (std::size_t i = 0; i < f.size(); ++i) red[i % p] += f[i];
    SquareMatrix<Integer> m(p, Integer(0));
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) m(r, c) = red[(c + p - r) % p];
    return det_bareiss(m);
}

// constant coefficient of f^p mod y^p - 1, i.e. (1/p) sum over roots of f(y)^p
Integer power_sum_over_p(const std::vector<Integer>& f, unsigned long p) {
    std::vector<Integer> red(p, 0), acc(p, 0);
    for (std::size_t i = 0; i < f.size(); ++i) red[i % p] += f[i];
    acc[0] = 1;
    for (unsigned long t = 0; t < p; ++t) {
        std::vector<Integer> next(p, 0);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) next[(i + j) % p] += acc[i] * red[j];
        acc = next;
    }
    return acc[0];
}

// e_i(alpha^p) via prod_k P(w^k t) = prod_i (1 + alpha_i^p t^p) for odd p
std::vector<Integer> powered_symmetric(const std::vector<Integer>& P, unsigned long p) {
    std::vector<CycInt> acc{CycInt(p, Integer(1))};
    for (unsigned long k = 0; k < p; ++k) {
        std::vector<CycInt> next(acc.size() + P.size() - 1, CycInt(p));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < P.size(); ++j)
                next[i + j] += acc[i] * (CycInt::root_power(p, static_cast<long>(k * j)) * P[j]);
        acc = next;
    }
    std::vector<Integer> out;
    for (std::size_t i = p; i < acc.size(); i += p) out.push_back(*cyc_is_integer(acc[i]));
    while (!out.empty() && out.back() == 0) out.pop_back(); // P may have trailing zero coefficients
    return out;
}

bool brute_t_member(long x, unsigned long p, unsigned long n) {
    const long mod = static_cast<long>(pow(Integer(p), n).get_si());
    if (x % static_cast<long>(p) == 0) return false;
    long r = 1, b = ((x % mod) + mod) % mod;
    for (unsigned long i = 0; i + 1 < p; ++i) r = r * b % mod;
    return r == 1;
}

} // namespace

TEST_CASE("T_n membership") {
    for (unsigned long p : {3ul, 5ul, 7ul})
        for (unsigned long n : {1ul, 2ul, 3ul}) CHECK(t_n_member(1, p, n));
    std::vector<long> members;
    for (long x = 0; x < 27; ++x)
        if (t_n_member(x, 3, 3)) members.push_back(x);
    CHECK(members == std::vector<long>{1, 26});
    CHECK(t_n_member(8, 3, 2));
    for (unsigned long p : {3ul, 5ul, 7ul})
        for (long x = -400; x <= 400; ++x)
            for (unsigned long n : {1ul, 2ul, 3ul}) REQUIRE(t_n_member(x, p, n) == brute_t_member(x, p, n));
}

TEST_CASE("congruence on random inputs") {
    std::mt19937_64 rng(41);
    HeisenbergPoly one(3);
    one.add(0, 0, 0, 1);
    CHECK(verify_congruence_main(one).holds);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_heisenberg(3, rng, 4);
        const auto r = verify_congruence_main(f);
        CHECK(r.holds);
        CHECK(r.modulus == 27);
        CHECK(r.base == f.value_at_one());
        if (trial % 3 == 0) {
            f.add(0, 0, 0, -mod_nonneg(f.value_at_one(), 3));
            const auto z = verify_congruence_main(f);
            CHECK(z.lhs_residue == 0);
            CHECK(z.rhs_residue == 0);
        }
    }
}

TEST_CASE("achieve construction") {
    CHECK(achieve_construction(1, 0, 3).M == 1);
    CHECK(achieve_construction(2, 0, 3).M == 512);
    const auto r = achieve_construction(2, 1, 3);
    CHECK(r.M == 539);
    CHECK(r.verified);
    CHECK(cayley(r.poly) == 539);
    CHECK(cayley(achieve_construction(1, -1, 3).poly) == -26);
    CHECK(cayley(achieve_construction(4, 2, 3).poly) == pow(Integer(4), 9) + 54);
    CHECK(achieve_construction(3, 1, 5).M == pow(Integer(3), 25) + 125);
    CHECK_THROWS_AS(achieve_construction(3, 0, 3), Error);
    CHECK_THROWS_AS(achieve_construction(0, 0, 3), Error);
    CHECK_THROWS_AS(achieve_construction(2, 0, 9), Error);
}

TEST_CASE("Z_p^2 bounds and the sharp family") {
    CHECK(zp2_sharp_family(5, 0).second.actual_valuation == 8ul);
    CHECK(zp2_sharp_family(5, 2).second.actual_valuation == 10ul);
    CHECK(zp2_sharp_family(7, 0).second.actual_valuation == 10ul);
    const auto [poly, rep] = zp2_sharp_family(5, 1, 2, 3, 4);
    CHECK(rep.exact);
    CHECK(rep.expected_valuation == 9);
    CHECK(elementary_measure(5, 2, poly.coeffs) == rep.M);
    CHECK_THROWS_AS(zp2_sharp_family(3, 0), Error);
    CHECK_THROWS_AS(zp2_sharp_family(5, 0, 5), Error);

    // all-ones: F(1,1) = p^2 and every other character vanishes
    BivariatePoly ones{5, std::vector<Integer>(25, 1)};
    const auto z = zp2_divisibility_check(ones);
    CHECK_FALSE(z.actual_valuation.has_value());
    CHECK(z.divisible);

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (unsigned long p : {3ul, 5ul}) {
        for (int trial = 0; trial < 30; ++trial) {
            BivariatePoly f{p, std::vector<Integer>(p * p)};
            for (auto& v : f.coeffs) v = coef(rng);
            f.coeffs[0] -= mod_nonneg(f.value_at_one(), p);
            const auto r = zp2_divisibility_check(f);
            CHECK(r.applicable);
            CHECK(r.divisible);
            CHECK(r.expected_valuation == (p == 3 ? 6 : p + 3));
        }
    }
    BivariatePoly unit{3, std::vector<Integer>(9, 0)};
    unit.coeffs[0] = 1;
    CHECK_FALSE(zp2_divisibility_check(unit).applicable);
}

TEST_CASE("Heisenberg bound and the sharp family") {
    CHECK(smallest_non_wieferich_base(5) == 2);
    CHECK(smallest_non_wieferich_base(7) == 2);
    CHECK(smallest_non_wieferich_base(1093) == 3);
    CHECK(smallest_non_wieferich_base(3511) == 3);

    const auto [f5, r5] = heisenberg_sharp_family(5);
    CHECK(r5.expected_valuation == 28);
    CHECK(r5.actual_valuation == 28ul);
    CHECK(r5.exact);
    CHECK(f5.value_at_one() == 5);
    CHECK_THROWS_AS(heisenberg_sharp_family(3), Error);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_heisenberg(3, rng, 3);
        f.add(0, 0, 0, -mod_nonneg(f.value_at_one(), 3));
        const auto r = heisenberg_divisibility_check(f);
        CHECK(r.divisible);
        CHECK(r.expected_valuation == 12);
        std::vector<Integer> scaled(f.coeffs().begin(), f.coeffs().end());
        for (auto& v : scaled) v *= 3;
        const auto s = heisenberg_divisibility_check(HeisenbergPoly(3, scaled));
        if (s.actual_valuation) CHECK(*s.actual_valuation >= 27);
    }
}

TEST_CASE("the five H_3 families") {
    const Integer t12 = pow(Integer(3), 12);
    CHECK(h3_family_claim(1, 0) == 531441);
    CHECK(h3_family_claim(2, 0) == 1062882);
    CHECK(h3_family_claim(4, 1) == 4782969);
    for (long m : {-1L, 0L, 2L}) {
        for (int fam = 1; fam <= 5; ++fam) {
            const auto f = h3_family_polynomial(fam, m);
            CHECK(cayley(f) == h3_family_claim(fam, m));
            CHECK(cayley(-f) == -h3_family_claim(fam, m));
        }
    }
    for (long m = -5; m <= 5; ++m) {
        const Integer M = m;
        const std::vector<Integer> expected{t12 * (1 + 9 * M), t12 * (2 + 9 * M), t12 * 3 * (1 + 3 * M),
                                            t12 * 9 * M, t12 * (4 + 9 * M)};
        const auto vals = h3_family_values(m);
        REQUIRE(vals.size() == 10);
        for (const auto& v : vals) {
            CHECK(v.matches);
            CHECK(v.computed == (v.negated ? -expected[v.family - 1] : expected[v.family - 1]));
        }
    }
    CHECK_THROWS_AS(h3_family_polynomial(6, 0), Error);
}

TEST_CASE("lemma 1 against independent sums and circulants") {
    const std::vector<Integer> one_plus_y{1, 1};
    const auto r = lemma1_check(one_plus_y, 3);
    CHECK(r.product == 2);
    CHECK(r.power_sum == 2); // (8 - 1 - 1) / 3, since (1 + w)^3 = -1
    CHECK(r.holds);

    std::mt19937_64 rng(44);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Integer> f(1 + trial % p);
            for (auto& v : f) v = coef(rng);
            const auto rep = lemma1_check(f, p);
            CHECK(rep.product == circulant_product(f, p));
            CHECK(rep.power_sum == power_sum_over_p(f, p));
            CHECK(rep.holds);
        }
        const std::vector<Integer> c{7};
        CHECK(lemma1_check(c, p).power_sum == pow(Integer(7), p));
    }
}

TEST_CASE("lemma 2 against the root-of-unity product") {
    const std::vector<Integer> simple{1, 3};
    CHECK(lemma2_check(simple, 3).powered == std::vector<Integer>{27});

    const std::vector<Integer> p3{1, 3, 3};
    const auto r = lemma2_check(p3, 3);
    CHECK(r.holds);
    CHECK(r.powered == powered_symmetric(p3, 3));
    // with p = 5 the coefficients 3 are not multiples of p
    CHECK_THROWS_AS(lemma2_check(p3, 5), Error);
    const std::vector<Integer> bad_const{2, 5};
    CHECK_THROWS_AS(lemma2_check(bad_const, 5), Error);
    const std::vector<Integer> too_long{1, 3, 3, 3};
    CHECK_THROWS_AS(lemma2_check(too_long, 3), Error);

    std::mt19937_64 rng(45);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (unsigned long p : {5ul, 7ul}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Integer> P(2 + trial % (p - 1));
            P[0] = 1;
            for (std::size_t i = 1; i < P.size(); ++i) P[i] = coef(rng) * Integer(p);
            const auto rep = lemma2_check(P, p);
            CHECK(rep.holds);
            CHECK(rep.powered == powered_symmetric(P, p));
        }
    }
}

TEST_CASE("coprime values classification") {
    CHECK(s1_classification_check(512, 3));
    CHECK(s1_classification_check(539, 3));
    CHECK_FALSE(s1_classification_check(2, 3));
    CHECK(s1_classification_check(-26, 3));
    CHECK_THROWS_AS(s1_classification_check(27, 3), Error);
}

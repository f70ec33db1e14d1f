#include "gdet/theorems.hpp"

#include <numeric>

#include "gdet/cyclotomic.hpp"
#include "gdet/error.hpp"

namespace gdet {

namespace {

Integer p_power(unsigned long p, unsigned long e) { return pow(Integer(p), e); }

bool divides(unsigned long p, const Integer& a) { return mpz_divisible_ui_p(a.get_mpz_t(), p) != 0; }

// Product of two polynomials reduced mod y^p - 1.
std::vector<Integer> cyclic_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const std::size_t p = a.size();
    std::vector<Integer> r(p);
    for (std::size_t i = 0; i < p; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < p; ++j) mpz_addmul(r[(i + j) % p].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

std::vector<Integer> cyclic_pow(const std::vector<Integer>& a, unsigned long e) {
    std::vector<Integer> r(a.size());
    r[0] = 1;
    for (unsigned long t = 0; t < e; ++t) r = cyclic_mul(r, a);
    return r;
}

Integer divide_exact(const Integer& a, const Integer& d, const char* what) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (sgn(r) != 0) {
        throw Error(ErrorKind::InexactDivision, std::string(what) + ": " + a.get_str() + " / " + d.get_str());
    }
    return q;
}

SharpnessReport make_report(SharpFamily family, unsigned long p, const Integer& M, unsigned long expected) {
    SharpnessReport r;
    r.family = family;
    r.p = p;
    r.M = M;
    r.expected_valuation = expected;
    r.actual_valuation = valuation(M, p);
    r.applicable = sgn(M) == 0 || divides(p, M);
    r.divisible = !r.actual_valuation || *r.actual_valuation >= expected;
    r.exact = r.actual_valuation && *r.actual_valuation == expected;
    return r;
}

} // namespace

Integer BivariatePoly::value_at_one() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), Integer(0));
}

bool t_n_member(const Integer& x, unsigned long p, unsigned long n) {
    if (divides(p, x)) return false;
    const Integer modulus = p_power(p, n);
    return pow_mod(x, Integer(p - 1), modulus) == 1 % modulus;
}

CongruenceReport verify_congruence_main(const HeisenbergPoly& f, const Integer& M) {
    const unsigned long p = f.prime();
    CongruenceReport r;
    r.M = M;
    r.base = f.value_at_one();
    r.modulus = p_power(p, 3);
    r.lhs_residue = mod_nonneg(M, r.modulus);
    r.rhs_residue = pow_mod(r.base, r.modulus, r.modulus);
    r.holds = r.lhs_residue == r.rhs_residue;
    return r;
}

CongruenceReport verify_congruence_main(const HeisenbergPoly& f) {
    return verify_congruence_main(f, heisenberg_measure(f).M);
}

AchieveResult achieve_construction(const Integer& a, const Integer& m, unsigned long p) {
    require_odd_prime(p, "achieve construction");
    if (sgn(a) <= 0 || !a.fits_ulong_p() || a > 1000000) {
        throw Error(ErrorKind::InvalidParameter, "a must be a positive integer below 10^6");
    }
    if (divides(p, a)) throw Error(ErrorKind::InvalidParameter, "p divides a");
    const unsigned long av = a.get_ui();

    // (1 + y + .. + y^{a-1})^p = a + p g(y) mod y^p - 1
    std::vector<Integer> geometric(p);
    for (unsigned long i = 0; i < av; ++i) geometric[i % p] += 1;
    auto s = cyclic_pow(geometric, p);
    s[0] -= a;
    std::vector<Integer> g(p);
    for (unsigned long i = 0; i < p; ++i) g[i] = divide_exact(s[i], Integer(p), "g(y)");

    // (a + p g(y))^p = a^p + p^2 h(y) mod y^p - 1
    std::vector<Integer> base(p);
    for (unsigned long i = 0; i < p; ++i) base[i] = Integer(p) * g[i];
    base[0] += a;
    auto t = cyclic_pow(base, p);
    t[0] -= pow(a, p);
    std::vector<Integer> h(p);
    const Integer p2 = p_power(p, 2);
    for (unsigned long i = 0; i < p; ++i) h[i] = divide_exact(t[i], p2, "h(y)");

    // F = (1 + z + .. + z^{a-1}) + g(y) Phi(z) + h(x) Phi(y) Phi(z) + m Phi(x) Phi(y) Phi(z)
    HeisenbergPoly f(p);
    for (unsigned long i = 0; i < av; ++i) f.at(0, 0, i % p) += 1;
    for (unsigned long j = 0; j < p; ++j)
        for (unsigned long k = 0; k < p; ++k) f.at(0, j, k) += g[j];
    for (unsigned long i = 0; i < p; ++i)
        for (unsigned long j = 0; j < p; ++j)
            for (unsigned long k = 0; k < p; ++k) f.at(i, j, k) += h[i] + m;

    AchieveResult out{f, heisenberg_measure(f).M, pow(a, p * p) + m * p_power(p, 3), false};
    out.verified = out.M == out.expected;
    return out;
}

BivariatePoly zp2_sharp_polynomial(unsigned long p, unsigned long k, const Integer& a1, const Integer& a2,
                                   const Integer& a3) {
    require_odd_prime(p, "Z_p^2 sharp family");
    if (p < 5) throw Error(ErrorKind::InvalidParameter, "Z_p^2 sharp family needs p >= 5; p = 3 is covered separately");
    if (divides(p, a1) || divides(p, a2) || divides(p, a3)) {
        throw Error(ErrorKind::InvalidParameter, "p must not divide A1 A2 A3");
    }
    BivariatePoly f{p, std::vector<Integer>(p * p)};
    f.at(0, 0) = a1 * p_power(p, 1 + k) + a2 + a3;
    f.at(1, 0) = -a2;
    f.at(0, 1) = -2 * a3;
    f.at(0, 2) = a3;
    return f;
}

std::pair<BivariatePoly, SharpnessReport> zp2_sharp_family(unsigned long p, unsigned long k, const Integer& a1,
                                                           const Integer& a2, const Integer& a3) {
    auto f = zp2_sharp_polynomial(p, k, a1, a2, a3);
    auto report = make_report(SharpFamily::Zp2, p, elementary_measure(p, 2, f.coeffs), p + 3 + k);
    report.k = k;
    return {std::move(f), report};
}

SharpnessReport zp2_divisibility_check(const BivariatePoly& f) {
    return make_report(SharpFamily::Zp2, f.p, elementary_measure(f.p, 2, f.coeffs), f.p + 3);
}

unsigned long smallest_non_wieferich_base(unsigned long p) {
    require_odd_prime(p, "non-Wieferich base search");
    const Integer p2 = p_power(p, 2);
    for (unsigned long a = 2; a + 2 <= p; ++a) {
        if (pow_mod(Integer(a), Integer(p), p2) != a) return a;
    }
    throw Error(ErrorKind::InvalidParameter, "no base in [2, p-2] for p = " + std::to_string(p));
}

HeisenbergPoly heisenberg_sharp_polynomial(unsigned long p) {
    require_odd_prime(p, "heisenberg sharp family");
    if (p < 5) throw Error(ErrorKind::InvalidParameter, "heisenberg sharp family needs p >= 5; p = 3 is covered separately");
    const unsigned long a = smallest_non_wieferich_base(p);
    const Integer sq = Integer(a - 1) * Integer(a - 1);
    // p + (A-1)^2 (1 - x) - (1 - 2y + y^2)
    HeisenbergPoly f(p);
    f.at(0, 0, 0) = Integer(p) + sq - 1;
    f.at(1, 0, 0) = -sq;
    f.at(0, 1, 0) = 2;
    f.at(0, 2, 0) = -1;
    return f;
}

std::pair<HeisenbergPoly, SharpnessReport> heisenberg_sharp_family(unsigned long p) {
    auto f = heisenberg_sharp_polynomial(p);
    auto report = make_report(SharpFamily::Heisenberg, p, heisenberg_measure(f).M, p * p + 3);
    return {std::move(f), report};
}

SharpnessReport heisenberg_divisibility_check(const HeisenbergPoly& f, const Integer& M) {
    return make_report(SharpFamily::Heisenberg, f.prime(), M, f.prime() * f.prime() + 3);
}

SharpnessReport heisenberg_divisibility_check(const HeisenbergPoly& f) {
    return heisenberg_divisibility_check(f, heisenberg_measure(f).M);
}

HeisenbergPoly h3_family_polynomial(int family, const Integer& m) {
    // Monomials are read y-first (y^j x^i z^k): with the x-first reading the
    // fifth family evaluates to 3^12 4^10 at m = 0 instead of 3^12 4.
    std::vector<std::pair<std::string, Integer>> t;
    const std::string ypow[] = {"", "y", "yy"};
    auto word = [](const std::string& w) { return w.empty() ? std::string("1") : w; };
    switch (family) {
    case 1: // z + y - y^2 + (y+1)x
        t = {{"z", 1}, {"y", 1}, {"yy", -1}, {"yx", 1}, {"x", 1}};
        break;
    case 2: // 1 + 2x + x^2 Phi(y)
        t = {{"1", 1}, {"x", 2}};
        for (const auto& y : ypow) t.emplace_back(y + "xx", 1);
        break;
    case 3: // 1 + 2x + (z + x^2) Phi(y)
        t = {{"1", 1}, {"x", 2}};
        for (const auto& y : ypow) {
            t.emplace_back("z" + y, 1);
            t.emplace_back(y + "xx", 1);
        }
        break;
    case 4: // 1 + 2x - x Phi(y)
        t = {{"1", 1}, {"x", 2}};
        for (const auto& y : ypow) t.emplace_back(y + "x", -1);
        break;
    case 5: // 1 + y - y^2 + (y+1)x + Phi(x)Phi(y) + (z-1)Phi(y) + (z-1)^2 x Phi(y)
        t = {{"1", 1}, {"y", 1}, {"yy", -1}, {"yx", 1}, {"x", 1}};
        for (const auto& y : ypow) {
            for (const char* xs : {"", "x", "xx"}) t.emplace_back(word(y + xs), 1);
            t.emplace_back("z" + y, 1);
            t.emplace_back(word(y), -1);
            t.emplace_back("zz" + y + "x", 1);
            t.emplace_back("z" + y + "x", -2);
            t.emplace_back(y + "x", 1);
        }
        break;
    default: throw Error(ErrorKind::InvalidParameter, "H_3 families are numbered 1..5");
    }
    HeisenbergPoly f = heisenberg_normal_form(std::span<const std::pair<std::string, Integer>>(t), 3);
    // + m Phi(x) Phi(y) Phi(z)
    for (unsigned long i = 0; i < 3; ++i)
        for (unsigned long j = 0; j < 3; ++j)
            for (unsigned long k = 0; k < 3; ++k) f.at(i, j, k) += m;
    return f;
}

Integer h3_family_claim(int family, const Integer& m) {
    const Integer p12 = p_power(3, 12);
    switch (family) {
    case 1: return p12 * (1 + 9 * m);
    case 2: return p12 * (2 + 9 * m);
    case 3: return p_power(3, 13) * (1 + 3 * m);
    case 4: return p_power(3, 14) * m;
    case 5: return p12 * (4 + 9 * m);
    default: throw Error(ErrorKind::InvalidParameter, "H_3 families are numbered 1..5");
    }
}

std::vector<FamilyValue> h3_family_values(const Integer& m) {
    std::vector<FamilyValue> out;
    for (int family = 1; family <= 5; ++family) {
        const HeisenbergPoly f = h3_family_polynomial(family, m);
        const Integer claim = h3_family_claim(family, m);
        for (bool negated : {false, true}) {
            HeisenbergPoly g = negated ? -f : f;
            Integer computed = heisenberg_measure(g).M;
            Integer claimed = negated ? Integer(-claim) : claim;
            const bool ok = computed == claimed;
            out.push_back(FamilyValue{family, m, negated, std::move(g), claimed, computed, ok});
        }
    }
    return out;
}

Lemma1Report lemma1_check(std::span<const Integer> f, unsigned long p) {
    require_odd_prime(p, "lemma 1 check");
    Lemma1Report r;
    CycInt sum(p), prod(p, Integer(1));
    for (unsigned long j = 0; j < p; ++j) {
        const CycInt v = cyc_eval(f, static_cast<long>(j), p);
        CycInt vp(p, Integer(1));
        for (unsigned long t = 0; t < p; ++t) vp *= v;
        sum += vp;
        prod *= v;
    }
    auto s = sum.as_integer();
    auto q = prod.as_integer();
    if (!s || !q) throw Error(ErrorKind::NotInteger, "power sum or product over p-th roots is not rational");
    r.power_sum = divide_exact(*s, Integer(p), "sum of f(y)^p");
    r.product = *q;
    r.holds = mod_nonneg(r.power_sum - r.product, p_power(p, 2)) == 0;
    return r;
}

Lemma2Report lemma2_check(std::span<const Integer> e, unsigned long p) {
    require_odd_prime(p, "lemma 2 check");
    std::size_t len = e.size();
    while (len > 1 && sgn(e[len - 1]) == 0) --len;
    if (len == 0 || e[0] != 1) throw Error(ErrorKind::PreconditionViolated, "constant term must be 1");
    const std::size_t n = len - 1;
    if (n >= p) throw Error(ErrorKind::PreconditionViolated, "degree must be below p");
    for (std::size_t i = 1; i <= n; ++i) {
        if (!divides(p, e[i])) {
            throw Error(ErrorKind::PreconditionViolated, "p does not divide e_" + std::to_string(i));
        }
    }
    Lemma2Report r;
    if (n == 0) {
        r.holds = true;
        return r;
    }
    // power sums s_1..s_{np} of the alpha_i (Newton, no division)
    const std::size_t top = n * p;
    auto ecoef = [&](std::size_t i) -> Integer { return i <= n ? e[i] : Integer(0); };
    std::vector<Integer> s(top + 1);
    for (std::size_t k = 1; k <= top; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i < k && i <= n; ++i) {
            if (i % 2 == 1) acc += ecoef(i) * s[k - i];
            else acc -= ecoef(i) * s[k - i];
        }
        if (k <= n) {
            const Integer term = Integer(static_cast<unsigned long>(k)) * ecoef(k);
            if (k % 2 == 1) acc += term;
            else acc -= term;
        }
        s[k] = acc;
    }
    // elementary symmetric functions of the alpha_i^p over Q
    std::vector<mpq_class> E(n + 1);
    E[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const mpq_class term = E[k - i] * mpq_class(s[i * p]);
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        E[k] = acc / static_cast<long>(k);
        E[k].canonicalize();
    }
    const Integer p3 = p_power(p, 3);
    r.holds = true;
    for (std::size_t k = 1; k <= n; ++k) {
        if (E[k].get_den() != 1) {
            throw Error(ErrorKind::InexactDivision, "e_" + std::to_string(k) + " of the p-th powers is not integral");
        }
        r.powered.push_back(E[k].get_num());
        if (mod_nonneg(E[k].get_num(), p3) != 0) r.holds = false;
    }
    return r;
}

bool s1_classification_check(const Integer& M, unsigned long p) {
    if (divides(p, M)) {
        throw Error(ErrorKind::PreconditionViolated, "M = " + M.get_str() + " is a multiple of p");
    }
    return t_n_member(M, p, 3);
}

} // namespace gdet

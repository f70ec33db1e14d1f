#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "gdet/error.hpp"
#include "gdet/expr.hpp"
#include "gdet/infinite.hpp"

using namespace gdet;

namespace {

constexpr double lehmer_log = 0.16235761200773;

LaurentPoly lp(const char* text) { return to_laurent(parse_expression(text)); }

// dense coefficients, constant term first
std::vector<Integer> dense(const LaurentPoly& f) {
    std::vector<Integer> out(f.terms.rbegin()->first + 1, 0);
    for (const auto& [e, c] : f.terms) out[e] = c;
    return out;
}

std::vector<Integer> exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = num[i + den.size() - 1] / den.back();
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    for (const auto& r : num) REQUIRE(r == 0);
    return q;
}

// Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d
std::vector<Integer> cyclotomic(unsigned n) {
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = exact_div(num, cyclotomic(d));
    return num;
}

LaurentPoly random_poly(std::mt19937_64& rng, int degree, long h) {
    std::uniform_int_distribution<long> coef(-h, h);
    std::vector<Integer> c(degree + 1);
    for (auto& v : c) v = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    while (c.front() == 0) c.front() = coef(rng);
    return LaurentPoly::from_dense(c);
}

// Midpoint double sum of max(inner measures) with the inner integral done by quadrature too.
double riemann_heisenberg(const BiLaurent& f0, const BiLaurent& fk, unsigned n) {
    auto eval = [](const BiLaurent& f, double th, double xi) {
        std::complex<double> s = 0;
        for (const auto& [e, c] : f.terms)
            s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * (e.first * th + e.second * xi));
        return std::log(std::abs(s));
    };
    double total = 0;
    for (unsigned i = 0; i < n; ++i) {
        const double xi = (i + 0.5) / n;
        double a = 0, b = 0;
        for (unsigned j = 0; j < n; ++j) {
            const double th = (j + 0.5) / n;
            a += eval(f0, th, xi);
            b += eval(fk, th, xi);
        }
        total += std::max(a, b) / n;
    }
    return total / n;
}

} // namespace

TEST_CASE("root finder") {
    auto roots = polynomial_roots({Complex(-1), Complex(0), Complex(1)});
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(roots[0].real() == doctest::Approx(-1).epsilon(1e-12));
    CHECK(roots[1].real() == doctest::Approx(1).epsilon(1e-12));
    CHECK_THROWS_AS(polynomial_roots({Complex(1), Complex(0)}), Error);

    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Complex> want(1 + trial % 12);
        for (auto& r : want) r = {u(rng), u(rng)};
        std::vector<Complex> c{1};
        for (const auto& r : want) {
            std::vector<Complex> next(c.size() + 1, 0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= r * c[i];
            }
            c = next;
        }
        const auto got = polynomial_roots(c);
        for (const auto& r : want) {
            double best = 1e9;
            for (const auto& g : got) best = std::min(best, std::abs(g - r));
            CHECK(best < 1e-7);
        }
    }
}

TEST_CASE("classical Mahler measure") {
    CHECK(mahler_measure(lp("2")) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(mahler_measure(lp("x-2")) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(mahler_measure(lp("2x-1")) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(mahler_measure(lp("x^-3(x-2)")) == doctest::Approx(std::log(2)).epsilon(1e-12));
    const double lehmer = mahler_measure(lp("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"));
    CHECK(std::abs(lehmer - lehmer_log) < 1e-9);
    CHECK(std::abs(std::exp(lehmer) - 1.17628081825992) < 1e-9);
    CHECK_THROWS_AS(mahler_measure(LaurentPoly{}), Error);
}

TEST_CASE("cyclotomic polynomials have measure zero") {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto phi = LaurentPoly::from_dense(cyclotomic(n));
        CHECK(std::abs(mahler_measure(phi)) < 1e-9);
    }
    // repeated circle roots
    const auto sq = lp("(x^4+x^3+x^2+x+1)^3 (x+1)^2");
    CHECK(std::abs(mahler_measure(sq)) < 1e-9);
}

TEST_CASE("additivity and the Kronecker bound") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> deg(1, 15);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_poly(rng, deg(rng), 5), g = random_poly(rng, deg(rng), 5);
        CHECK(std::abs(mahler_measure(f * g) - mahler_measure(f) - mahler_measure(g)) < 1e-8);
        auto monic = dense(random_poly(rng, deg(rng), 9));
        monic.push_back(1);
        CHECK(mahler_measure(LaurentPoly::from_dense(monic)) >= -1e-9);
        CHECK(std::abs(d_infinity_measure(f, LaurentPoly{}) - mahler_measure(f)) < 1e-8);
    }
}

TEST_CASE("infinite dihedral measures") {
    const double half = d_infinity_measure(lp("x^2-1"), lp("x^5+x^4-1"));
    CHECK(std::abs(half - lehmer_log / 2) < 1e-8);
    CHECK(d_infinity_measure(lp("x-2"), LaurentPoly{}) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(std::abs(d_infinity_measure(lp("1"), LaurentPoly{})) < 1e-15);
    CHECK_THROWS_AS(d_infinity_measure(lp("x"), lp("1")), Error);

    CHECK(d_infinity_h_measure(lp("x-2"), LaurentPoly{}) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(std::abs(d_infinity_h_measure(lp("1"), LaurentPoly{})) < 1e-15);
    const LaurentPoly f = lp("x^2-1"), g = lp("x^5+x^4-1");
    const LaurentPoly sum = f * f.reversed() + g * g.reversed();
    CHECK(std::abs(d_infinity_h_measure(f, g) - (lehmer_log + mahler_measure(sum)) / 4) < 1e-9);

    const LaurentPoly zero;
    CHECK(std::abs(d_infinity_h_fourcomponent(f, zero, zero, zero) - mahler_measure(f)) < 1e-9);
    CHECK(d_infinity_h_fourcomponent(zero, zero, lp("5"), zero) == doctest::Approx(std::log(5)).epsilon(1e-12));
    CHECK_THROWS_AS(d_infinity_h_fourcomponent(lp("1"), lp("1"), zero, zero), Error);
    CHECK_THROWS_AS(d_infinity_h_measure(lp("1"), lp("1")), Error);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_poly(rng, 1 + trial % 6, 4), b = random_poly(rng, 1 + trial % 5, 4);
        try {
            const double two = d_infinity_h_measure(a, b);
            CHECK(std::abs(d_infinity_h_fourcomponent(a, b, zero, zero) - two) < 1e-9);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroPolynomial);
        }
    }
}

TEST_CASE("discrete Heisenberg measure") {
    auto bl = [](const char* t) { return to_bilaurent(parse_expression(t)); };
    CHECK(heisenberg_infinite_measure(bl("2"), bl("1")) == doctest::Approx(std::log(2)).epsilon(1e-12));
    CHECK(std::abs(heisenberg_infinite_measure(bl("y"), bl("1"))) < 1e-12);
    CHECK(heisenberg_infinite_measure(bl("y+z+3"), bl("1")) == doctest::Approx(std::log(3)).epsilon(1e-10));
    CHECK_THROWS_AS(heisenberg_infinite_measure(bl("z-1"), bl("1")), Error);
    CHECK_THROWS_AS(heisenberg_infinite_measure(bl("y"), BiLaurent{}), Error);
    CHECK_THROWS_AS(to_bilaurent(parse_expression("x+y")), Error);

    for (auto [a, b] : {std::pair{"2+z", "y+1"}, {"1+y+z^2", "3-y z"}, {"y^2+y z+4", "2y-z^-1"}}) {
        const double fast = heisenberg_infinite_measure(bl(a), bl(b), 256);
        CHECK(std::abs(fast - riemann_heisenberg(bl(a), bl(b), 512)) < 1e-3);
        // more threads, same average
        CHECK(std::abs(heisenberg_infinite_measure(bl(a), bl(b), 256, 1) - fast) < 1e-12);
    }
}

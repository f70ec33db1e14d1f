#include "gdet/infinite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "gdet/error.hpp"

namespace gdet {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, Integer>> t) {
    for (const auto& [e, c] : t)
        if (sgn(c) != 0) terms[e] += c;
    std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
}

LaurentPoly LaurentPoly::from_dense(const std::vector<Integer>& coeffs) {
    LaurentPoly f;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0) f.terms[static_cast<long>(i)] = coeffs[i];
    return f;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms) r.terms[-e] = c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) {
        auto& slot = terms[e];
        slot += c;
        if (sgn(slot) == 0) terms.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) {
        auto& slot = terms[e];
        slot -= c;
        if (sgn(slot) == 0) terms.erase(e);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.terms[ea + eb] += ca * cb;
    std::erase_if(r.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
    return r;
}

LaurentPoly to_laurent(const MultiPoly& p, int var) {
    if (!p.uses_only({var})) {
        throw Error(ErrorKind::InvalidParameter,
                    "expected a polynomial in " + std::string(1, static_cast<char>('x' + var)) + " only: " + p.str());
    }
    LaurentPoly f;
    for (const auto& [e, c] : p.terms) f.terms[e[static_cast<std::size_t>(var)]] = c;
    return f;
}

BiLaurent to_bilaurent(const MultiPoly& p) {
    if (!p.uses_only({1, 2})) throw Error(ErrorKind::InvalidParameter, "expected a polynomial in y and z: " + p.str());
    BiLaurent f;
    for (const auto& [e, c] : p.terms) f.terms[{e[1], e[2]}] = c;
    return f;
}

namespace {

constexpr int kMaxSweeps = 200;

// --- exact square-free decomposition over Q (Yun) ---

using QPoly = std::vector<mpq_class>; // low to high, no trailing zeros

void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

long degree(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

void make_monic(QPoly& a) {
    if (a.empty()) return;
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
}

QPoly derivative(const QPoly& a) {
    QPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    trim(d);
    return d;
}

// a = q b + r
void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class t = a.back() / b.back();
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= t * b[i];
        a.pop_back();
        trim(a);
    }
    r = std::move(a);
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    trim(q);
    return q;
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

QPoly subtract(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// monic f = prod parts[i].first ^ parts[i].second
std::vector<std::pair<QPoly, int>> squarefree_parts(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> parts;
    const QPoly df = derivative(f);
    const QPoly a0 = gcd(f, df);
    if (degree(a0) == 0) {
        parts.emplace_back(f, 1);
        return parts;
    }
    QPoly b = exact_quotient(f, a0);
    QPoly c = exact_quotient(df, a0);
    QPoly d = subtract(c, derivative(b));
    for (int i = 1; degree(b) > 0; ++i) {
        QPoly a = gcd(b, d);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = subtract(c, derivative(b));
        if (degree(a) > 0) parts.emplace_back(std::move(a), i);
    }
    return parts;
}

// --- root finding ---

void horner(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
    p = c.back();
    dp = 0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

double sum_log_plus(const std::vector<Complex>& roots) {
    double s = 0;
    for (const auto& r : roots) s += std::log(std::max(1.0, std::abs(r)));
    return s;
}

// Drops coefficients that are negligible against the overall scale.
std::vector<Complex> trim_complex(std::vector<Complex> c, double tol) {
    while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
    std::size_t low = 0;
    while (low < c.size() && std::abs(c[low]) <= tol) ++low;
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    return c;
}

} // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.empty() || coeffs.back() == Complex(0)) {
        throw Error(ErrorKind::ZeroPolynomial, "root finder needs a nonzero leading coefficient");
    }
    const std::size_t d = coeffs.size() - 1;
    if (d == 0) return {};
    std::vector<Complex> c(coeffs.size());
    for (std::size_t i = 0; i <= d; ++i) c[i] = coeffs[i] / coeffs[d];
    if (d == 1) return {-c[0]};

    // start on a circle of radius ~ the root bound, rotated off the real axis
    double radius = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(c[i]) > 0) {
            radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / static_cast<double>(d - i)));
        }
    }
    if (radius == 0) radius = 1;
    std::vector<Complex> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
        z[k] = std::polar(radius * (1 + 0.01 * std::cos(3 * t)), t);
    }

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool done = true;
        for (std::size_t k = 0; k < d; ++k) {
            Complex p, dp;
            horner(c, z[k], p, dp);
            if (p == Complex(0)) continue;
            const Complex ratio = p / dp;
            Complex repel = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) repel += 1.0 / (z[k] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repel);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            if (std::abs(step) >= 1e-13 * (1 + std::abs(z[k]))) done = false;
        }
        if (done) return z;
    }

    // Clustered or repeated roots stall the step test at ~sqrt(eps); accept
    // when every approximation is a root to working precision.
    for (const auto& r : z) {
        Complex p, dp;
        horner(c, r, p, dp);
        double scale = 0, pw = 1;
        for (const auto& ci : c) {
            scale += std::abs(ci) * pw;
            pw *= std::abs(r);
        }
        if (!(std::abs(p) <= 1e-10 * scale)) {
            throw Error(ErrorKind::RootFindingFailed,
                        "no convergence after " + std::to_string(kMaxSweeps) + " sweeps (degree " + std::to_string(d) + ")");
        }
    }
    return z;
}

double mahler_measure(const std::vector<Complex>& coeffs) {
    double scale = 0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0) throw Error(ErrorKind::ZeroPolynomial, "Mahler measure of the zero polynomial");
    auto c = trim_complex(coeffs, 1e-14 * scale);
    return std::log(std::abs(c.back())) + sum_log_plus(polynomial_roots(c));
}

double mahler_measure(const LaurentPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Mahler measure of the zero polynomial");
    // shift so the lowest term is constant; x^k factors contribute nothing
    const long lo = f.terms.begin()->first, hi = f.terms.rbegin()->first;
    QPoly q(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : f.terms) q[static_cast<std::size_t>(e - lo)] = mpq_class(c);
    const Integer lead = f.terms.rbegin()->second;
    double m = std::log(Integer(abs(lead)).get_d());
    if (q.size() == 1) return m;
    make_monic(q);
    for (const auto& [part, mult] : squarefree_parts(q)) {
        std::vector<Complex> c;
        c.reserve(part.size());
        for (const auto& v : part) c.emplace_back(v.get_d(), 0.0);
        m += mult * sum_log_plus(polynomial_roots(c));
    }
    return m;
}

double d_infinity_measure(const LaurentPoly& f, const LaurentPoly& g) {
    const LaurentPoly h = f * f.reversed() - g * g.reversed();
    if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "f f~ - g g~ vanishes identically");
    return 0.5 * mahler_measure(h);
}

double d_infinity_h_measure(const LaurentPoly& f, const LaurentPoly& g) {
    const LaurentPoly ff = f * f.reversed(), gg = g * g.reversed();
    const LaurentPoly minus = ff - gg, plus = ff + gg;
    if (minus.is_zero() || plus.is_zero()) {
        throw Error(ErrorKind::ZeroPolynomial, "|f|^4 - |g|^4 form vanishes identically");
    }
    return 0.25 * (mahler_measure(minus) + mahler_measure(plus));
}

double d_infinity_h_fourcomponent(const LaurentPoly& f0, const LaurentPoly& f1, const LaurentPoly& f2,
                                  const LaurentPoly& f3) {
    const LaurentPoly a = f0 + f2, b = f1 + f3, c = f0 - f2, d = f1 - f3;
    const LaurentPoly first = a * a.reversed() - b * b.reversed();
    const LaurentPoly second = c * c.reversed() + d * d.reversed();
    if (first.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "|f0+f2|^2 - |f1+f3|^2 vanishes identically");
    if (second.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "|f0-f2|^2 + |f1-f3|^2 vanishes identically");
    return 0.25 * (mahler_measure(first) + mahler_measure(second));
}

namespace {

// f(y, zeta) as coefficients of y^{lo}, .., y^{hi}
double slice_measure(const BiLaurent& f, Complex zeta, const char* name) {
    const long lo = f.terms.begin()->first.first, hi = f.terms.rbegin()->first.first;
    std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1));
    double scale = 0;
    for (const auto& [e, a] : f.terms) {
        const double av = a.get_d();
        c[static_cast<std::size_t>(e.first - lo)] += av * std::pow(zeta, static_cast<double>(e.second));
        scale += std::abs(av);
    }
    c = trim_complex(std::move(c), 1e-12 * scale);
    if (c.empty()) {
        throw Error(ErrorKind::ZeroSlice, std::string(name) + " vanishes at z = " + std::to_string(zeta.real()) + " + " +
                                              std::to_string(zeta.imag()) + "i");
    }
    return std::log(std::abs(c.back())) + sum_log_plus(polynomial_roots(c));
}

} // namespace

double heisenberg_infinite_measure(const BiLaurent& f0, const BiLaurent& fk, unsigned points, unsigned threads) {
    if (points == 0) throw Error(ErrorKind::InvalidParameter, "quadrature needs at least one point");
    if (f0.is_zero()) throw Error(ErrorKind::ZeroSlice, "f0 is identically zero");
    if (fk.is_zero()) throw Error(ErrorKind::ZeroSlice, "fk is identically zero");
    std::vector<double> values(points);
    std::vector<std::exception_ptr> errors(points);
    auto work = [&](unsigned first, unsigned step) {
        for (unsigned n = first; n < points; n += step) {
            try {
                const Complex zeta = std::polar(1.0, 2 * std::numbers::pi * n / points);
                values[n] = std::max(slice_measure(f0, zeta, "f0"), slice_measure(fk, zeta, "fk"));
            } catch (...) {
                errors[n] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, points);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    double sum = 0;
    for (double v : values) sum += v;
    return sum / points;
}

} // namespace gdet

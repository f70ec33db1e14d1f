#include "gdet/fast_measures.hpp"

#include <algorithm>

#include "gdet/error.hpp"
#include "gdet/linalg.hpp"

namespace gdet {

namespace {

Integer certify_integer(const CycInt& a, const char* what) {
    auto v = cyc_is_integer(a);
    if (!v) throw Error(ErrorKind::NotInteger, std::string(what) + " = " + a.str() + " is not rational");
    return *v;
}

CycInt product(std::span<const CycInt> values, unsigned long p) {
    CycInt acc(p, Integer(1));
    for (const auto& v : values) acc *= v;
    return acc;
}

bool is_elementary(const GroupDescriptor& d, unsigned long& p, unsigned long& rank) {
    auto factors = d.cyclic_factors();
    if (factors.empty()) return false;
    if (!is_prime(factors[0])) return false;
    if (!std::all_of(factors.begin(), factors.end(), [&](unsigned long f) { return f == factors[0]; })) {
        return false;
    }
    p = factors[0];
    rank = factors.size();
    return true;
}

// Splits the group-ring coefficients of X^i Y^j (index 2i + j) into f and g.
void split_xy(const GroupRingElt& e, std::vector<Integer>& f, std::vector<Integer>& g) {
    const std::size_t m = e.group().order() / 2;
    f.assign(m, 0);
    g.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        f[i] = e[static_cast<GroupSpec::Index>(2 * i)];
        g[i] = e[static_cast<GroupSpec::Index>(2 * i + 1)];
    }
}

} // namespace

Integer elementary_measure(unsigned long p, unsigned long rank, std::span<const Integer> coeffs) {
    std::size_t count = 1;
    for (unsigned long r = 0; r < rank; ++r) count *= p;
    if (coeffs.size() != count) {
        throw Error(ErrorKind::InvalidParameter, "Z_p^n element needs p^n coefficients");
    }
    // exponent vectors of the monomials, reused as character labels
    std::vector<unsigned long> digits(count * rank);
    for (std::size_t m = 0; m < count; ++m) {
        std::size_t rest = m;
        for (unsigned long r = rank; r-- > 0;) {
            digits[m * rank + r] = rest % p;
            rest /= p;
        }
    }
    CycInt acc(p, Integer(1));
    std::vector<Integer> buckets(p);
    for (std::size_t chi = 0; chi < count; ++chi) {
        for (auto& b : buckets) b = 0;
        for (std::size_t m = 0; m < count; ++m) {
            if (sgn(coeffs[m]) == 0) continue;
            unsigned long e = 0;
            for (unsigned long r = 0; r < rank; ++r) e += digits[chi * rank + r] * digits[m * rank + r];
            buckets[e % p] += coeffs[m];
        }
        acc *= CycInt::from_cyclic(p, buckets);
        if (acc.is_zero()) return 0;
    }
    return certify_integer(acc, "character product");
}

Integer abelian_measure(const GroupRingElt& f) {
    unsigned long p = 0, rank = 0;
    if (!is_elementary(f.group().descriptor(), p, rank)) {
        throw Error(ErrorKind::InvalidParameter,
                    "abelian_measure supports Z_p^n only, got " + f.group().descriptor().name());
    }
    return elementary_measure(p, rank, f.coeffs());
}

SquareMatrix<CycInt> heisenberg_phi_matrix(const HeisenbergPoly& f, unsigned long j) {
    const unsigned long p = f.prime();
    if (j == 0 || j >= p) {
        throw Error(ErrorKind::InvalidParameter, "representation index must lie in 1..p-1");
    }
    // phi(x) = cyclic row shift, phi(y) = diag(1, l, .., l^{p-1}), phi(z) = l I with
    // l = w^j. For the normal form x^i y^j z^k the product phi(x)^i phi(y)^j puts
    // l^{c j} in column c, so entry (r, c) = f_{(r-c) mod p}(l^c, l).
    std::vector<CycInt> entries;
    entries.reserve(p * p);
    std::vector<Integer> buckets(p);
    for (unsigned long r = 0; r < p; ++r) {
        for (unsigned long c = 0; c < p; ++c) {
            const unsigned long i = (r + p - c) % p;
            for (auto& b : buckets) b = 0;
            for (unsigned long yb = 0; yb < p; ++yb) {
                for (unsigned long zc = 0; zc < p; ++zc) {
                    const Integer& a = f.at(i, yb, zc);
                    if (sgn(a) == 0) continue;
                    buckets[(j * (c * yb + zc)) % p] += a;
                }
            }
            entries.push_back(CycInt::from_cyclic(p, buckets));
        }
    }
    return SquareMatrix<CycInt>(p, std::move(entries));
}

std::vector<Integer> heisenberg_x_product(const HeisenbergPoly& f) {
    const unsigned long p = f.prime();
    const auto b = f.at_z_one();
    // G_t(y) = F(w^t, y, 1), coefficients in Z[w]
    std::vector<CycInt> acc(p, CycInt(p));
    acc[0] = CycInt(p, Integer(1));
    std::vector<Integer> buckets(p);
    for (unsigned long t = 0; t < p; ++t) {
        std::vector<CycInt> g;
        g.reserve(p);
        for (unsigned long yj = 0; yj < p; ++yj) {
            for (auto& v : buckets) v = 0;
            for (unsigned long xi = 0; xi < p; ++xi) buckets[(t * xi) % p] += b[xi * p + yj];
            g.push_back(CycInt::from_cyclic(p, buckets));
        }
        std::vector<CycInt> next(p, CycInt(p));
        for (unsigned long u = 0; u < p; ++u) {
            if (acc[u].is_zero()) continue;
            for (unsigned long v = 0; v < p; ++v) next[(u + v) % p] += acc[u] * g[v];
        }
        acc = std::move(next);
    }
    std::vector<Integer> c;
    c.reserve(p);
    for (const auto& a : acc) c.push_back(certify_integer(a, "coefficient of the x-product"));
    return c;
}

HeisenbergFactorization heisenberg_measure(const HeisenbergPoly& f, bool with_c0) {
    const unsigned long p = f.prime();
    HeisenbergFactorization out;
    out.p = p;
    out.M1 = elementary_measure(p, 2, f.at_z_one());
    for (unsigned long j = 1; j < p; ++j) out.D_values.push_back(det_bareiss(heisenberg_phi_matrix(f, j)));
    out.M2 = certify_integer(product(out.D_values, p), "M2");
    out.M = out.M1 * pow(out.M2, p);
    if (with_c0) out.c0 = heisenberg_x_product(f)[0];
    return out;
}

HeisenbergFactorization heisenberg_binomial_measure(std::span<const Integer> f0, std::span<const Integer> fk,
                                                    unsigned long k, unsigned long p) {
    require_odd_prime(p, "binomial measure");
    if (k == 0 || k >= p) throw Error(ErrorKind::InvalidParameter, "binomial exponent must lie in 1..p-1");
    if (f0.size() != p * p || fk.size() != p * p) {
        throw Error(ErrorKind::InvalidParameter, "binomial parts need p x p coefficients");
    }
    auto eval = [&](std::span<const Integer> h, unsigned long yexp, unsigned long zexp) {
        std::vector<Integer> buckets(p);
        for (unsigned long a = 0; a < p; ++a)
            for (unsigned long b = 0; b < p; ++b) buckets[(yexp * a + zexp * b) % p] += h[a * p + b];
        return CycInt::from_cyclic(p, std::move(buckets));
    };

    HeisenbergFactorization out;
    out.p = p;
    // M1 = prod_j (f0(w^j, 1)^p + fk(w^j, 1)^p)
    CycInt m1(p, Integer(1));
    for (unsigned long j = 0; j < p; ++j) {
        CycInt a = eval(f0, j, 0), b = eval(fk, j, 0);
        CycInt ap(p, Integer(1)), bp(p, Integer(1));
        for (unsigned long t = 0; t < p; ++t) {
            ap *= a;
            bp *= b;
        }
        m1 *= ap + bp;
    }
    out.M1 = certify_integer(m1, "M1");
    // D(lambda) = prod_j f0(w^j, lambda) + prod_j fk(w^j, lambda)
    for (unsigned long lam = 1; lam < p; ++lam) {
        CycInt a(p, Integer(1)), b(p, Integer(1));
        for (unsigned long j = 0; j < p; ++j) {
            a *= eval(f0, j, lam);
            b *= eval(fk, j, lam);
        }
        out.D_values.push_back(a + b);
    }
    out.M2 = certify_integer(product(out.D_values, p), "M2");
    out.M = out.M1 * pow(out.M2, p);
    return out;
}

Integer multiplication_determinant(std::span<const Integer> h, int s) {
    const std::size_t n = h.size();
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "empty polynomial");
    std::vector<Integer> entries(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            // coefficient of x^r in x^c h(x) mod x^n - s
            if (r >= c) entries[r * n + c] = h[r - c];
            else entries[r * n + c] = s > 0 ? h[r + n - c] : Integer(-h[r + n - c]);
        }
    }
    return det_bareiss(SquareMatrix<Integer>(n, std::move(entries)));
}

std::vector<Integer> reciprocal_combination(std::span<const Integer> f, std::span<const Integer> g, int sign,
                                            unsigned long n, int s) {
    std::vector<Integer> h(n);
    const long N = static_cast<long>(n);
    auto accumulate = [&](std::span<const Integer> a, bool negate) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (sgn(a[j]) == 0) continue;
                const long e = static_cast<long>(i) - static_cast<long>(j);
                long q = e / N, r = e % N;
                if (r < 0) {
                    r += N;
                    --q;
                }
                // x^e = s^q x^r
                const bool flip = (s < 0 && (q % 2 != 0)) != negate;
                if (flip) h[static_cast<std::size_t>(r)] -= a[i] * a[j];
                else h[static_cast<std::size_t>(r)] += a[i] * a[j];
            }
        }
    };
    accumulate(f, false);
    accumulate(g, sign < 0);
    return h;
}

Integer dihedral_measure(std::span<const Integer> f, std::span<const Integer> g, unsigned long n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "dihedral n must be positive");
    return multiplication_determinant(reciprocal_combination(f, g, -1, n, +1), +1);
}

Integer dicyclic_measure(std::span<const Integer> f, std::span<const Integer> g, unsigned long n) {
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "dicyclic n must be positive");
    const Integer minus = multiplication_determinant(reciprocal_combination(f, g, -1, n, +1), +1);
    if (sgn(minus) == 0) return 0;
    return minus * multiplication_determinant(reciprocal_combination(f, g, +1, n, -1), -1);
}

bool has_fast_path(const GroupDescriptor& desc) {
    unsigned long p = 0, rank = 0;
    switch (desc.kind) {
    case GroupKind::Heisenberg:
    case GroupKind::Dihedral:
    case GroupKind::Dicyclic: return true;
    default: return is_elementary(desc, p, rank);
    }
}

Integer fast_group_determinant(const GroupRingElt& f) {
    const auto& d = f.group().descriptor();
    switch (d.kind) {
    case GroupKind::Heisenberg: {
        HeisenbergPoly h(d.p, std::vector<Integer>(f.coeffs().begin(), f.coeffs().end()));
        return heisenberg_measure(h).M;
    }
    case GroupKind::Dihedral: {
        std::vector<Integer> a, b;
        split_xy(f, a, b);
        return dihedral_measure(a, b, d.n);
    }
    case GroupKind::Dicyclic: {
        std::vector<Integer> a, b;
        split_xy(f, a, b);
        return dicyclic_measure(a, b, d.n);
    }
    default: {
        unsigned long p = 0, rank = 0;
        if (is_elementary(d, p, rank)) return elementary_measure(p, rank, f.coeffs());
        return group_determinant(f);
    }
    }
}

} // namespace gdet

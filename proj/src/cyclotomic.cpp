#include "gdet/cyclotomic.hpp"

#include <sstream>
#include <utility>

#include "gdet/error.hpp"

namespace gdet {

namespace {

std::size_t exponent_index(long k, unsigned long p) {
    long r = k % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<std::size_t>(r);
}

} // namespace

CycInt::CycInt(unsigned long p) : p_(p), coeffs_(p - 1) {
    if (p < 2 || !is_prime(p)) {
        throw Error(ErrorKind::InvalidParameter, "cyclotomic ring needs a prime, got " + std::to_string(p));
    }
}

CycInt::CycInt(unsigned long p, const Integer& n) : CycInt(p) { coeffs_[0] = n; }

CycInt::CycInt(unsigned long p, std::vector<Integer> coeffs) : CycInt(p) {
    if (coeffs.size() != p - 1) {
        throw Error(ErrorKind::InvalidParameter, "power basis needs p-1 coordinates");
    }
    coeffs_ = std::move(coeffs);
}

CycInt CycInt::from_cyclic(unsigned long p, std::vector<Integer> cyclic) {
    if (cyclic.size() != p) {
        throw Error(ErrorKind::InvalidParameter, "cyclic representative needs p coordinates");
    }
    const Integer top = cyclic[p - 1];
    cyclic.pop_back();
    if (sgn(top) != 0) {
        for (auto& c : cyclic) c -= top;
    }
    return CycInt(p, std::move(cyclic));
}

CycInt CycInt::root_power(unsigned long p, long k) {
    std::vector<Integer> cyc(p);
    cyc[exponent_index(k, p)] = 1;
    return from_cyclic(p, std::move(cyc));
}

CycInt CycInt::uniformizer(unsigned long p) {
    std::vector<Integer> cyc(p);
    cyc[0] += 1;
    cyc[1 % p] -= 1;
    return from_cyclic(p, std::move(cyc));
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

std::optional<Integer> CycInt::as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    }
    return coeffs_[0];
}

void CycInt::check_same_prime(const CycInt& o) const {
    if (p_ != o.p_) {
        throw Error(ErrorKind::PrimeMismatch,
                    "Z[w] elements for p=" + std::to_string(p_) + " and p=" + std::to_string(o.p_));
    }
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same_prime(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_same_prime(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same_prime(b);
    const unsigned long p = a.p_;
    const std::size_t n = p - 1;
    // cyclic convolution mod w^p - 1, then fold the w^(p-1) coordinate
    std::vector<Integer> cyc(p);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = i + j;
            if (k >= p) k -= p;
            mpz_addmul(cyc[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return CycInt::from_cyclic(p, std::move(cyc));
}

CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

CycInt& CycInt::operator*=(const Integer& n) {
    for (auto& c : coeffs_) c *= n;
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycInt CycInt::galois(unsigned long k) const {
    if (k % p_ == 0) {
        throw Error(ErrorKind::InvalidParameter, "Galois exponent must be prime to p");
    }
    std::vector<Integer> cyc(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cyc[(i * k) % p_] += coeffs_[i];
    }
    return from_cyclic(p_, std::move(cyc));
}

Integer CycInt::norm() const {
    CycInt prod = *this;
    for (unsigned long k = 2; k < p_; ++k) prod *= galois(k);
    auto n = prod.as_integer();
    if (!n) throw Error(ErrorKind::NotInteger, "norm of " + str());
    return *n;
}

std::optional<CycInt> CycInt::divide_by_u() const {
    // Synthetic division by (x - 1): A(x) = (x - 1) Q(x) + A(1), so
    // a = -u Q(w) + A(1) and u | a iff p | A(1).
    const std::size_t n = coeffs_.size();
    std::vector<Integer> q(n);
    Integer carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry += coeffs_[i];
        if (i > 0) q[i - 1] = carry;
    }
    // carry == A(1)
    Integer t, r;
    mpz_tdiv_qr_ui(t.get_mpz_t(), r.get_mpz_t(), carry.get_mpz_t(), p_);
    if (sgn(r) != 0) return std::nullopt;

    CycInt result(p_);
    for (std::size_t i = 0; i < n; ++i) result.coeffs_[i] = -q[i];
    if (sgn(t) != 0) {
        // p / u = -w * sum_{i=0}^{p-2} (i+1) w^i
        std::vector<Integer> cyc(p_);
        for (std::size_t i = 0; i + 1 < p_; ++i) cyc[(i + 1) % p_] = -Integer(static_cast<unsigned long>(i + 1));
        CycInt p_over_u = from_cyclic(p_, std::move(cyc));
        result += p_over_u * t;
    }
    return result;
}

CycInt CycInt::exact_div(const CycInt& d) const {
    check_same_prime(d);
    return RingTraits<CycInt>::Divisor(d).divide(*this);
}

std::string CycInt::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << ")";
    return os.str();
}

CycInt cyc_eval(std::span<const Integer> f, long k, unsigned long p) {
    std::vector<Integer> cyc(p);
    const std::size_t step = exponent_index(k, p);
    for (std::size_t i = 0; i < f.size(); ++i) {
        cyc[(i * step) % p] += f[i];
    }
    return CycInt::from_cyclic(p, std::move(cyc));
}

std::optional<unsigned long> u_valuation(const CycInt& a) {
    if (a.is_zero()) return std::nullopt;
    unsigned long m = 0;
    CycInt cur = a;
    while (auto q = cur.divide_by_u()) {
        cur = std::move(*q);
        ++m;
    }
    return m;
}

std::optional<Integer> cyc_is_integer(const CycInt& a) { return a.as_integer(); }

CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

RingTraits<CycInt>::Divisor::Divisor(const CycInt& d) : d_(d), cofactor_(d.prime(), Integer(1)) {
    if (d.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero in Z[w]");
    for (unsigned long k = 2; k < d.prime(); ++k) cofactor_ *= d.galois(k);
    auto n = (d * cofactor_).as_integer();
    if (!n) throw Error(ErrorKind::NotInteger, "norm of " + d.str());
    norm_ = *n;
}

CycInt RingTraits<CycInt>::Divisor::divide(const CycInt& a) const {
    CycInt t = a * cofactor_;
    std::vector<Integer> q(a.prime() - 1);
    Integer r;
    auto coeffs = t.coeffs();
    for (std::size_t i = 0; i < q.size(); ++i) {
        mpz_tdiv_qr(q[i].get_mpz_t(), r.get_mpz_t(), coeffs[i].get_mpz_t(), norm_.get_mpz_t());
        if (sgn(r) != 0) {
            throw Error(ErrorKind::InexactDivision, a.str() + " / " + d_.str());
        }
    }
    return CycInt(a.prime(), std::move(q));
}

} // namespace gdet

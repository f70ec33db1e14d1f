#pragma once

// Exact arithmetic in Z[w], w a primitive p-th root of unity, p prime.
//
// Elements are kept in the power basis 1, w, ..., w^(p-2), always reduced
// by w^(p-1) = -(1 + w + ... + w^(p-2)), so equality is coefficient equality.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdet/integer.hpp"
#include "gdet/linalg.hpp"

namespace gdet {

class CycInt {
public:
    /// Zero of Z[w] for the prime p.
    explicit CycInt(unsigned long p);
    /// Rational integer n embedded in Z[w].
    CycInt(unsigned long p, const Integer& n);
    /// From power-basis coordinates; coeffs.size() must be p - 1.
    CycInt(unsigned long p, std::vector<Integer> coeffs);

    /// Reduces a vector indexed by exponents 0..p-1 (a class mod w^p - 1).
    static CycInt from_cyclic(unsigned long p, std::vector<Integer> cyclic);
    /// w^k for any integer k.
    static CycInt root_power(unsigned long p, long k);
    /// u = 1 - w.
    static CycInt uniformizer(unsigned long p);

    unsigned long prime() const noexcept { return p_; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    std::optional<Integer> as_integer() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    CycInt& operator*=(const Integer& n);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(CycInt a, const Integer& n) { return a *= n; }
    CycInt operator-() const;

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    /// Galois automorphism w -> w^k, p does not divide k.
    CycInt galois(unsigned long k) const;

    /// Product of all Galois conjugates; a rational integer.
    Integer norm() const;

    /// Quotient by u = 1 - w, or nullopt when u does not divide *this.
    std::optional<CycInt> divide_by_u() const;

    /// Exact quotient *this / d; throws InexactDivision when d does not divide.
    CycInt exact_div(const CycInt& d) const;

    std::string str() const;

private:
    void check_same_prime(const CycInt& o) const;

    unsigned long p_;
    std::vector<Integer> coeffs_;
};

/// f(w^k) for f given by its integer coefficients (constant term first).
CycInt cyc_eval(std::span<const Integer> f, long k, unsigned long p);

/// Largest m with u^m dividing a; nullopt stands for infinity (a = 0).
std::optional<unsigned long> u_valuation(const CycInt& a);

/// The integer value of a when a lies in Z.
std::optional<Integer> cyc_is_integer(const CycInt& a);

CycInt cyc_mul(const CycInt& a, const CycInt& b);

template <>
struct RingTraits<CycInt> {
    static CycInt zero_like(const CycInt& x) { return CycInt(x.prime()); }
    static CycInt one_like(const CycInt& x) { return CycInt(x.prime(), Integer(1)); }
    static bool is_zero(const CycInt& a) { return a.is_zero(); }
    static CycInt negate(const CycInt& a) { return -a; }

    // Division by d is multiplication by the product of the other conjugates
    // followed by an exact integer division by the norm; the conjugate
    // product is computed once per pivot.
    class Divisor {
    public:
        explicit Divisor(const CycInt& d);
        CycInt divide(const CycInt& a) const;

    private:
        CycInt d_;
        CycInt cofactor_;
        Integer norm_;
    };
};

} // namespace gdet

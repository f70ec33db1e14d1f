#pragma once

// Exact determinants by fraction-free (Bareiss) elimination.
//
// Works over any integral domain R for which RingTraits<R> supplies
//   zero_like(x), one_like(x), is_zero(x), negate(x)
//   and a Divisor type built from a nonzero element whose divide(a)
//   returns a / d or throws InexactDivision.
// Every division inside the recurrence is exact over a domain, so a failed
// division means a bug upstream, never bad input.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gdet/error.hpp"
#include "gdet/integer.hpp"

namespace gdet {

template <class R>
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, const R& fill) : n_(n), entries_(n * n, fill) {
        if (n == 0) {
            throw Error(ErrorKind::InvalidParameter, "matrix dimension must be positive");
        }
    }

    SquareMatrix(std::size_t n, std::vector<R> entries) : n_(n), entries_(std::move(entries)) {
        if (n == 0 || entries_.size() != n * n) {
            throw Error(ErrorKind::InvalidParameter, "entries must hold exactly n*n elements, n >= 1");
        }
    }

    std::size_t size() const noexcept { return n_; }

    R& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const R& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    std::span<R> row(std::size_t r) { return {entries_.data() + r * n_, n_}; }
    std::span<const R> row(std::size_t r) const { return {entries_.data() + r * n_, n_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < n_; ++c) {
            std::swap(entries_[a * n_ + c], entries_[b * n_ + c]);
        }
    }

    const std::vector<R>& entries() const noexcept { return entries_; }

private:
    std::size_t n_;
    std::vector<R> entries_;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& a) { return sgn(a) == 0; }
    static Integer negate(const Integer& a) { return -a; }

    class Divisor {
    public:
        explicit Divisor(const Integer& d) : d_(d) {}

        Integer divide(const Integer& a) const {
            Integer q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d_.get_mpz_t());
            if (sgn(r) != 0) {
                throw Error(ErrorKind::InexactDivision, a.get_str() + " / " + d_.get_str());
            }
            return q;
        }

    private:
        Integer d_;
    };
};

template <class R>
R det_bareiss(SquareMatrix<R> m) {
    using Traits = RingTraits<R>;
    const std::size_t n = m.size();
    bool negative = false;
    bool first = true;
    typename Traits::Divisor prev(Traits::one_like(m(0, 0)));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && Traits::is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return Traits::zero_like(m(0, 0));
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negative = !negative;
        }
        const R& akk = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const R aik = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m(i, j) * akk - aik * m(k, j);
                m(i, j) = first ? std::move(v) : prev.divide(v);
            }
        }
        prev = typename Traits::Divisor(akk);
        first = false;
    }
    const R& d = m(n - 1, n - 1);
    return negative ? Traits::negate(d) : d;
}

} // namespace gdet

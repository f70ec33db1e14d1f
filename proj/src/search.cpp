#include "gdet/search.hpp"

#include <cmath>
#include <exception>
#include <cstdio>
#include <random>
#include <set>
#include <thread>

#include "gdet/error.hpp"
#include "gdet/fast_measures.hpp"

namespace gdet {

namespace {

struct Best {
    Integer abs_value;
    Integer value;
    std::uint64_t index = 0;
    std::vector<Integer> coeffs;
    bool found = false;

    void offer(const Integer& v, std::uint64_t idx, const std::vector<Integer>& c) {
        Integer a = abs(v);
        if (a < 2) return;
        const int cmp = found ? cmp_abs(a) : -1;
        if (cmp < 0 || (cmp == 0 && idx < index)) {
            abs_value = a;
            value = v;
            index = idx;
            coeffs = c;
            found = true;
        }
    }
    int cmp_abs(const Integer& a) const { return a < abs_value ? -1 : (a == abs_value ? 0 : 1); }
};

struct Shard {
    std::set<Integer> values;
    bool truncated = false;
    Best best;
    std::uint64_t evaluated = 0;
    std::exception_ptr error;
};

bool passes(ValueFilter f, const Integer& v, unsigned long p) {
    const bool multiple = mpz_divisible_ui_p(v.get_mpz_t(), p) != 0;
    switch (f) {
    case ValueFilter::CoprimeToP: return !multiple;
    case ValueFilter::MultiplesOfP: return multiple;
    default: return true;
    }
}

void record(Shard& s, const SearchConfig& cfg, unsigned long p, const Integer& v, std::uint64_t idx,
            const std::vector<Integer>& c) {
    ++s.evaluated;
    if (!passes(cfg.filter, v, p)) return;
    s.best.offer(v, idx, c);
    s.values.insert(v);
    if (s.values.size() > cfg.cap) {
        s.values.erase(std::prev(s.values.end()));
        s.truncated = true;
    }
}

std::string fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

} // namespace

unsigned long group_prime(const GroupDescriptor& desc) {
    const unsigned long n = desc.order();
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

std::vector<Integer> random_coefficients(std::uint64_t seed, std::uint64_t trial, std::size_t count, long height) {
    auto rng = trial_rng(seed, trial);
    std::uniform_int_distribution<long> dist(-height, height);
    std::vector<Integer> c(count);
    for (auto& v : c) v = dist(rng);
    return c;
}

SearchResult enumerate_values(const SearchConfig& cfg) {
    if (cfg.height < 0) throw Error(ErrorKind::InvalidParameter, "height must be nonnegative");
    if (cfg.cap == 0) throw Error(ErrorKind::InvalidParameter, "value cap must be positive");
    const GroupPtr group = GroupSpec::build(cfg.group);
    const std::size_t order = group->order();
    const unsigned long p = group_prime(cfg.group);
    const std::uint64_t base = static_cast<std::uint64_t>(2 * cfg.height + 1);

    std::uint64_t total = 0;
    if (cfg.exhaustive) {
        const double count = std::pow(static_cast<double>(base), static_cast<double>(order));
        if (count > cfg.budget) {
            throw Error(ErrorKind::BudgetExceeded, "exhaustive search needs " + std::to_string(base) + "^" +
                                                      std::to_string(order) + " evaluations, budget " +
                                                      std::to_string(static_cast<long long>(cfg.budget)));
        }
        total = static_cast<std::uint64_t>(std::llround(count));
    } else {
        if (static_cast<double>(cfg.trials) > cfg.budget) {
            throw Error(ErrorKind::BudgetExceeded, std::to_string(cfg.trials) + " trials exceed budget " +
                                                      std::to_string(static_cast<long long>(cfg.budget)));
        }
        total = cfg.trials;
    }

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    if (total < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
    std::vector<Shard> shards(threads);

    auto run = [&](unsigned s) {
        Shard& sh = shards[s];
        try {
            const std::uint64_t lo = total * s / threads, hi = total * (s + 1) / threads;
            std::vector<Integer> c(order);
            std::vector<std::uint64_t> digits(order);
            if (cfg.exhaustive) {
                // odometer over digits, coefficient 0 most significant
                std::uint64_t rest = lo;
                for (std::size_t k = order; k-- > 0;) {
                    digits[k] = rest % base;
                    rest /= base;
                }
            }
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                if (cfg.exhaustive) {
                    for (std::size_t k = 0; k < order; ++k) c[k] = static_cast<long>(digits[k]) - cfg.height;
                } else {
                    c = random_coefficients(cfg.seed, idx, order, cfg.height);
                }
                const Integer v = fast_group_determinant(GroupRingElt(group, c));
                record(sh, cfg, p, v, idx, c);
                if (cfg.exhaustive) {
                    for (std::size_t k = order; k-- > 0;) {
                        if (++digits[k] < base) break;
                        digits[k] = 0;
                    }
                }
            }
        } catch (...) {
            sh.error = std::current_exception();
        }
    };

    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned s = 0; s < threads; ++s) pool.emplace_back(run, s);
    }

    SearchResult out;
    std::set<Integer> merged;
    Best best;
    for (auto& sh : shards) {
        if (sh.error) std::rethrow_exception(sh.error);
        out.evaluated += sh.evaluated;
        out.truncated = out.truncated || sh.truncated;
        merged.insert(sh.values.begin(), sh.values.end());
        if (sh.best.found) best.offer(sh.best.value, sh.best.index, sh.best.coeffs);
    }
    while (merged.size() > cfg.cap) {
        merged.erase(std::prev(merged.end()));
        out.truncated = true;
    }
    out.attained_values.assign(merged.begin(), merged.end());
    if (best.found) {
        out.min_nontrivial = best.value;
        out.witness = best.coeffs;
        const double lam = std::log(best.abs_value.get_d()) / static_cast<double>(order);
        out.lambda_estimate = fixed12(lam);
    }
    return out;
}

LambdaReport lambda_heisenberg(unsigned long p, bool with_witness) {
    require_odd_prime(p, "lambda(H_p)");
    LambdaReport r;
    r.p = p;
    const Integer p3 = pow(Integer(p), 3);
    for (Integer x = 2; x <= p3; ++x) {
        if (t_n_member(x, p, 3)) {
            r.minimum = x;
            break;
        }
    }
    const double order = static_cast<double>(p) * p * p;
    r.lambda = std::log(r.minimum.get_d()) / order;
    r.lambda_text = "(1/" + std::to_string(p * p * p) + ") log " + r.minimum.get_str() + " = " + fixed12(r.lambda);
    if (!with_witness) return r;

    // a^{p^2} + m p^3 = +-minimum for the smallest admissible a
    const unsigned long p2 = p * p;
    for (unsigned long a = 1; a < p * p * p; ++a) {
        if (a % p == 0) continue;
        const Integer ap = pow(Integer(a), p2);
        for (int sign : {-1, 1}) {
            const Integer target = sign * r.minimum;
            const Integer diff = target - ap;
            if (mpz_divisible_p(diff.get_mpz_t(), p3.get_mpz_t()) == 0) continue;
            const Integer m = diff / p3;
            r.witness_a = Integer(a);
            r.witness_m = m;
            r.witness = achieve_construction(Integer(a), m, p);
            return r;
        }
    }
    return r;
}

} // namespace gdet

#pragma once

// Desk-scale enumeration of attained group determinant values.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gdet/groups.hpp"
#include "gdet/integer.hpp"
#include "gdet/theorems.hpp"

namespace gdet {

enum class ValueFilter { All, CoprimeToP, MultiplesOfP };

struct SearchConfig {
    GroupDescriptor group;
    long height = 1;
    bool exhaustive = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    ValueFilter filter = ValueFilter::All;
    /// Maximum number of determinant evaluations.
    double budget = 1e8;
    /// Maximum number of distinct values kept (the smallest ones survive).
    std::size_t cap = 1000000;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct SearchResult {
    /// Smallest |M| >= 2 that passed the filter, signed as attained.
    std::optional<Integer> min_nontrivial;
    /// Coefficients (in group element order) of the first input attaining it.
    std::vector<Integer> witness;
    std::vector<Integer> attained_values;
    bool truncated = false;
    std::uint64_t evaluated = 0;
    /// (1/|G|) log |min_nontrivial| with 12 decimals, empty when nothing qualified.
    std::string lambda_estimate;
};

/// Smallest prime factor of the group order; the p of the value filter.
unsigned long group_prime(const GroupDescriptor& desc);

/// Generator for trial i, reproducible from (seed, i) alone.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Coefficients of trial i in random mode, reproducible from (seed, i) alone.
std::vector<Integer> random_coefficients(std::uint64_t seed, std::uint64_t trial, std::size_t count, long height);

SearchResult enumerate_values(const SearchConfig& cfg);

struct LambdaReport {
    unsigned long p = 0;
    Integer minimum; // min { x >= 2 : x^{p-1} = 1 mod p^3 }
    double lambda = 0;
    std::string lambda_text;
    /// Achieve-construction witness with |M| = minimum, when a small a works.
    std::optional<Integer> witness_a;
    std::optional<Integer> witness_m;
    std::optional<AchieveResult> witness;
};

LambdaReport lambda_heisenberg(unsigned long p, bool with_witness = true);

} // namespace gdet

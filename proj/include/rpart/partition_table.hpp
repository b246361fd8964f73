#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "rpart/residue_set.hpp"

namespace rpart {

/// Exact values p_A(0..limit).
class PartitionTable {
public:
    PartitionTable(ResidueClassSet set, std::vector<mpz_class> values);

    const ResidueClassSet& set() const noexcept { return set_; }
    std::int64_t limit() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
    const mpz_class& operator[](std::int64_t n) const { return values_.at(static_cast<std::size_t>(n)); }
    std::span<const mpz_class> values() const noexcept { return values_; }

    /// First index n in [1, limit] where n*p_A(n) differs from
    /// sum_j sigma_A(j) p_A(n-j), or -1 if the identity holds everywhere.
    std::int64_t first_recursion_violation() const;

    friend bool operator==(const PartitionTable& a, const PartitionTable& b) {
        return a.set_ == b.set_ && a.values_ == b.values_;
    }

private:
    ResidueClassSet set_;
    std::vector<mpz_class> values_;
};

/// Coefficients of prod_{a in A} (1 - x^a)^{-1} by in-place accumulation.
PartitionTable compute_table_euler(const ResidueClassSet& set, std::int64_t limit);

/// n p_A(n) = sum_{j<=n} sigma_A(j) p_A(n-j). Throws std::logic_error if a
/// division by n is ever inexact.
PartitionTable compute_table_recursion(const ResidueClassSet& set, std::int64_t limit);

/// Sum of the divisors of j that lie in A.
std::int64_t sigma_A(const ResidueClassSet& set, std::int64_t j);

/// sigma_A(0..limit) by a harmonic sieve over A; entry 0 is 0.
std::vector<std::int64_t> sigma_A_table(const ResidueClassSet& set, std::int64_t limit);

/// Partitions into distinct parts, q(0..limit), each part 1..limit used at most once.
std::vector<mpz_class> distinct_parts_table(std::int64_t limit);

inline constexpr std::int64_t kBruteForceLimit = 60;

/// Enumerates nonincreasing part sequences from A. n <= kBruteForceLimit.
std::uint64_t brute_force_count(const ResidueClassSet& set, std::int64_t n);

/// Natural log of p >= 1 from its bit length and a 53-bit mantissa.
double log_value(const mpz_class& p);

}  // namespace rpart

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rpart/constants.hpp"
#include "rpart/lemmas.hpp"
#include "rpart/partition_table.hpp"

namespace rpart {

/// Hardy-Ramanujan leading term exp(pi sqrt(2n/3)) / (4 n sqrt 3). `value`
/// overflows to +inf for large n; `log` stays finite.
struct HrEstimate {
    double log;
    double value;
};

HrEstimate hr_estimate(std::int64_t n);

struct RatioPoint {
    std::int64_t n;
    double log_pA;
    double c0_sqrt_n;
    double ratio;
};

/// Envelope constant fitted over a finite table: K = max (upper) or min
/// (lower) of exp(log p_A(n) - c1 sqrt n). A finite-range proxy for K(eps).
struct EnvelopeFit {
    double eps;
    double c1;
    double log_k;
    double k;
    std::int64_t attained_at;
    std::int64_t from;
    std::int64_t to;

    nlohmann::json to_json() const;
};

struct RatioReport {
    ResidueClassSet set;
    std::int64_t limit;
    std::int64_t step;
    double c0;
    std::vector<RatioPoint> points;
    double max_dev_top_decile;
    double mean_top_decile;
    double mean_second_decile;
    std::optional<EnvelopeFit> upper;
    std::optional<EnvelopeFit> lower;
    std::optional<std::int64_t> n0;

    nlohmann::json to_json() const;
};

/// rho(n) = log p_A(n) / (c0 sqrt n) on n = step, 2 step, ..., limit, skipping
/// p_A(n) = 0. With eps set, also fits both envelopes (lower needs the gcd
/// condition).
RatioReport log_ratio_report(const PartitionTable& table, std::int64_t step,
                             std::optional<double> eps = std::nullopt);
RatioReport log_ratio_report(const ResidueClassSet& set, std::int64_t limit, std::int64_t step);

double ratio_at(const PartitionTable& table, std::int64_t n);

EnvelopeFit fit_upper_K(const PartitionTable& table, double eps);
EnvelopeFit fit_lower_K(const PartitionTable& table, double eps);

struct ThresholdSearch {
    std::optional<std::int64_t> threshold;
    std::int64_t first;
    std::int64_t n_max;
    std::int64_t step;
    std::int64_t points_tested;

    nlohmann::json to_json() const;
};

/// Smallest grid N with S(n) < n (theta = +eps) at every grid n in [N, n_max];
/// the grid is n_max, n_max - step, ... down to 1.
ThresholdSearch empirical_N_threshold(const ResidueClassSet& set, double eps, std::int64_t n_max,
                                      std::int64_t step = 1);

/// Same search for the lower induction inequality, on grid points >= max(1, 2 N0).
ThresholdSearch empirical_lower_threshold(const ResidueClassSet& set, double eps, std::int64_t n_max,
                                          std::int64_t step = 1);

}  // namespace rpart

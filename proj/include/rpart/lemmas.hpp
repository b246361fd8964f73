#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <json.hpp>

#include "rpart/residue_set.hpp"

namespace rpart {

/// Outcome of one numeric check of an inequality or identity.
struct LemmaReport {
    std::string lemma;
    nlohmann::json params = nlohmann::json::object();
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double truncation = 0.0;     // terms kept, 0 when the sum is finite
    nlohmann::json recorded = nlohmann::json::object();  // monitored quantities
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Cut-off for sums whose k-th term carries e^{-rate k}: keep k <= ceil(tail_exponent / rate).
struct TruncationPolicy {
    double tail_exponent = 60.0;
    double delta = 1e-12;

    std::int64_t k_max(double rate) const;
};

enum class InductionSide { upper, lower };

// sqrt(n) - t/(2 sqrt n) - t^2/(2 n^{3/2}) <= sqrt(n - t) <= sqrt(n) - t/(2 sqrt n)
LemmaReport sqrt_bounds_check(std::int64_t n, double t);

// e^{-x}/(1-e^{-x})^2 < 1/x^2, and > 1/x^2 - 2 when x <= 1
LemmaReport exp_quotient_check(double x);

// sum v^3 q^v: closed form vs partial sum, both below 6q/(1-q)^4
LemmaReport cubic_qseries_check(double q, const TruncationPolicy& policy = {});

/// Lambert series: sum q_k/(1-q_k) against sum d(k) q_1^k with
/// q_k = e^{-c1 k / (2 sqrt n)}. Throws if k_max leaves a tail above policy.delta.
LemmaReport lambert_sum(std::int64_t n, double c1, std::int64_t k_max,
                        const TruncationPolicy& policy = {});
LemmaReport lambert_sum(std::int64_t n, double c1);

/// d(1..limit); entry 0 is 0.
std::vector<std::int64_t> divisor_count_table(std::int64_t limit);

/// sum_{v>=0} (r + m v) q^{r + m v} in closed form.
double residue_class_sum(std::int64_t m, std::int64_t r, double q);

/// S(n) = sum_k sum_{a in A} a e^{-c1 k a / (2 sqrt n)}, c1 built from theta.
LemmaReport weighted_exp_sum(const ResidueClassSet& set, std::int64_t n, double theta,
                             const TruncationPolicy& policy = {});

/// T(n) = sum_{ka > n - N0} a e^{-c1 k a / (2 sqrt n)}, accumulated in the log domain.
LemmaReport tail_sum(const ResidueClassSet& set, std::int64_t n, std::int64_t n0, double c1,
                     const TruncationPolicy& policy = {});

/// U(n) = sum_{ka <= n} k^2 a^3 e^{-c1 k a / (2 sqrt n)}.
LemmaReport cube_weighted_sum(const ResidueClassSet& set, std::int64_t n, double c1);
/// Same, reusing sigma_A(0..>=n).
LemmaReport cube_weighted_sum(const ResidueClassSet& set, std::int64_t n, double c1,
                              std::span<const std::int64_t> sigma);

/// Induction step inequality of the upper (theta = +eps) or lower (theta = -eps) bound.
LemmaReport induction_inequality_check(const ResidueClassSet& set, double eps, std::int64_t n,
                                       InductionSide side);
/// Lower side with a precomputed N0 and sigma_A(0..>=n).
LemmaReport induction_inequality_check(const ResidueClassSet& set, double eps, std::int64_t n,
                                       InductionSide side, std::int64_t n0,
                                       std::span<const std::int64_t> sigma);

void require_epsilon(double eps);

}  // namespace rpart

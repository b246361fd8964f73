#include "rpart/lemmas.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpart/constants.hpp"
#include "rpart/partition_table.hpp"
#include "rpart/summation.hpp"

namespace rpart {

namespace {

constexpr double kLambertTolerance = 1e-9;
constexpr std::int64_t kMaxSeriesTerms = 200'000'000;

void require_positive_n(std::int64_t n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
}

// sum_{v>=0} (r + m v) e^{-x (r + m v)}; x > 0.
double residue_class_sum_exp(std::int64_t m, std::int64_t r, double x) {
    const double md = static_cast<double>(m);
    const double rd = static_cast<double>(r);
    const double one_minus_qm = -std::expm1(-x * md);
    return md * std::exp(-x * (rd + md)) / (one_minus_qm * one_minus_qm) +
           rd * std::exp(-x * rd) / one_minus_qm;
}

struct SigmaSums {
    double plain = 0.0;  // sum_{j<=J} sigma(j) e^{-cj}
    double cube = 0.0;   // sum_{j<=J} j^2 sigma(j) e^{-cj}
};

SigmaSums sigma_sums(std::span<const std::int64_t> sigma, std::int64_t last, double c) {
    CompensatedSum plain;
    CompensatedSum cube;
    for (std::int64_t j = 1; j <= last; ++j) {
        const auto s = sigma[static_cast<std::size_t>(j)];
        if (s == 0) continue;
        const double jd = static_cast<double>(j);
        const double w = static_cast<double>(s) * std::exp(-c * jd);
        plain += w;
        cube += jd * jd * w;
    }
    return {plain.value(), cube.value()};
}

void require_sigma(std::span<const std::int64_t> sigma, std::int64_t n) {
    if (static_cast<std::int64_t>(sigma.size()) <= n) {
        throw std::invalid_argument("sigma table shorter than n + 1");
    }
}

}  // namespace

nlohmann::json LemmaReport::to_json() const {
    return nlohmann::json{{"lemma", lemma},   {"params", params}, {"lhs", lhs},
                          {"rhs", rhs},       {"margin", margin}, {"truncation", truncation},
                          {"recorded", recorded}, {"pass", pass}};
}

std::int64_t TruncationPolicy::k_max(double rate) const {
    if (!(rate > 0.0)) throw std::invalid_argument("truncation rate must be positive");
    return static_cast<std::int64_t>(std::ceil(tail_exponent / rate));
}

void require_epsilon(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
}

LemmaReport sqrt_bounds_check(std::int64_t n, double t) {
    require_positive_n(n, "sqrt_bounds_check");
    const auto nd = static_cast<long double>(n);
    if (!(t >= 0.0) || static_cast<long double>(t) > nd) {
        throw std::invalid_argument("sqrt_bounds_check: t must lie in [0, n]");
    }
    const long double tl = t;
    const long double s = std::sqrt(nd);
    const long double mid = std::sqrt(nd - tl);
    const long double upper = s - tl / (2 * s);
    const long double lower = upper - tl * tl / (2 * nd * s);
    const long double up_margin = upper - mid;
    const long double low_margin = mid - lower;
    const long double tol = 8 * LDBL_EPSILON * s;

    LemmaReport rep;
    rep.lemma = "sqrt_bounds";
    rep.params = {{"n", n}, {"t", t}};
    rep.lhs = static_cast<double>(mid);
    rep.rhs = static_cast<double>(upper);
    rep.margin = static_cast<double>(std::min(up_margin, low_margin));
    rep.recorded = {{"lower_bound", static_cast<double>(lower)},
                    {"upper_bound", static_cast<double>(upper)},
                    {"upper_margin", static_cast<double>(up_margin)},
                    {"lower_margin", static_cast<double>(low_margin)}};
    rep.pass = up_margin >= -tol && low_margin >= -tol;
    return rep;
}

LemmaReport exp_quotient_check(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("exp_quotient_check: x must be positive");
    }
    const long double xl = x;
    const long double inv_sq = 1.0L / (xl * xl);
    const long double sh = std::sinh(xl / 2);
    const long double quotient = 1.0L / (4 * sh * sh);
    long double upper_margin = 0;
    if (x < 1e-2) {
        // 1/x^2 - 1/(4 sinh^2(x/2)) = 1/12 - x^2/240 + x^4/6048 - ...
        const long double x2 = xl * xl;
        upper_margin = 1.0L / 12 - x2 / 240 + x2 * x2 / 6048;
    } else {
        upper_margin = inv_sq - quotient;
    }

    LemmaReport rep;
    rep.lemma = "exp_quotient";
    rep.params = {{"x", x}};
    rep.lhs = static_cast<double>(quotient);
    rep.rhs = static_cast<double>(inv_sq);
    rep.recorded = {{"upper_margin", static_cast<double>(upper_margin)}};
    long double margin = upper_margin;
    bool ok = upper_margin > 0;
    if (x <= 1.0) {
        const long double lower_margin = 2 - upper_margin;
        rep.recorded["lower_margin"] = static_cast<double>(lower_margin);
        margin = std::min(margin, lower_margin);
        ok = ok && lower_margin > 0;
    }
    rep.margin = static_cast<double>(margin);
    rep.pass = ok;
    return rep;
}

LemmaReport cubic_qseries_check(double q, const TruncationPolicy& policy) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("cubic_qseries_check: q must lie in (0, 1)");
    const double one_minus = 1.0 - q;
    const double d4 = std::pow(one_minus, 4);
    const double closed = (q * q * q + 4 * q * q + q) / d4;
    const double bound = 6 * q / d4;
    const double bound_margin = q * (q + 5) / (one_minus * one_minus * one_minus);

    // Pick V so that the tail beyond V is below delta * closed, using the
    // term ratio q (1 + 1/v)^3 <= q (1 + 1/V)^3 for v >= V.
    const double log_q = std::log(q);
    auto v_max = std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(policy.tail_exponent / -log_q)));
    double tail = std::numeric_limits<double>::infinity();
    for (;;) {
        const double vd = static_cast<double>(v_max);
        const double ratio = q * std::pow(1.0 + 1.0 / vd, 3);
        if (ratio < 1.0) {
            const double next = std::pow(vd + 1, 3) * std::exp((vd + 1) * log_q);
            tail = next / (1.0 - ratio);
            if (tail <= 1e-3 * policy.delta * closed) break;
        }
        if (v_max > kMaxSeriesTerms / 2) {
            throw std::invalid_argument("cubic_qseries_check: q too close to 1 for the partial sum");
        }
        v_max *= 2;
    }
    CompensatedSum partial;
    for (std::int64_t v = 1; v <= v_max; ++v) {
        const double vd = static_cast<double>(v);
        const double term = vd * vd * vd * std::pow(q, vd);
        if (term == 0.0) break;
        partial += term;
    }
    const double p = partial.value();
    const double rel = std::fabs(p - closed) / closed;

    LemmaReport rep;
    rep.lemma = "cubic_qseries";
    rep.params = {{"q", q}};
    rep.lhs = closed;
    rep.rhs = bound;
    rep.margin = bound_margin;
    rep.truncation = static_cast<double>(v_max);
    rep.recorded = {{"partial_sum", p}, {"relative_gap", rel}, {"tail_bound", tail}};
    rep.pass = bound_margin > 0 && p < bound && rel <= policy.delta;
    return rep;
}

std::vector<std::int64_t> divisor_count_table(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("divisor_count_table: negative limit");
    std::vector<std::int64_t> d(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t k = 1; k <= limit; ++k) {
        for (std::int64_t j = k; j <= limit; j += k) ++d[static_cast<std::size_t>(j)];
    }
    return d;
}

LemmaReport lambert_sum(std::int64_t n, double c1, std::int64_t k_max, const TruncationPolicy& policy) {
    require_positive_n(n, "lambert_sum");
    if (!(c1 > 0.0)) throw std::invalid_argument("lambert_sum: c1 must be positive");
    if (k_max < 1) throw std::invalid_argument("lambert_sum: k_max must be positive");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double c = c1 / (2 * sqrt_n);
    const double kd = static_cast<double>(k_max);

    // Tails beyond k_max of both series; the truncated sums also differ by at
    // most the second tail.
    const double l1_tail = std::exp(-c * (kd + 1)) / ((-std::expm1(-c)) * (-std::expm1(-c * (kd + 1))));
    const double ratio = std::exp(-c) * (1.0 + 1.0 / (kd + 1));
    const double l2_tail = ratio < 1.0 ? (kd + 1) * std::exp(-c * (kd + 1)) / (1.0 - ratio)
                                       : std::numeric_limits<double>::infinity();
    const double tail = l1_tail + 2 * l2_tail;

    const auto d = divisor_count_table(k_max);
    CompensatedSum l1;
    CompensatedSum l2;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const double x = c * static_cast<double>(k);
        l1 += 1.0 / std::expm1(x);
        l2 += static_cast<double>(d[static_cast<std::size_t>(k)]) * std::exp(-x);
    }
    const double v1 = l1.value();
    const double v2 = l2.value();
    if (!(tail <= policy.delta * v1)) {
        throw std::invalid_argument("lambert_sum: k_max = " + std::to_string(k_max) +
                                    " leaves a tail above the tolerance");
    }

    LemmaReport rep;
    rep.lemma = "lambert";
    rep.params = {{"n", n}, {"c1", c1}, {"k_max", k_max}};
    rep.lhs = v1;
    rep.rhs = v2;
    rep.margin = std::fabs(v1 - v2);
    rep.truncation = kd;
    rep.recorded = {{"tail_bound", tail},
                    {"L1_over_sqrt_n", v1 / sqrt_n},
                    {"L1_over_n_0.6", v1 / std::pow(static_cast<double>(n), 0.6)}};
    rep.pass = rep.margin <= kLambertTolerance + tail;
    return rep;
}

LemmaReport lambert_sum(std::int64_t n, double c1) {
    require_positive_n(n, "lambert_sum");
    if (!(c1 > 0.0)) throw std::invalid_argument("lambert_sum: c1 must be positive");
    const TruncationPolicy policy;
    return lambert_sum(n, c1, policy.k_max(c1 / (2 * std::sqrt(static_cast<double>(n)))), policy);
}

double residue_class_sum(std::int64_t m, std::int64_t r, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("residue_class_sum: q must lie in (0, 1)");
    if (m < 1 || r < 1) throw std::invalid_argument("residue_class_sum: m and r must be positive");
    return residue_class_sum_exp(m, r, -std::log(q));
}

LemmaReport weighted_exp_sum(const ResidueClassSet& set, std::int64_t n, double theta,
                             const TruncationPolicy& policy) {
    require_positive_n(n, "weighted_exp_sum");
    const auto k = AsymptoticConstants::make(set.modulus(), set.ell(), theta);
    const double nd = static_cast<double>(n);
    const double c = k.c1 / (2 * std::sqrt(nd));
    const auto k_max = policy.k_max(c);

    CompensatedSum s;
    for (std::int64_t kk = 1; kk <= k_max; ++kk) {
        const double x = c * static_cast<double>(kk);
        for (auto r : set.residues()) s += residue_class_sum_exp(set.modulus(), r, x);
    }
    double next = 0.0;
    for (auto r : set.residues()) next += residue_class_sum_exp(set.modulus(), r, c * static_cast<double>(k_max + 1));
    const double tail = next / (-std::expm1(-c));

    const double total = s.value();
    const double target = nd / (1.0 + theta);
    const double deviation = std::fabs(total - target);
    const double centered = std::fabs(total * (1.0 + theta) / nd - 1.0);

    LemmaReport rep;
    rep.lemma = "weighted_exp_sum";
    rep.params = {{"set", set.to_json()}, {"n", n}, {"theta", theta}, {"c1", k.c1}};
    rep.lhs = total;
    rep.rhs = target;
    rep.margin = deviation;
    rep.truncation = static_cast<double>(k_max);
    rep.recorded = {{"deviation", deviation},
                    {"centered", centered},
                    {"centered_times_n_0.25", centered * std::pow(nd, 0.25)},
                    {"deviation_over_n_0.75", deviation / std::pow(nd, 0.75)},
                    {"S_over_n", total / nd},
                    {"tail_bound", tail}};
    rep.pass = std::isfinite(total) && total > 0 && tail <= policy.delta * total;
    return rep;
}

LemmaReport tail_sum(const ResidueClassSet& set, std::int64_t n, std::int64_t n0, double c1,
                     const TruncationPolicy& policy) {
    require_positive_n(n, "tail_sum");
    if (n0 < 0) throw std::invalid_argument("tail_sum: N0 must be nonnegative");
    if (n < 2 * n0) throw std::invalid_argument("tail_sum: requires n >= 2 N0");
    if (!(c1 > 0.0)) throw std::invalid_argument("tail_sum: c1 must be positive");
    const double nd = static_cast<double>(n);
    const double c = c1 / (2 * std::sqrt(nd));
    const std::int64_t first = n - n0 + 1;
    const std::int64_t window = policy.k_max(c);
    const std::int64_t last = first + window;
    const auto sigma = sigma_A_table(set, last);

    // T = e^{-c first} sum_j sigma(j) e^{-c (j - first)}
    CompensatedSum shifted;
    for (std::int64_t j = first; j <= last; ++j) {
        const auto sj = sigma[static_cast<std::size_t>(j)];
        if (sj != 0) shifted += static_cast<double>(sj) * std::exp(-c * static_cast<double>(j - first));
    }
    const double inner = shifted.value();
    const double log_t = inner > 0 ? std::log(inner) - c * static_cast<double>(first)
                                   : -std::numeric_limits<double>::infinity();
    const double log_t_sqrt_n = log_t + 0.5 * std::log(nd);

    LemmaReport rep;
    rep.lemma = "tail_sum";
    rep.params = {{"set", set.to_json()}, {"n", n}, {"N0", n0}, {"c1", c1}};
    rep.lhs = std::exp(log_t);
    rep.rhs = 0.0;
    rep.margin = rep.lhs;
    rep.truncation = static_cast<double>(window);
    rep.recorded = {{"log_T", log_t}, {"log_T_sqrt_n", log_t_sqrt_n}, {"T_sqrt_n", std::exp(log_t_sqrt_n)}};
    rep.pass = std::isfinite(log_t);
    return rep;
}

LemmaReport cube_weighted_sum(const ResidueClassSet& set, std::int64_t n, double c1,
                              std::span<const std::int64_t> sigma) {
    require_positive_n(n, "cube_weighted_sum");
    require_sigma(sigma, n);
    if (!(c1 > 0.0)) throw std::invalid_argument("cube_weighted_sum: c1 must be positive");
    const double nd = static_cast<double>(n);
    const double c = c1 / (2 * std::sqrt(nd));
    // k^2 a^3 = (ka)^2 a, grouped by j = ka
    const double u = sigma_sums(sigma, n, c).cube;

    LemmaReport rep;
    rep.lemma = "cube_weighted_sum";
    rep.params = {{"set", set.to_json()}, {"n", n}, {"c1", c1}};
    rep.lhs = u;
    rep.rhs = 0.0;
    rep.margin = u;
    rep.recorded = {{"U_over_n2", u / (nd * nd)}};
    rep.pass = n < set.min_element() ? u == 0.0 : u > 0.0;
    return rep;
}

LemmaReport cube_weighted_sum(const ResidueClassSet& set, std::int64_t n, double c1) {
    require_positive_n(n, "cube_weighted_sum");
    const auto sigma = sigma_A_table(set, n);
    return cube_weighted_sum(set, n, c1, sigma);
}

LemmaReport induction_inequality_check(const ResidueClassSet& set, double eps, std::int64_t n,
                                       InductionSide side, std::int64_t n0,
                                       std::span<const std::int64_t> sigma) {
    require_epsilon(eps);
    require_positive_n(n, "induction_inequality_check");
    const double nd = static_cast<double>(n);
    LemmaReport rep;
    if (side == InductionSide::upper) {
        const auto s = weighted_exp_sum(set, n, eps);
        rep.lemma = "induction_upper";
        rep.params = {{"set", set.to_json()}, {"eps", eps}, {"n", n}};
        rep.lhs = s.lhs;
        rep.rhs = nd;
        rep.margin = nd - s.lhs;
        rep.truncation = s.truncation;
        rep.pass = s.pass && s.lhs < nd;
        return rep;
    }
    if (!set.gcd_condition()) {
        throw std::domain_error("lower induction step needs gcd(r_1..r_l, m) = 1");
    }
    if (n < 2 * n0) throw std::invalid_argument("lower induction step needs n >= 2 N0");
    require_sigma(sigma, n);
    const double c1v = c1(set.modulus(), set.ell(), -eps);
    const double c = c1v / (2 * std::sqrt(nd));
    const auto sums = sigma_sums(sigma, n - n0, c);
    const double correction = c1v / (2 * std::pow(nd, 1.5)) * sums.cube;
    const double lhs = sums.plain - correction;

    rep.lemma = "induction_lower";
    rep.params = {{"set", set.to_json()}, {"eps", eps}, {"n", n}, {"N0", n0}};
    rep.lhs = lhs;
    rep.rhs = nd;
    rep.margin = lhs - nd;
    rep.recorded = {{"first_sum", sums.plain}, {"correction", correction}};
    rep.pass = lhs > nd;
    return rep;
}

LemmaReport induction_inequality_check(const ResidueClassSet& set, double eps, std::int64_t n,
                                       InductionSide side) {
    if (side == InductionSide::upper) return induction_inequality_check(set, eps, n, side, 0, {});
    require_epsilon(eps);
    require_positive_n(n, "induction_inequality_check");
    const auto n0 = set.representability_threshold();
    const auto sigma = sigma_A_table(set, n);
    return induction_inequality_check(set, eps, n, side, n0, sigma);
}

}  // namespace rpart

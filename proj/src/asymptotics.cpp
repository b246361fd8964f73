#include "rpart/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rpart {

namespace {

double mean_of(const std::vector<RatioPoint>& pts, double lo, double hi) {
    double s = 0;
    int cnt = 0;
    for (const auto& p : pts) {
        const auto nd = static_cast<double>(p.n);
        if (nd > lo && nd <= hi) {
            s += p.ratio;
            ++cnt;
        }
    }
    return cnt ? s / cnt : std::numeric_limits<double>::quiet_NaN();
}

EnvelopeFit fit_envelope(const PartitionTable& table, double eps, double theta, std::int64_t from,
                         bool take_max) {
    const auto& set = table.set();
    EnvelopeFit fit{eps, c1(set.modulus(), set.ell(), theta), 0, 0, -1, from, table.limit()};
    bool first = true;
    for (std::int64_t n = from; n <= table.limit(); ++n) {
        if (sgn(table[n]) == 0) continue;
        const double v = log_value(table[n]) - fit.c1 * std::sqrt(static_cast<double>(n));
        if (first || (take_max ? v > fit.log_k : v < fit.log_k)) {
            fit.log_k = v;
            fit.attained_at = n;
            first = false;
        }
    }
    if (first) throw std::invalid_argument("no representable n in the fitting range");
    fit.k = std::exp(fit.log_k);
    return fit;
}

template <class Check>
ThresholdSearch threshold_search(std::int64_t first, std::int64_t n_max, std::int64_t step, Check check) {
    if (step < 1) throw std::invalid_argument("grid step must be positive");
    ThresholdSearch out{std::nullopt, first, n_max, step, 0};
    for (std::int64_t n = n_max; n >= first; n -= step) {
        ++out.points_tested;
        if (!check(n)) break;
        out.threshold = n;
    }
    return out;
}

}  // namespace

HrEstimate hr_estimate(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("hr_estimate: n must be positive");
    const double nd = static_cast<double>(n);
    const double lg = c0(1, 1) * std::sqrt(nd) - std::log(4.0 * nd * std::sqrt(3.0));
    return {lg, std::exp(lg)};
}

nlohmann::json EnvelopeFit::to_json() const {
    return nlohmann::json{{"eps", eps},   {"c1", c1},       {"log_K", log_k},
                          {"K", k},       {"attained_at", attained_at},
                          {"range", {from, to}}};
}

nlohmann::json ThresholdSearch::to_json() const {
    nlohmann::json j{{"first", first}, {"n_max", n_max}, {"step", step}, {"points_tested", points_tested}};
    j["threshold"] = threshold ? nlohmann::json(*threshold) : nlohmann::json("not found");
    return j;
}

nlohmann::json RatioReport::to_json() const {
    nlohmann::json j{{"set", set.to_json()},
                     {"limit", limit},
                     {"step", step},
                     {"c0", c0},
                     {"max_dev_top_decile", max_dev_top_decile},
                     {"mean_top_decile", mean_top_decile},
                     {"mean_second_decile", mean_second_decile}};
    if (upper) j["K_upper"] = upper->to_json();
    if (lower) j["K_lower"] = lower->to_json();
    if (n0) j["N0"] = *n0;
    return j;
}

double ratio_at(const PartitionTable& table, std::int64_t n) {
    if (n < 1 || n > table.limit()) throw std::out_of_range("ratio_at: n outside the table");
    if (sgn(table[n]) == 0) throw std::domain_error("ratio_at: p_A(n) = 0");
    const auto& set = table.set();
    return log_value(table[n]) / (c0(set.modulus(), set.ell()) * std::sqrt(static_cast<double>(n)));
}

RatioReport log_ratio_report(const PartitionTable& table, std::int64_t step, std::optional<double> eps) {
    if (step < 1) throw std::invalid_argument("grid step must be positive");
    const auto& set = table.set();
    RatioReport rep{set, table.limit(), step, c0(set.modulus(), set.ell()), {}, 0, 0, 0, {}, {}, {}};
    for (std::int64_t n = step; n <= table.limit(); n += step) {
        if (sgn(table[n]) == 0) continue;
        const double lg = log_value(table[n]);
        const double scale = rep.c0 * std::sqrt(static_cast<double>(n));
        rep.points.push_back({n, lg, scale, lg / scale});
    }
    const auto lim = static_cast<double>(table.limit());
    for (const auto& p : rep.points) {
        if (static_cast<double>(p.n) > 0.9 * lim) {
            rep.max_dev_top_decile = std::max(rep.max_dev_top_decile, std::fabs(p.ratio - 1.0));
        }
    }
    rep.mean_top_decile = mean_of(rep.points, 0.9 * lim, lim);
    rep.mean_second_decile = mean_of(rep.points, 0.8 * lim, 0.9 * lim);
    if (eps) {
        rep.upper = fit_upper_K(table, *eps);
        if (set.gcd_condition()) {
            rep.lower = fit_lower_K(table, *eps);
            rep.n0 = set.representability_threshold();
        }
    }
    return rep;
}

RatioReport log_ratio_report(const ResidueClassSet& set, std::int64_t limit, std::int64_t step) {
    if (!set.gcd_condition()) {
        throw std::domain_error("log ratio needs gcd(r_1..r_l, m) = 1 for " + set.describe());
    }
    return log_ratio_report(compute_table_euler(set, limit), step);
}

EnvelopeFit fit_upper_K(const PartitionTable& table, double eps) {
    require_epsilon(eps);
    return fit_envelope(table, eps, eps, 0, true);
}

EnvelopeFit fit_lower_K(const PartitionTable& table, double eps) {
    require_epsilon(eps);
    const auto n0 = table.set().representability_threshold();
    if (n0 > table.limit()) throw std::invalid_argument("table ends before N0");
    return fit_envelope(table, eps, -eps, n0, false);
}

ThresholdSearch empirical_N_threshold(const ResidueClassSet& set, double eps, std::int64_t n_max,
                                      std::int64_t step) {
    require_epsilon(eps);
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    return threshold_search(1, n_max, step, [&](std::int64_t n) {
        return induction_inequality_check(set, eps, n, InductionSide::upper).pass;
    });
}

ThresholdSearch empirical_lower_threshold(const ResidueClassSet& set, double eps, std::int64_t n_max,
                                          std::int64_t step) {
    require_epsilon(eps);
    const auto n0 = set.representability_threshold();
    const auto first = std::max<std::int64_t>(1, 2 * n0);
    if (n_max < first) throw std::invalid_argument("n_max below 2 N0");
    const auto sigma = sigma_A_table(set, n_max);
    return threshold_search(first, n_max, step, [&](std::int64_t n) {
        return induction_inequality_check(set, eps, n, InductionSide::lower, n0, sigma).pass;
    });
}

}  // namespace rpart

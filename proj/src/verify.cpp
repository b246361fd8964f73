#include "rpart/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "rpart/asymptotics.hpp"
#include "rpart/lemmas.hpp"
#include "rpart/partition_table.hpp"

namespace rpart {

namespace {

std::vector<ResidueClassSet> oracle_sets() {
    return {ResidueClassSet(1, {1}),    ResidueClassSet(2, {1}),    ResidueClassSet(3, {1, 2}),
            ResidueClassSet(4, {1, 2}), ResidueClassSet(5, {2, 3}), ResidueClassSet(6, {2, 3}),
            ResidueClassSet(4, {2}),    ResidueClassSet(6, {3, 6})};
}

CheckResult check_oracle() {
    for (const auto& s : oracle_sets()) {
        const auto e = compute_table_euler(s, 40);
        const auto r = compute_table_recursion(s, 40);
        for (std::int64_t n = 0; n <= 40; ++n) {
            if (e[n] != r[n] || e[n] != brute_force_count(s, n)) {
                return {"tables_match_brute_force", false, s.describe() + " n=" + std::to_string(n)};
            }
        }
    }
    return {"tables_match_brute_force", true, "8 sets; n <= 40"};
}

CheckResult check_recursion(std::int64_t limit) {
    for (const auto& s : {ResidueClassSet(1, {1}), ResidueClassSet(2, {1}), ResidueClassSet(5, {2, 3})}) {
        const auto t = compute_table_euler(s, limit);
        if (const auto bad = t.first_recursion_violation(); bad >= 0) {
            return {"recursion_identity", false, s.describe() + " n=" + std::to_string(bad)};
        }
        if (!(compute_table_recursion(s, limit) == t)) {
            return {"recursion_identity", false, s.describe() + " algorithms disagree"};
        }
    }
    return {"recursion_identity", true, "3 sets; n <= " + std::to_string(limit)};
}

CheckResult check_euler_identity(std::int64_t limit) {
    const auto q = distinct_parts_table(limit);
    const auto odd = compute_table_euler(ResidueClassSet(2, {1}), limit);
    for (std::int64_t n = 0; n <= limit; ++n) {
        if (q[static_cast<std::size_t>(n)] != odd[n]) {
            return {"distinct_equals_odd", false, "n=" + std::to_string(n)};
        }
    }
    return {"distinct_equals_odd", true, "n <= " + std::to_string(limit)};
}

CheckResult check_full_residues(std::int64_t limit) {
    const auto base = compute_table_euler(ResidueClassSet(1, {1}), limit);
    for (std::int64_t m = 2; m <= 6; ++m) {
        std::vector<std::int64_t> all;
        for (std::int64_t r = 1; r <= m; ++r) all.push_back(r);
        const auto t = compute_table_euler(ResidueClassSet(m, all), limit);
        for (std::int64_t n = 0; n <= limit; ++n) {
            if (t[n] != base[n]) return {"all_residues_is_p", false, "m=" + std::to_string(m)};
        }
    }
    return {"all_residues_is_p", true, "m = 2..6"};
}

CheckResult check_thresholds() {
    for (const auto& s : {ResidueClassSet(5, {2, 3}), ResidueClassSet(6, {2, 3}), ResidueClassSet(7, {3, 5}),
                          ResidueClassSet(10, {7})}) {
        const auto n0 = s.representability_threshold();
        const auto t = compute_table_euler(s, n0 + 400);
        for (std::int64_t n = n0; n <= t.limit(); ++n) {
            if (sgn(t[n]) == 0) return {"representability_threshold", false, s.describe()};
        }
        if (n0 >= 1 && sgn(t[n0 - 1]) != 0) return {"representability_threshold", false, s.describe()};
    }
    return {"representability_threshold", true, "4 sets"};
}

CheckResult check_constants() {
    for (std::int64_t m = 1; m <= 20; ++m) {
        for (std::int64_t l = 1; l <= m; ++l) {
            const double v = c0(m, l);
            const double pi2 = v * v * 3.0 * static_cast<double>(m) / (2.0 * static_cast<double>(l));
            if (std::fabs(pi2 / (std::numbers::pi * std::numbers::pi) - 1.0) > 1e-12) {
                return {"c0_identity", false, "m=" + std::to_string(m) + " l=" + std::to_string(l)};
            }
        }
    }
    return {"c0_identity", true, "1 <= l <= m <= 20"};
}

CheckResult check_elementary_lemmas() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> nd(1, 1'000'000);
    for (int i = 0; i < 1000; ++i) {
        const auto n = nd(rng);
        const double t = unit(rng) * static_cast<double>(n);
        if (!sqrt_bounds_check(n, t).pass) return {"lemmas_1_to_3", false, "sqrt bounds"};
        const double x = std::pow(10.0, -6.0 + 8.0 * unit(rng));
        if (!exp_quotient_check(x).pass) return {"lemmas_1_to_3", false, "exp quotient"};
        const double q = unit(rng);
        if (q > 0.0 && q < 0.999 && !cubic_qseries_check(q).pass) {
            return {"lemmas_1_to_3", false, "cubic q-series"};
        }
    }
    return {"lemmas_1_to_3", true, "1000 draws each"};
}

CheckResult check_lambert() {
    for (std::int64_t n : {100, 1000, 10000}) {
        for (double c : {1.0, c0(1, 1), c0(2, 1)}) {
            if (!lambert_sum(n, c).pass) return {"lambert_identity", false, "n=" + std::to_string(n)};
        }
    }
    return {"lambert_identity", true, "n in {1e2 1e3 1e4}"};
}

CheckResult check_envelopes(std::int64_t limit) {
    const auto t = compute_table_euler(ResidueClassSet(1, {1}), limit);
    const auto up = fit_upper_K(t, 0.1);
    const auto lo = fit_lower_K(t, 0.1);
    for (std::int64_t n = 0; n <= limit; ++n) {
        const double lg = log_value(t[n]);
        const double sq = std::sqrt(static_cast<double>(n));
        if (lg > up.log_k + up.c1 * sq + 1e-9 || lg < lo.log_k + lo.c1 * sq - 1e-9) {
            return {"envelope_fits", false, "n=" + std::to_string(n)};
        }
    }
    return {"envelope_fits", true, "eps=0.1; n <= " + std::to_string(limit)};
}

CheckResult check_ratio_trend(std::int64_t limit) {
    const auto rep = log_ratio_report(ResidueClassSet(1, {1}), limit, std::max<std::int64_t>(1, limit / 100));
    for (const auto& p : rep.points) {
        if (p.n >= 100 && !(p.ratio > 0.0 && p.ratio < 1.1)) {
            return {"ratio_below_one_and_rising", false, "n=" + std::to_string(p.n)};
        }
    }
    if (!(rep.mean_top_decile > rep.mean_second_decile)) {
        return {"ratio_below_one_and_rising", false, "decile means not increasing"};
    }
    return {"ratio_below_one_and_rising", true, "m=1; n <= " + std::to_string(limit)};
}

}  // namespace

std::vector<CheckResult> run_property_suite(std::int64_t limit) {
    return {check_oracle(),           check_recursion(limit),         check_euler_identity(limit),
            check_full_residues(limit), check_thresholds(),           check_constants(),
            check_elementary_lemmas(),  check_lambert(),              check_envelopes(limit),
            check_ratio_trend(limit)};
}

}  // namespace rpart

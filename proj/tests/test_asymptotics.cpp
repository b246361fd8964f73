#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rpart/asymptotics.hpp"

using rpart::ResidueClassSet;

TEST_CASE("c0 and c1") {
    CHECK(rpart::c0(1, 1) == doctest::Approx(2.5650996603).epsilon(1e-10));
    CHECK(rpart::c0(2, 1) == doctest::Approx(1.8137993642).epsilon(1e-10));
    for (std::int64_t m = 1; m <= 20; ++m) {
        CHECK(rpart::c0(m, m) == doctest::Approx(rpart::c0(1, 1)).epsilon(1e-15));
        for (std::int64_t l = 1; l <= m; ++l) {
            const double v = rpart::c0(m, l);
            CHECK(v * v * 3.0 * m / (2.0 * l) == doctest::Approx(std::numbers::pi * std::numbers::pi).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(rpart::c0(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(rpart::c0(0, 0), std::invalid_argument);

    CHECK(rpart::c1(5, 2, 0.0) == rpart::c0(5, 2));
    CHECK(rpart::c1(1, 1, 3.0) == doctest::Approx(2 * rpart::c0(1, 1)));
    CHECK(rpart::c1(2, 1, -0.25) == doctest::Approx(std::sqrt(0.75) * std::numbers::pi / std::sqrt(3.0)));
    CHECK_THROWS_AS(rpart::c1(1, 1, -1.0), std::invalid_argument);

    const auto k = rpart::AsymptoticConstants::make(3, 2, 0.1);
    CHECK(k.c1 == doctest::Approx(std::sqrt(1.1) * k.c0));
}

TEST_CASE("Hardy-Ramanujan estimate") {
    const auto p = oracle::pentagonal_partitions(10000);
    CHECK(p[100] == 190569292);
    CHECK(rpart::hr_estimate(100).value / 190569292.0 == doctest::Approx(1.0457135630736354).epsilon(1e-9));
    CHECK(rpart::hr_estimate(1).value == doctest::Approx(1.8766704226053694).epsilon(1e-12));

    // relative log error shrinks over 10^2, 10^3, 10^4
    double prev = 1e9;
    for (std::int64_t n : {100, 1000, 10000}) {
        const double lp = rpart::log_value(p[static_cast<std::size_t>(n)]);
        const double rel = std::fabs(rpart::hr_estimate(n).log - lp) / lp;
        CHECK(rel < prev);
        prev = rel;
    }
    const auto huge = rpart::hr_estimate(100'000'000);
    CHECK(std::isinf(huge.value));
    CHECK(huge.log / (rpart::c0(1, 1) * 1e4) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("log ratio report") {
    const auto t = rpart::compute_table_euler(ResidueClassSet(1, {1}), 10000);
    CHECK(rpart::ratio_at(t, 10000) == doctest::Approx(0.956530432752374).epsilon(1e-12));

    const auto rep = rpart::log_ratio_report(t, 100, 0.1);
    CHECK(rep.points.size() == 100);
    for (const auto& pt : rep.points) {
        CHECK(std::isfinite(pt.ratio));
        if (pt.n >= 100) {
            CHECK(pt.ratio > 0.0);
            CHECK(pt.ratio < 1.1);
        }
    }
    CHECK(rep.mean_top_decile > rep.mean_second_decile);
    CHECK(rep.max_dev_top_decile < 0.05);
    REQUIRE(rep.upper);
    REQUIRE(rep.lower);
    CHECK(*rep.n0 == 0);
}

TEST_CASE("ratio skips zeros and is zero where p_A(n) = 1") {
    const ResidueClassSet s(7, {3, 5});
    const auto t = rpart::compute_table_euler(s, 30);
    const auto rep = rpart::log_ratio_report(t, 1);
    for (const auto& pt : rep.points) CHECK(sgn(t[pt.n]) > 0);
    CHECK(rep.points.size() == 26);  // gaps at 1, 2, 4, 7
    CHECK(rpart::ratio_at(t, 3) == 0.0);
    CHECK_THROWS_AS(rpart::ratio_at(t, 4), std::domain_error);
    CHECK_THROWS_AS(rpart::log_ratio_report(ResidueClassSet(4, {2}), 100, 10), std::domain_error);
}

TEST_CASE("distinct parts and odd parts give the same ratio grid") {
    const std::int64_t limit = 3000;
    const auto odd = rpart::compute_table_euler(ResidueClassSet(2, {1}), limit);
    const auto q = rpart::distinct_parts_table(limit);
    const rpart::PartitionTable from_q(ResidueClassSet(2, {1}), q);
    const auto a = rpart::log_ratio_report(odd, 30);
    const auto b = rpart::log_ratio_report(from_q, 30);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].ratio == b.points[i].ratio);
}

TEST_CASE("envelope fits bound the table") {
    const ResidueClassSet s(1, {1});
    const auto t = rpart::compute_table_euler(s, 5000);
    const auto up = rpart::fit_upper_K(t, 0.1);
    const auto lo = rpart::fit_lower_K(t, 0.1);
    CHECK(up.k >= 1.0);  // n = 0 alone forces K >= 1
    CHECK(std::isfinite(up.k));
    // log p(n) - c1 sqrt n < 0 for every n >= 1, so the maximum sits at n = 0
    CHECK(up.attained_at == 0);
    CHECK(up.k == 1.0);
    CHECK(lo.k > 0.0);
    CHECK(lo.k <= 1.0);  // p(0) = p(1) = 1
    for (std::int64_t n = 0; n <= t.limit(); ++n) {
        const double lg = rpart::log_value(t[n]);
        const double sq = std::sqrt(static_cast<double>(n));
        CHECK(lg <= up.log_k + up.c1 * sq + 1e-9);
        CHECK(lg >= lo.log_k + lo.c1 * sq - 1e-9);
    }
    // monotone in eps
    double prev_up = 1e300;
    double prev_lo = 0.0;
    for (double eps : {0.05, 0.1, 0.2, 0.4}) {
        const auto u = rpart::fit_upper_K(t, eps);
        const auto l = rpart::fit_lower_K(t, eps);
        CHECK(u.k <= prev_up);
        CHECK(l.k >= prev_lo);
        prev_up = u.k;
        prev_lo = l.k;
    }
    CHECK_THROWS_AS(rpart::fit_upper_K(t, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(rpart::fit_lower_K(rpart::compute_table_euler(ResidueClassSet(4, {2}), 50), 0.1),
                    std::domain_error);
}

TEST_CASE("gcd-failing sets still get an upper envelope") {
    const auto t = rpart::compute_table_euler(ResidueClassSet(4, {2}), 400);
    const auto up = rpart::fit_upper_K(t, 0.2);
    CHECK(up.k >= 1.0);
}

TEST_CASE("empirical thresholds") {
    const ResidueClassSet p(1, {1});
    const auto big = rpart::empirical_N_threshold(p, 0.4, 2000);
    REQUIRE(big.threshold);
    CHECK(*big.threshold <= 10);
    const auto at = rpart::weighted_exp_sum(p, *big.threshold, 0.4);
    CHECK(at.lhs < static_cast<double>(*big.threshold));

    std::int64_t prev = 1 << 30;
    for (double eps : {0.1, 0.2, 0.4}) {
        const auto r = rpart::empirical_N_threshold(p, eps, 3000);
        REQUIRE(r.threshold);
        CHECK(*r.threshold <= prev);
        prev = *r.threshold;
    }

    const auto lower = rpart::empirical_lower_threshold(ResidueClassSet(5, {2, 3}), 0.25, 4000, 10);
    REQUIRE(lower.threshold);
    CHECK(*lower.threshold > 4);
    for (std::int64_t n = *lower.threshold; n <= 4000; n += 10) {
        CHECK(rpart::induction_inequality_check(ResidueClassSet(5, {2, 3}), 0.25, n, rpart::InductionSide::lower).pass);
    }
    // too small a range: the lower inequality fails at n_max itself
    const auto none = rpart::empirical_lower_threshold(ResidueClassSet(5, {2, 3}), 0.25, 50, 1);
    CHECK_FALSE(none.threshold);
}

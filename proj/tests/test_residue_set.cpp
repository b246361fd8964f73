#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rpart/partition_table.hpp"
#include "rpart/residue_set.hpp"

using rpart::ResidueClassSet;

TEST_CASE("construction rejects malformed residue lists") {
    CHECK_THROWS_AS(ResidueClassSet(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(3, {4}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(5, {3, 2}), std::invalid_argument);
    CHECK_NOTHROW(ResidueClassSet(4, {1, 2, 3, 4}));
}

TEST_CASE("contains uses representatives in [1, m]") {
    CHECK(ResidueClassSet(2, {1}).contains(7));
    CHECK_FALSE(ResidueClassSet(3, {1}).contains(6));
    CHECK(ResidueClassSet(4, {1, 2}).contains(10));
    CHECK(ResidueClassSet(3, {3}).contains(6));
    CHECK_THROWS_AS(ResidueClassSet(2, {1}).contains(0), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet(2, {1}).contains(-3), std::invalid_argument);
}

TEST_CASE("elements_up_to") {
    using V = std::vector<std::int64_t>;
    CHECK(ResidueClassSet(4, {1, 2}).elements_up_to(10) == V{1, 2, 5, 6, 9, 10});
    CHECK(ResidueClassSet(2, {1}).elements_up_to(5) == V{1, 3, 5});
    CHECK(ResidueClassSet(7, {3, 5}).elements_up_to(0).empty());
    CHECK(ResidueClassSet(7, {3, 5}).elements_up_to(2).empty());
}

TEST_CASE("elements_up_to agrees with filtering by contains; contains is periodic") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
        std::vector<std::int64_t> rs;
        for (std::int64_t r = 1; r <= m; ++r) {
            if (rng() % 2) rs.push_back(r);
        }
        if (rs.empty()) rs.push_back(m);
        const ResidueClassSet s(m, rs);
        const std::int64_t limit = std::uniform_int_distribution<std::int64_t>(0, 80)(rng);
        std::vector<std::int64_t> filtered;
        for (std::int64_t a = 1; a <= limit; ++a) {
            if (s.contains(a)) filtered.push_back(a);
            CHECK(s.contains(a) == s.contains(a + m));
        }
        CHECK(s.elements_up_to(limit) == filtered);
        // length formula: sum over residues of floor((N - r)/m) + 1
        std::int64_t expected_len = 0;
        for (auto r : rs) {
            if (r <= limit) expected_len += (limit - r) / m + 1;
        }
        CHECK(static_cast<std::int64_t>(filtered.size()) == expected_len);
    }
}

TEST_CASE("gcd condition") {
    CHECK(ResidueClassSet(2, {1}).gcd_condition());
    CHECK_FALSE(ResidueClassSet(4, {2}).gcd_condition());
    CHECK(ResidueClassSet(6, {2, 3}).gcd_condition());
    CHECK_FALSE(ResidueClassSet(6, {3, 6}).gcd_condition());
}

TEST_CASE("representability threshold") {
    CHECK(ResidueClassSet(1, {1}).representability_threshold() == 0);
    CHECK(ResidueClassSet(2, {1}).representability_threshold() == 0);
    CHECK(ResidueClassSet(5, {2, 3}).representability_threshold() == 2);
    // {3, 5, 10, 12, ...}: Frobenius number of <3, 5> is 7
    CHECK(ResidueClassSet(7, {3, 5}).representability_threshold() == 8);
    CHECK_THROWS_AS(ResidueClassSet(4, {2}).representability_threshold(), std::domain_error);
}

TEST_CASE("threshold matches the exact table on random gcd-valid sets") {
    std::mt19937 rng(11);
    int tested = 0;
    while (tested < 40) {
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 15)(rng);
        std::vector<std::int64_t> rs;
        for (std::int64_t r = 1; r <= m; ++r) {
            if (rng() % 3 == 0) rs.push_back(r);
        }
        if (rs.empty()) continue;
        const ResidueClassSet s(m, rs);
        if (!s.gcd_condition()) continue;
        ++tested;
        const auto n0 = s.representability_threshold();
        const auto t = rpart::compute_table_euler(s, n0 + 3 * m * m + 50);
        for (std::int64_t n = n0; n <= t.limit(); ++n) CHECK(sgn(t[n]) > 0);
        if (n0 >= 1) CHECK(sgn(t[n0 - 1]) == 0);
    }
}

TEST_CASE("descriptor parsing") {
    const auto s = ResidueClassSet::from_json(nlohmann::json::parse(R"({"m": 4, "r": [1, 2]})"));
    CHECK(s == ResidueClassSet(4, {1, 2}));
    CHECK(ResidueClassSet::from_json(s.to_json()) == s);
    CHECK(ResidueClassSet::from_strings(6, "2,3") == ResidueClassSet(6, {2, 3}));
    CHECK_THROWS_AS(ResidueClassSet::from_strings(6, "2,x"), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet::from_strings(6, "2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet::from_json(nlohmann::json::parse(R"({"m": 4})")), std::invalid_argument);
    CHECK_THROWS_AS(ResidueClassSet::from_json(nlohmann::json::parse(R"({"m": 4, "r": [5]})")),
                    std::invalid_argument);
}

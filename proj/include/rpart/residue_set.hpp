#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace rpart {

/// The part set A: all positive integers congruent to one of r_1 < ... < r_l
/// modulo m, with residues taken in [1, m].
class ResidueClassSet {
public:
    /// Throws std::invalid_argument on m < 1, unsorted/duplicate residues,
    /// or residues outside [1, m].
    ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues);

    static ResidueClassSet from_json(const nlohmann::json& j);
    /// Parses a comma list such as "1,2".
    static ResidueClassSet from_strings(std::int64_t modulus, const std::string& residues);

    std::int64_t modulus() const noexcept { return modulus_; }
    const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
    std::int64_t ell() const noexcept { return static_cast<std::int64_t>(residues_.size()); }

    bool contains(std::int64_t a) const;
    std::vector<std::int64_t> elements_up_to(std::int64_t limit) const;
    std::int64_t min_element() const noexcept { return residues_.front(); }

    bool gcd_condition() const noexcept;

    /// Smallest N0 >= 0 with p_A(n) >= 1 for every n >= N0.
    /// Throws std::domain_error when the gcd condition fails.
    std::int64_t representability_threshold() const;

    nlohmann::json to_json() const;
    std::string describe() const;

    friend bool operator==(const ResidueClassSet&, const ResidueClassSet&) = default;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> residues_;
    std::vector<char> member_;  // indexed by representative 1..m
};

}  // namespace rpart

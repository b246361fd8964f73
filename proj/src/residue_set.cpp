#include "rpart/residue_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rpart {

ResidueClassSet::ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be a positive integer");
    if (residues_.empty()) throw std::invalid_argument("at least one residue is required");
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        const auto r = residues_[i];
        if (r < 1 || r > modulus_) {
            throw std::invalid_argument("residue " + std::to_string(r) + " outside [1, " +
                                        std::to_string(modulus_) + "]");
        }
        if (i > 0 && residues_[i - 1] >= r) {
            throw std::invalid_argument("residues must be strictly increasing");
        }
    }
    member_.assign(static_cast<std::size_t>(modulus_) + 1, 0);
    for (auto r : residues_) member_[static_cast<std::size_t>(r)] = 1;
}

ResidueClassSet ResidueClassSet::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("r")) {
        throw std::invalid_argument(R"(descriptor must look like {"m": M, "r": [..]})");
    }
    if (!j.at("m").is_number_integer() || !j.at("r").is_array()) {
        throw std::invalid_argument("descriptor fields have the wrong type");
    }
    std::vector<std::int64_t> rs;
    for (const auto& v : j.at("r")) {
        if (!v.is_number_integer()) throw std::invalid_argument("residues must be integers");
        rs.push_back(v.get<std::int64_t>());
    }
    return ResidueClassSet(j.at("m").get<std::int64_t>(), std::move(rs));
}

ResidueClassSet ResidueClassSet::from_strings(std::int64_t modulus, const std::string& residues) {
    std::vector<std::int64_t> rs;
    std::stringstream ss(residues);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad residue '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad residue '" + tok + "'");
        rs.push_back(v);
    }
    return ResidueClassSet(modulus, std::move(rs));
}

bool ResidueClassSet::contains(std::int64_t a) const {
    if (a <= 0) throw std::invalid_argument("contains: a must be positive");
    auto rep = a % modulus_;
    if (rep == 0) rep = modulus_;
    return member_[static_cast<std::size_t>(rep)] != 0;
}

std::vector<std::int64_t> ResidueClassSet::elements_up_to(std::int64_t limit) const {
    std::vector<std::int64_t> out;
    for (std::int64_t base = 0; base < limit; base += modulus_) {
        for (auto r : residues_) {
            if (base + r > limit) break;
            out.push_back(base + r);
        }
    }
    return out;
}

bool ResidueClassSet::gcd_condition() const noexcept {
    std::int64_t g = modulus_;
    for (auto r : residues_) g = std::gcd(g, r);
    return g == 1;
}

std::int64_t ResidueClassSet::representability_threshold() const {
    if (!gcd_condition()) {
        throw std::domain_error("gcd(r_1..r_l, m) != 1 for " + describe() +
                                ": infinitely many n have no partition");
    }
    // Shortest prefix of A whose gcd is 1; its largest element bounds the
    // Frobenius number of A by s_max^2.
    std::int64_t g = 0;
    std::int64_t s_max = 0;
    for (std::int64_t base = 0; g != 1; base += modulus_) {
        for (auto r : residues_) {
            s_max = base + r;
            g = std::gcd(g, s_max);
            if (g == 1) break;
        }
    }
    const std::int64_t bound = s_max * s_max;
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (auto a : elements_up_to(bound)) {
        for (std::int64_t n = a; n <= bound; ++n) {
            if (reach[static_cast<std::size_t>(n - a)]) reach[static_cast<std::size_t>(n)] = 1;
        }
    }
    for (std::int64_t n = bound; n >= 0; --n) {
        if (!reach[static_cast<std::size_t>(n)]) return n + 1;
    }
    return 0;
}

nlohmann::json ResidueClassSet::to_json() const {
    return nlohmann::json{{"m", modulus_}, {"r", residues_}};
}

std::string ResidueClassSet::describe() const {
    std::string s = "(m=" + std::to_string(modulus_) + ", r={";
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(residues_[i]);
    }
    return s + "})";
}

}  // namespace rpart

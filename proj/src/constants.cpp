#include "rpart/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rpart {

double c0(std::int64_t m, std::int64_t ell) {
    if (m < 1 || ell < 1) throw std::invalid_argument("c0: m and l must be positive");
    if (ell > m) throw std::invalid_argument("c0: l cannot exceed m");
    return std::numbers::pi * std::sqrt(2.0 * static_cast<double>(ell) / (3.0 * static_cast<double>(m)));
}

double c1(std::int64_t m, std::int64_t ell, double theta) {
    if (!(theta > -1.0)) throw std::invalid_argument("c1: theta must exceed -1");
    return std::sqrt(1.0 + theta) * c0(m, ell);
}

AsymptoticConstants AsymptoticConstants::make(std::int64_t m, std::int64_t ell, double theta) {
    return AsymptoticConstants{m, ell, theta, rpart::c0(m, ell), rpart::c1(m, ell, theta)};
}

}  // namespace rpart

#pragma once

#include <cstdint>

namespace rpart {

/// c0 = pi sqrt(2l / 3m) and c1 = sqrt(1 + theta) c0 for a set with l
/// residues modulo m.
struct AsymptoticConstants {
    std::int64_t m;
    std::int64_t ell;
    double theta;
    double c0;
    double c1;

    /// Throws std::invalid_argument unless 1 <= ell <= m and theta > -1.
    static AsymptoticConstants make(std::int64_t m, std::int64_t ell, double theta = 0.0);
};

double c0(std::int64_t m, std::int64_t ell);
double c1(std::int64_t m, std::int64_t ell, double theta);

}  // namespace rpart

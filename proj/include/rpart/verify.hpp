#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rpart {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Property suite across all modules, sized by `limit` (table length for
/// the exact checks). Deterministic: fixed seeds and grids.
std::vector<CheckResult> run_property_suite(std::int64_t limit);

}  // namespace rpart

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rpart/residue_set.hpp"

namespace rpart::cli {

enum class Subcommand { compute, asymptote, lemmas, verify };
enum class Format { csv, json };
enum class Algo { euler, recursion, both };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Subcommand subcommand = Subcommand::compute;
    std::optional<ResidueClassSet> set;
    std::int64_t limit = 0;
    double eps = 0.1;
    double theta = 0.0;
    std::vector<std::int64_t> grid;
    std::int64_t grid_step = 0;  // 0: limit / 100
    Algo algo = Algo::euler;
    std::string which = "all";
    Format format = Format::csv;
    std::string out;  // empty: standard output

    nlohmann::json to_json() const;
};

/// Thrown for bad flags or values; the message names the offending flag.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses argv; throws UsageError. Returns nullopt when --help was printed.
std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out);

/// Executes a validated config. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run with output redirection; the whole CLI in one call.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rpart::cli

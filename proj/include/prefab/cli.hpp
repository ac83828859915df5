#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prefab/identities.hpp"
#include "prefab/series.hpp"
#include "prefab/stat_kind.hpp"

namespace prefab::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_cap = 3,
};

/// Everything one invocation asked for, after parsing.
struct RunConfig {
    std::string command; // count | stats | enumerate | verify
    std::optional<SpecSelector> spec;
    int max_n = 100;
    std::optional<int> n;
    std::vector<int> ks;
    std::optional<StatKind> kind;
    std::optional<TheoremId> theorem;
    bool all = false;
    std::vector<int> b_range{1, 2, 3};
    std::vector<Params> rs_range{{1, 1}, {2, 1}, {1, 2}};
    VerifyMode mode = VerifyMode::fast;
    std::string format; // json | csv | text; empty selects the command default
    std::string output;
    std::string timing;
    int oracle_cap = default_oracle_cap;
    bool force = false;
    bool count_only = false;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Parses `args` (without the program name) into a RunConfig. Throws
/// InvalidArgument on malformed input. Returns nullopt when help was printed.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed config, writing primary output to `out`.
int execute(const RunConfig& config, std::ostream& out);

/// parse_args + execute with exit-code mapping; errors go to `err` as a
/// single "error: ..." line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prefab::cli

#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prefab/common.hpp"

namespace prefab {

enum class TheoremId : std::uint8_t {
    sef_classic,            // F_k(n) = G_k(n), ordinary partitions
    sef_bcolored,           // F_k(n) = G_k(n), b colors per part
    andrews_merca_h,        // k F_k(n) = H_k(n) - H_k(n-k)
    odd_sum,                // F°_k(n) = G°_k(n) + G°_k(n-k), odd k
    distinct_diff,          // F^d_k(n) = G°_k(n) - G°_k(n-k)
    kcolors,                // F_k(n) = k (G_k(n) - G_k(n-k)), part k in k colors
    overpartition_combined, // the three equalities above for (r,s)-colored overpartitions
    overline_1_3,           // F̄_1(n) = Ḡ_1(n) - Ḡ_3(n)
    euler_odd_distinct,     // odd(b) and distinct(b) products agree
};

inline constexpr TheoremId all_theorems[] = {
    TheoremId::sef_classic,    TheoremId::sef_bcolored, TheoremId::andrews_merca_h,
    TheoremId::odd_sum,        TheoremId::distinct_diff, TheoremId::kcolors,
    TheoremId::overpartition_combined, TheoremId::overline_1_3, TheoremId::euler_odd_distinct,
};

std::string_view tag(TheoremId id);       // "SEF_BCOLORED"
std::string_view cli_name(TheoremId id);  // "sef-bcolored"
std::optional<TheoremId> parse_theorem(std::string_view text);

/// What a theorem is parameterised by: nothing, b, or (r, s).
enum class ParamShape : std::uint8_t { none, colors, color_pair };
ParamShape param_shape(TheoremId id);

enum class VerifyMode : std::uint8_t { fast, oracle, both };
std::string_view to_string(VerifyMode mode);
std::optional<VerifyMode> parse_mode(std::string_view text);

/// Deliberate errors injected into one side of a theorem to show the sweep
/// can fail.
enum class Mutation : std::uint8_t {
    none,
    sef_shift_n,             // G_k(n-1) instead of G_k(n)
    sef_drop_b,              // G without its factor b
    andrews_merca_shift_one, // H_k(n) - H_k(n-1)
    odd_drop_b,              // F° without its factor b
    distinct_sign,           // G°(n) + G°(n-k)
    kcolors_drop_k,          // G_k(n) - G_k(n-k) without the factor k
    overpartition_swap_rs,   // F^d with r colors instead of s
    overline_plain_p,        // O_m(n) read from p(n-m) instead of p̄(n-m)
    euler_colors_mismatch,   // odd(b) against distinct(b+1)
};

std::string_view to_string(Mutation mutation);

/// A parameter tuple: {} for parameterless theorems, {b} or {r, s}.
using Params = std::vector<int>;

struct Failure {
    Params params;
    int k = 0;
    int n = 0;
    std::string check; // which equality or cross-check failed
    BigInt lhs;
    BigInt rhs;
};

struct IdentityReport {
    TheoremId theorem = TheoremId::sef_classic;
    VerifyMode mode = VerifyMode::fast;
    Mutation mutation = Mutation::none;
    std::vector<Params> params;
    int min_n = 1;
    int max_n = 0;
    int min_k = 1;
    int max_k = 0;
    std::uint64_t checked = 0;       // (k, n) equalities evaluated
    std::uint64_t oracle_checked = 0; // fast-vs-oracle comparisons
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures;   // first max_reported_failures, sorted
    std::vector<std::string> series_used;
    std::optional<std::string> error;
    std::chrono::duration<double> elapsed{};

    bool pass() const { return !error && failure_count == 0 && checked > 0; }
};

inline constexpr std::size_t max_reported_failures = 32;

struct VerifyOptions {
    VerifyMode mode = VerifyMode::fast;
    int oracle_cap = default_oracle_cap;
    ExecPolicy policy = ExecPolicy::parallel;
    Mutation mutation = Mutation::none;
};

/// Sweeps one theorem over every admissible (k, n) with 1 <= n <= max_n for
/// each parameter tuple. Throws InvalidArgument for an empty range or
/// malformed parameters, CapExceeded when ORACLE mode would enumerate beyond
/// the cap. In BOTH mode the oracle cross-check covers n <= min(max_n, cap).
IdentityReport verify(TheoremId theorem, std::span<const Params> params, int max_n, const VerifyOptions& options = {});

/// Default parameter grid for a theorem: {1} for sef_classic, b-grid for the
/// b-colored theorems, (r,s)-grid for overpartition_combined, {} otherwise.
std::vector<Params> default_params(TheoremId theorem, std::span<const int> b_range,
                                   std::span<const Params> rs_range);

/// Runs every theorem; errors are recorded in the report instead of thrown.
std::vector<IdentityReport> verify_all(int max_n, std::span<const int> b_range, std::span<const Params> rs_range,
                                       const VerifyOptions& options = {});

struct RegisteredMutation {
    TheoremId theorem;
    Mutation mutation;
    Params params;
    std::string_view description;
};

std::span<const RegisteredMutation> registered_mutations();

/// Re-runs the theorem with its registered mutation; the returned report is
/// expected to carry counterexamples.
IdentityReport mutation_smoke(TheoremId theorem, int max_n);

/// Report as JSON. `elapsed` is only included on request so that repeated
/// runs serialize identically.
nlohmann::json to_json(const IdentityReport& report, bool include_timing = false);

/// One human-readable summary line.
std::string summary_line(const IdentityReport& report);

} // namespace prefab

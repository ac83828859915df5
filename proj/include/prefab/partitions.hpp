#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "prefab/common.hpp"
#include "prefab/series.hpp"
#include "prefab/stat_kind.hpp"

namespace prefab {

/// A part value carrying a color index (1-based) and the class of factor it
/// came from. An overlined part is a part of kind `distinct`.
struct ColoredPart {
    int value = 1;
    int color = 1;
    FactorKind kind = FactorKind::repeatable;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Canonical order: descending value, then kind (R, D, M), then ascending color.
bool canonical_less(const ColoredPart& a, const ColoredPart& b);

struct PartEntry {
    ColoredPart part;
    int frequency = 1;

    friend bool operator==(const PartEntry&, const PartEntry&) = default;
};

/// A multiset of colored parts, stored as canonical-ordered entries with
/// positive frequencies.
class ColoredPartition {
public:
    ColoredPartition() = default;

    /// Builds from arbitrary entries: sorts, merges equal parts, drops zero
    /// frequencies. Throws if a distinct part ends up with frequency > 1.
    explicit ColoredPartition(std::vector<PartEntry> entries);

    /// Convenience for ordinary partitions: {4, 3, 3, 1} -> 4+3+3+1.
    static ColoredPartition from_values(std::initializer_list<int> values);

    const std::vector<PartEntry>& entries() const { return entries_; }
    int weight() const { return weight_; }
    bool empty() const { return entries_.empty(); }

    /// Σ value·frequency, recomputed from the entries.
    int recompute_weight() const;

    /// Enumeration internals: append in canonical order / pop the last entry.
    void push(const PartEntry& entry);
    void pop();

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

private:
    std::vector<PartEntry> entries_;
    int weight_ = 0;
};

struct PartitionStats {
    std::vector<std::pair<int, int>> freq_by_value; // (value, f_value), descending value
    std::vector<PartEntry> freq_by_colored_part;
    int weight = 0;
};

PartitionStats partition_stats(const ColoredPartition& pi);

/// f_k(π): parts equal to k over all colors and kinds, or only `kind`.
int frequency(const ColoredPartition& pi, int k, std::optional<FactorKind> kind = std::nullopt);

enum class Merge : std::uint8_t { by_colored_part, by_value };

/// Number of parts repeated at least k times. `by_colored_part` counts
/// (value, color, kind) triples; `by_value` merges colors and kinds first.
/// `kind` restricts a by_colored_part count to one part class.
int parts_repeated_at_least(const ColoredPartition& pi, int k, Merge merge,
                            std::optional<FactorKind> kind = std::nullopt);

/// Sum of the values of the distinct colored parts divisible by k.
long sum_parts_divisible_by(const ColoredPartition& pi, int k);

/// "4+3+3+1", "3_1+3_2", "2~+1"; the color suffix is omitted when the part's
/// factor has a single color. The empty partition prints as "()".
std::string to_text(const ColoredPartition& pi, const FactorSpec& spec);

/// [[value, color, "R"|"D"|"M", frequency], ...]
nlohmann::json to_json(const ColoredPartition& pi);

/// Visits every colored partition of n built from `spec` exactly once, in a
/// deterministic order (largest parts first, higher frequencies first).
void for_each_partition(int n, const FactorSpec& spec, const std::function<void(const ColoredPartition&)>& visit);

/// for_each_partition with the enumeration cap enforced.
std::vector<ColoredPartition> enumerate(int n, const FactorSpec& spec, int cap = default_oracle_cap);

/// Throws CapExceeded naming the cap when n > cap.
void check_cap(int n, int cap);

/// All enumeration-based statistics of one weight n, indexed by k (or m) in
/// 1..n. Entries for k > n are zero and read as such.
struct OracleTally {
    int n = 0;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> freq_all;                                 // F, all kinds merged
    std::vector<std::uint64_t> freq[factor_kind_count];                 // F, one kind
    std::vector<std::uint64_t> repeated_colored[factor_kind_count];     // G by colored part, one kind
    std::vector<std::uint64_t> repeated_colored_all;                    // G by colored part, all kinds
    std::vector<std::uint64_t> repeated_by_value;                       // G-bar
    std::vector<std::uint64_t> divisible_sum;                           // H
    std::vector<std::uint64_t> value_present;                           // O-bar_m
    std::vector<std::uint64_t> only_overlined;                          // O_{m-bar}
    std::vector<std::uint64_t> value_thrice;                            // T-bar_m

    explicit OracleTally(int n = 0);

    /// Reads `column` at index k, zero outside 1..n.
    static std::uint64_t get(const std::vector<std::uint64_t>& column, int k);
};

OracleTally oracle_tally(int n, const FactorSpec& spec, int cap = default_oracle_cap);

/// Tallies for n = 0..max_n, each weight enumerated independently. The
/// parallel policy distributes weights over OpenMP threads.
std::vector<OracleTally> oracle_tallies(const SpecSelector& selector, int max_n, int cap = default_oracle_cap,
                                        ExecPolicy policy = ExecPolicy::parallel);

/// Reads one statistic out of a tally.
BigInt tally_stat(const OracleTally& tally, StatKind kind, SpecFamily family, int k);

/// Brute-force value of `kind` at (k, n) for the selected product.
BigInt oracle_stat(int n, const SpecSelector& selector, StatKind kind, int k, int cap = default_oracle_cap);

} // namespace prefab

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prefab/common.hpp"
#include "prefab/series.hpp"
#include "prefab/stat_kind.hpp"

namespace prefab {

// Closed forms for the frequency and repetition statistics. Every function
// reads only the coefficient series h of the governing product; h(m) = 0 for
// m < 0 and the sums stop as soon as the argument would go negative. A
// negative n yields 0. k (or m) must be >= 1, n must not exceed the
// truncation of h.

/// F_k(n) = b_k (h(n-k) + h(n-2k) + ...), any product of repeatable factors.
BigInt f_general(const CoeffSeries& h, int bk, int k, int n);

/// The same quantity through F_k(n) = F_k(n-k) + b_k h(n-k).
BigInt f_step(const CoeffSeries& h, int bk, int k, int n);

/// G_k(n) = b (h(n-k) + h(n-2k) + ...): b-colored parts repeated >= k times.
BigInt g_uniform(const CoeffSeries& h, int b, int k, int n);

/// H_k(n) = Σ_j j·b·k·h(n-jk).
BigInt h_uniform(const CoeffSeries& h, int b, int k, int n);

/// Frequency of k in odd-part partitions; zero for even k.
BigInt f_odd(const CoeffSeries& h_odd, int b, int k, int n);

/// b (h(n-k) + h(n-3k) + h(n-5k) + ...), for every k >= 1.
BigInt g_odd(const CoeffSeries& h_odd, int b, int k, int n);

/// b (h(n-k) - h(n-2k) + h(n-3k) - ...).
BigInt f_distinct(const CoeffSeries& h_distinct, int b, int k, int n);

/// Σ_j j·h(n-jk) for the k-colors-of-k product.
BigInt g_kcolors(const CoeffSeries& h_kcolors, int k, int n);

/// Overpartitions of n containing m or m-bar: 2 (p̄(n-m) - p̄(n-2m) + ...).
BigInt obar_m(const CoeffSeries& pbar, int m, int n);

/// Overpartitions of n containing m-bar but not m: p̄(n-m) - 2p̄(n-2m) + 2p̄(n-3m) - ...
BigInt o_overlined_m(const CoeffSeries& pbar, int m, int n);

/// Overpartitions of n where m (plain or overlined) occurs >= 3 times:
/// 2 (p̄(n-3m) - p̄(n-4m) + p̄(n-5m) - ...).
BigInt tbar_m(const CoeffSeries& pbar, int m, int n);

/// Total count of 1 and 1-bar: 2 (p̄(n-1) + p̄(n-3) + p̄(n-5) + ...).
BigInt fbar_1(const CoeffSeries& pbar, int n);

/// G-bar_r(n) for r in {1, 3}: Σ_m obar_m(m, n) or Σ_m tbar_m(m, n).
BigInt gbar(const CoeffSeries& pbar, int r, int n);

/// Dispatches `kind` for the selected product; `h` must be that product's series.
BigInt evaluate(StatKind kind, const SpecSelector& selector, const CoeffSeries& h, int k, int n);

struct StatTable {
    StatKind kind = StatKind::f_uniform;
    std::string spec_label;
    int max_n = 0;
    std::map<std::pair<int, int>, BigInt> values; // (k, n) -> value
};

struct TableOptions {
    /// Reuse column recurrences across n instead of evaluating every cell.
    bool memoize = true;
    ExecPolicy policy = ExecPolicy::parallel;
};

/// Builds the (k, n) grid for n = 0..max_n and the given k (or m) values.
/// Kinds with a fixed index ignore `ks` and use that index.
StatTable build_table(StatKind kind, const SpecSelector& selector, const CoeffSeries& h, const std::vector<int>& ks,
                      int max_n, TableOptions options = {});

/// "kind,spec,k,n,value" header plus one row per cell, ordered by (k, n).
std::string to_csv(const StatTable& table);

nlohmann::json to_json(const StatTable& table);

} // namespace prefab

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "prefab/series.hpp"

namespace prefab {

/// Every statistic the library can compute, both on the fast path and by
/// enumeration.
enum class StatKind : std::uint8_t {
    f_uniform,     // frequency of k, ordinary component, b colors
    g_uniform,     // colored parts repeated >= k times, ordinary component
    h_uniform,     // sum of distinct colored parts divisible by k
    f_odd,         // frequency of k among odd-class parts
    g_odd,         // odd-class colored parts repeated >= k times
    f_distinct,    // frequency of k among distinct parts
    f_kcolors,     // frequency of k, part k in k colors
    g_kcolors,     // colored parts repeated >= k times, part k in k colors
    obar_m,        // overpartitions containing m or m-bar
    o_overlined_m, // overpartitions containing m-bar but not m
    tbar_m,        // overpartitions where m (merged) occurs >= 3 times
    fbar_1,        // total frequency of 1 and 1-bar
    gbar_1,        // values occurring at least once
    gbar_3,        // values occurring at least three times
    f_general,     // frequency of k for any product of repeatable factors
};

inline constexpr StatKind all_stat_kinds[] = {
    StatKind::f_uniform, StatKind::g_uniform,  StatKind::h_uniform,     StatKind::f_odd,
    StatKind::g_odd,     StatKind::f_distinct, StatKind::f_kcolors,     StatKind::g_kcolors,
    StatKind::obar_m,    StatKind::o_overlined_m, StatKind::tbar_m,     StatKind::fbar_1,
    StatKind::gbar_1,    StatKind::gbar_3,     StatKind::f_general,
};

/// Upper-case tag used in exports ("F_UNIFORM", "OBAR_M", ...).
std::string_view tag(StatKind kind);

/// Short CLI name ("F", "Godd", "Fbar1", ...).
std::string_view short_name(StatKind kind);

/// Accepts either the tag or the short name, case-sensitive.
std::optional<StatKind> parse_stat_kind(std::string_view text);

/// The statistics with a fixed index: fbar_1 (k=1), gbar_1 (k=1), gbar_3 (k=3).
std::optional<int> fixed_index(StatKind kind);

/// Whether the fast path for `kind` applies to the selected product. The
/// overline ancillaries only apply to overpartition:1,1.
bool compatible(StatKind kind, const SpecSelector& selector);

/// Human-readable list of the spec selectors a kind pairs with.
std::string valid_pairing(StatKind kind);

/// Part class the statistic looks at for this family (ordinary, distinct or
/// odd-class parts). Empty for statistics that merge every class.
std::optional<FactorKind> component_kind(StatKind kind, SpecFamily family);

/// Color count the fast path multiplies by: b, r or s depending on the family.
/// For f_general it is the number of repeatable colors of `part`.
int component_colors(StatKind kind, const SpecSelector& selector, int part);

} // namespace prefab

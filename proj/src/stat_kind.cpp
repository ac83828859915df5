#include "prefab/stat_kind.hpp"

namespace prefab {

namespace {

struct KindNames {
    StatKind kind;
    std::string_view tag;
    std::string_view short_name;
};

constexpr KindNames names[] = {
    {StatKind::f_uniform, "F_UNIFORM", "F"},
    {StatKind::g_uniform, "G_UNIFORM", "G"},
    {StatKind::h_uniform, "H_UNIFORM", "H"},
    {StatKind::f_odd, "F_ODD", "Fodd"},
    {StatKind::g_odd, "G_ODD", "Godd"},
    {StatKind::f_distinct, "F_DISTINCT", "Fdistinct"},
    {StatKind::f_kcolors, "F_KCOLORS", "Fkcolors"},
    {StatKind::g_kcolors, "G_KCOLORS", "Gkcolors"},
    {StatKind::obar_m, "OBAR_M", "Obar"},
    {StatKind::o_overlined_m, "O_OVERLINED_M", "Ooverlined"},
    {StatKind::tbar_m, "TBAR_M", "Tbar"},
    {StatKind::fbar_1, "FBAR_1", "Fbar1"},
    {StatKind::gbar_1, "GBAR_1", "Gbar1"},
    {StatKind::gbar_3, "GBAR_3", "Gbar3"},
    {StatKind::f_general, "F_GENERAL", "Fgeneral"},
};

const KindNames& lookup(StatKind kind)
{
    for (const auto& n : names)
        if (n.kind == kind)
            return n;
    throw InvalidArgument("unknown stat kind");
}

bool is_overline_ancillary(StatKind kind)
{
    switch (kind) {
    case StatKind::obar_m:
    case StatKind::o_overlined_m:
    case StatKind::tbar_m:
    case StatKind::fbar_1:
    case StatKind::gbar_1:
    case StatKind::gbar_3: return true;
    default: return false;
    }
}

} // namespace

std::string_view tag(StatKind kind)
{
    return lookup(kind).tag;
}

std::string_view short_name(StatKind kind)
{
    return lookup(kind).short_name;
}

std::optional<StatKind> parse_stat_kind(std::string_view text)
{
    for (const auto& n : names)
        if (text == n.tag || text == n.short_name)
            return n.kind;
    return std::nullopt;
}

std::optional<int> fixed_index(StatKind kind)
{
    switch (kind) {
    case StatKind::fbar_1:
    case StatKind::gbar_1: return 1;
    case StatKind::gbar_3: return 3;
    default: return std::nullopt;
    }
}

bool compatible(StatKind kind, const SpecSelector& selector)
{
    const SpecFamily family = selector.family;
    if (is_overline_ancillary(kind))
        return family == SpecFamily::overpartition && selector.first == 1 && selector.second == 1;

    switch (kind) {
    case StatKind::f_uniform:
    case StatKind::g_uniform:
        return family == SpecFamily::uniform || family == SpecFamily::overpartition ||
               family == SpecFamily::odd_overlined;
    case StatKind::h_uniform: return family == SpecFamily::uniform;
    case StatKind::f_odd:
    case StatKind::g_odd: return family == SpecFamily::odd || family == SpecFamily::odd_overlined;
    case StatKind::f_distinct: return family == SpecFamily::distinct || family == SpecFamily::overpartition;
    case StatKind::f_kcolors:
    case StatKind::g_kcolors: return family == SpecFamily::kcolors;
    case StatKind::f_general:
        return family == SpecFamily::uniform || family == SpecFamily::kcolors || family == SpecFamily::odd ||
               family == SpecFamily::odd_overlined;
    default: return false;
    }
}

std::string valid_pairing(StatKind kind)
{
    switch (kind) {
    case StatKind::f_uniform:
    case StatKind::g_uniform: return "uniform:b, overpartition:r,s, oddoverlined:r,s";
    case StatKind::h_uniform: return "uniform:b";
    case StatKind::f_odd:
    case StatKind::g_odd: return "odd:b, oddoverlined:r,s";
    case StatKind::f_distinct: return "distinct:b, overpartition:r,s";
    case StatKind::f_kcolors:
    case StatKind::g_kcolors: return "kcolors";
    case StatKind::f_general: return "uniform:b, kcolors, odd:b, oddoverlined:r,s";
    default: return "overpartition:1,1";
    }
}

std::optional<FactorKind> component_kind(StatKind kind, SpecFamily family)
{
    switch (kind) {
    case StatKind::f_uniform:
    case StatKind::g_uniform:
    case StatKind::h_uniform:
    case StatKind::f_kcolors:
    case StatKind::g_kcolors: return FactorKind::repeatable;
    case StatKind::f_odd:
    case StatKind::g_odd: return family == SpecFamily::odd_overlined ? FactorKind::marked : FactorKind::repeatable;
    case StatKind::f_distinct: return FactorKind::distinct;
    default: return std::nullopt;
    }
}

int component_colors(StatKind kind, const SpecSelector& selector, int part)
{
    switch (kind) {
    case StatKind::f_general:
        switch (selector.family) {
        case SpecFamily::kcolors: return part;
        case SpecFamily::odd: return part % 2 == 1 ? selector.first : 0;
        case SpecFamily::odd_overlined: return selector.first + (part % 2 == 1 ? selector.second : 0);
        default: return selector.first;
        }
    case StatKind::f_kcolors:
    case StatKind::g_kcolors: return part;
    case StatKind::f_odd:
    case StatKind::g_odd: return selector.family == SpecFamily::odd_overlined ? selector.second : selector.first;
    case StatKind::f_distinct: return selector.family == SpecFamily::overpartition ? selector.second : selector.first;
    default: return selector.first;
    }
}

} // namespace prefab

#include "prefab/partitions.hpp"

#include <algorithm>
#include <limits>

namespace prefab {

namespace {

constexpr long long unbounded = std::numeric_limits<long long>::max();

char kind_marker(FactorKind kind)
{
    switch (kind) {
    case FactorKind::repeatable: return '_';
    case FactorKind::distinct: return '~';
    case FactorKind::marked: return '^';
    }
    return '?';
}

class Enumerator {
public:
    Enumerator(const FactorSpec& spec, const std::function<void(const ColoredPartition&)>& visit)
        : factors_(spec.factors())
        , visit_(visit)
        , suffix_capacity_(factors_.size() + 1, 0)
        , suffix_min_part_(factors_.size() + 1, std::numeric_limits<int>::max())
    {
        for (std::size_t i = factors_.size(); i-- > 0;) {
            const auto& f = factors_[i];
            const long long next = suffix_capacity_[i + 1];
            if (f.kind == FactorKind::distinct && next != unbounded)
                suffix_capacity_[i] = next + static_cast<long long>(f.part) * f.multiplicity;
            else
                suffix_capacity_[i] = unbounded;
            suffix_min_part_[i] = std::min(suffix_min_part_[i + 1], f.part);
        }
    }

    void run(int n) { descend(0, 1, n); }

private:
    void descend(std::size_t fi, int color, int rem)
    {
        if (rem == 0) {
            visit_(current_);
            return;
        }
        if (fi == factors_.size() || rem > suffix_capacity_[fi] || rem < suffix_min_part_[fi])
            return;
        const Factor& f = factors_[fi];
        if (color > f.multiplicity) {
            descend(fi + 1, 1, rem);
            return;
        }
        int most = rem / f.part;
        if (f.kind == FactorKind::distinct)
            most = std::min(most, 1);
        for (int q = most; q >= 1; --q) {
            current_.push({{f.part, color, f.kind}, q});
            descend(fi, color + 1, rem - q * f.part);
            current_.pop();
        }
        descend(fi, color + 1, rem);
    }

    const std::vector<Factor>& factors_;
    const std::function<void(const ColoredPartition&)>& visit_;
    std::vector<long long> suffix_capacity_;
    std::vector<int> suffix_min_part_;
    ColoredPartition current_;
};

void bump(std::vector<std::uint64_t>& column, int k, std::uint64_t by = 1)
{
    if (k >= 1 && k < static_cast<int>(column.size()))
        column[static_cast<std::size_t>(k)] += by;
}

void accumulate(OracleTally& t, const ColoredPartition& pi)
{
    ++t.count;
    const auto& entries = pi.entries();
    for (const auto& e : entries) {
        const int v = e.part.value;
        const auto kind = static_cast<std::size_t>(e.part.kind);
        bump(t.freq_all, v, static_cast<std::uint64_t>(e.frequency));
        bump(t.freq[kind], v, static_cast<std::uint64_t>(e.frequency));
        for (int k = 1; k <= e.frequency; ++k) {
            bump(t.repeated_colored[kind], k);
            bump(t.repeated_colored_all, k);
        }
        for (int d = 1; d <= v; ++d)
            if (v % d == 0)
                bump(t.divisible_sum, d, static_cast<std::uint64_t>(v));
    }
    // Entries are grouped by value in canonical order.
    for (std::size_t i = 0; i < entries.size();) {
        const int v = entries[i].part.value;
        int total = 0;
        bool ordinary = false;
        bool overlined = false;
        for (; i < entries.size() && entries[i].part.value == v; ++i) {
            total += entries[i].frequency;
            ordinary |= entries[i].part.kind == FactorKind::repeatable;
            overlined |= entries[i].part.kind == FactorKind::distinct;
        }
        for (int k = 1; k <= total; ++k)
            bump(t.repeated_by_value, k);
        bump(t.value_present, v);
        if (total >= 3)
            bump(t.value_thrice, v);
        if (overlined && !ordinary)
            bump(t.only_overlined, v);
    }
}

} // namespace

bool canonical_less(const ColoredPart& a, const ColoredPart& b)
{
    if (a.value != b.value)
        return a.value > b.value;
    if (a.kind != b.kind)
        return a.kind < b.kind;
    return a.color < b.color;
}

ColoredPartition::ColoredPartition(std::vector<PartEntry> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const PartEntry& a, const PartEntry& b) { return canonical_less(a.part, b.part); });
    for (const auto& e : entries) {
        if (e.part.value < 1 || e.part.color < 1)
            throw InvalidArgument("colored parts need value >= 1 and color >= 1");
        if (e.frequency < 0)
            throw InvalidArgument("negative frequency");
        if (e.frequency == 0)
            continue;
        if (!entries_.empty() && entries_.back().part == e.part)
            entries_.back().frequency += e.frequency;
        else
            entries_.push_back(e);
        weight_ += e.part.value * e.frequency;
    }
    for (const auto& e : entries_)
        if (e.part.kind == FactorKind::distinct && e.frequency > 1)
            throw InvalidArgument("distinct part " + std::to_string(e.part.value) + " repeated");
}

ColoredPartition ColoredPartition::from_values(std::initializer_list<int> values)
{
    std::vector<PartEntry> entries;
    for (int v : values)
        entries.push_back({{v, 1, FactorKind::repeatable}, 1});
    return ColoredPartition(std::move(entries));
}

int ColoredPartition::recompute_weight() const
{
    int w = 0;
    for (const auto& e : entries_)
        w += e.part.value * e.frequency;
    return w;
}

void ColoredPartition::push(const PartEntry& entry)
{
    entries_.push_back(entry);
    weight_ += entry.part.value * entry.frequency;
}

void ColoredPartition::pop()
{
    weight_ -= entries_.back().part.value * entries_.back().frequency;
    entries_.pop_back();
}

PartitionStats partition_stats(const ColoredPartition& pi)
{
    PartitionStats s;
    s.freq_by_colored_part = pi.entries();
    s.weight = pi.weight();
    for (const auto& e : pi.entries()) {
        if (!s.freq_by_value.empty() && s.freq_by_value.back().first == e.part.value)
            s.freq_by_value.back().second += e.frequency;
        else
            s.freq_by_value.emplace_back(e.part.value, e.frequency);
    }
    return s;
}

int frequency(const ColoredPartition& pi, int k, std::optional<FactorKind> kind)
{
    int f = 0;
    for (const auto& e : pi.entries())
        if (e.part.value == k && (!kind || e.part.kind == *kind))
            f += e.frequency;
    return f;
}

int parts_repeated_at_least(const ColoredPartition& pi, int k, Merge merge, std::optional<FactorKind> kind)
{
    if (k < 1)
        throw InvalidArgument("repetition threshold must be >= 1");
    int count = 0;
    if (merge == Merge::by_colored_part) {
        for (const auto& e : pi.entries())
            if (e.frequency >= k && (!kind || e.part.kind == *kind))
                ++count;
        return count;
    }
    for (const auto& [value, f] : partition_stats(pi).freq_by_value)
        if (f >= k)
            ++count;
    return count;
}

long sum_parts_divisible_by(const ColoredPartition& pi, int k)
{
    if (k < 1)
        throw InvalidArgument("divisor must be >= 1");
    long sum = 0;
    for (const auto& e : pi.entries())
        if (e.part.value % k == 0)
            sum += e.part.value;
    return sum;
}

std::string to_text(const ColoredPartition& pi, const FactorSpec& spec)
{
    if (pi.empty())
        return "()";
    std::string out;
    for (const auto& e : pi.entries()) {
        std::string token = std::to_string(e.part.value);
        const bool single_color = spec.colors(e.part.value, e.part.kind) <= 1;
        if (e.part.kind != FactorKind::repeatable || !single_color)
            token += kind_marker(e.part.kind);
        if (!single_color)
            token += std::to_string(e.part.color);
        for (int i = 0; i < e.frequency; ++i) {
            if (!out.empty())
                out += '+';
            out += token;
        }
    }
    return out;
}

nlohmann::json to_json(const ColoredPartition& pi)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : pi.entries())
        out.push_back({e.part.value, e.part.color, kind_code(e.part.kind), e.frequency});
    return out;
}

void for_each_partition(int n, const FactorSpec& spec, const std::function<void(const ColoredPartition&)>& visit)
{
    if (n < 0)
        throw InvalidArgument("cannot enumerate partitions of negative n = " + std::to_string(n));
    Enumerator(spec, visit).run(n);
}

void check_cap(int n, int cap)
{
    if (n > cap)
        throw CapExceeded("enumeration of n = " + std::to_string(n) + " exceeds the oracle cap n <= " +
                          std::to_string(cap) + " (raise the cap to force it)");
}

std::vector<ColoredPartition> enumerate(int n, const FactorSpec& spec, int cap)
{
    check_cap(n, cap);
    std::vector<ColoredPartition> out;
    for_each_partition(n, spec, [&out](const ColoredPartition& pi) { out.push_back(pi); });
    return out;
}

OracleTally::OracleTally(int n)
    : n(n)
{
    const auto size = static_cast<std::size_t>(std::max(n, 0)) + 1;
    for (auto* column : {&freq_all, &repeated_colored_all, &repeated_by_value, &divisible_sum, &value_present,
                         &only_overlined, &value_thrice})
        column->assign(size, 0);
    for (int kind = 0; kind < factor_kind_count; ++kind) {
        freq[kind].assign(size, 0);
        repeated_colored[kind].assign(size, 0);
    }
}

std::uint64_t OracleTally::get(const std::vector<std::uint64_t>& column, int k)
{
    if (k < 1 || k >= static_cast<int>(column.size()))
        return 0;
    return column[static_cast<std::size_t>(k)];
}

OracleTally oracle_tally(int n, const FactorSpec& spec, int cap)
{
    check_cap(n, cap);
    OracleTally tally(n);
    for_each_partition(n, spec, [&tally](const ColoredPartition& pi) { accumulate(tally, pi); });
    return tally;
}

std::vector<OracleTally> oracle_tallies(const SpecSelector& selector, int max_n, int cap, ExecPolicy policy)
{
    if (max_n < 0)
        throw InvalidArgument("max n must be >= 0");
    check_cap(max_n, cap);
    const FactorSpec spec = selector.build(max_n);
    std::vector<OracleTally> out(static_cast<std::size_t>(max_n) + 1);
    if (policy == ExecPolicy::serial) {
        for (int n = 0; n <= max_n; ++n)
            out[static_cast<std::size_t>(n)] = oracle_tally(n, spec, cap);
        return out;
    }
    // Large weights dominate; hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= max_n; ++i) {
        const int n = max_n - i;
        out[static_cast<std::size_t>(n)] = oracle_tally(n, spec, cap);
    }
    return out;
}

BigInt tally_stat(const OracleTally& t, StatKind kind, SpecFamily family, int k)
{
    const auto component = component_kind(kind, family);
    switch (kind) {
    case StatKind::f_uniform:
    case StatKind::f_odd:
    case StatKind::f_distinct:
    case StatKind::f_kcolors: return OracleTally::get(t.freq[static_cast<std::size_t>(*component)], k);
    case StatKind::g_uniform:
    case StatKind::g_odd:
    case StatKind::g_kcolors: return OracleTally::get(t.repeated_colored[static_cast<std::size_t>(*component)], k);
    case StatKind::h_uniform: return OracleTally::get(t.divisible_sum, k);
    case StatKind::f_general: return OracleTally::get(t.freq_all, k);
    case StatKind::obar_m: return OracleTally::get(t.value_present, k);
    case StatKind::o_overlined_m: return OracleTally::get(t.only_overlined, k);
    case StatKind::tbar_m: return OracleTally::get(t.value_thrice, k);
    case StatKind::fbar_1: return OracleTally::get(t.freq_all, 1);
    case StatKind::gbar_1: return OracleTally::get(t.repeated_by_value, 1);
    case StatKind::gbar_3: return OracleTally::get(t.repeated_by_value, 3);
    }
    throw InvalidArgument("unknown stat kind");
}

BigInt oracle_stat(int n, const SpecSelector& selector, StatKind kind, int k, int cap)
{
    if (k < 1)
        throw InvalidArgument("k must be >= 1");
    if (n < 0)
        return 0;
    return tally_stat(oracle_tally(n, selector.build(n), cap), kind, selector.family, k);
}

} // namespace prefab

#include "prefab/stats.hpp"

#include <sstream>

namespace prefab {

namespace {

void require(const CoeffSeries& h, int k, int n)
{
    if (k < 1)
        throw InvalidArgument("k (or m) must be >= 1, got " + std::to_string(k));
    if (n > h.truncation())
        throw TruncationError("n = " + std::to_string(n) + " beyond truncation " + std::to_string(h.truncation()) +
                              " of " + h.label());
}

// h(n-k) + h(n-2k) + ...
BigInt tail_sum(const CoeffSeries& h, int k, int n)
{
    BigInt s = 0;
    for (int m = n - k; m >= 0; m -= k)
        s += h[m];
    return s;
}

// h(n-k) - h(n-2k) + h(n-3k) - ...
BigInt alternating_tail(const CoeffSeries& h, int k, int n, int first_multiple = 1)
{
    BigInt s = 0;
    bool plus = true;
    for (int m = n - first_multiple * k; m >= 0; m -= k, plus = !plus) {
        if (plus)
            s += h[m];
        else
            s -= h[m];
    }
    return s;
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

using Column = std::vector<BigInt>;

// Column of `kind` at fixed k over n = 0..max_n, each entry from earlier ones.
Column memo_column(StatKind kind, const SpecSelector& selector, const CoeffSeries& h, int k, int max_n)
{
    const auto at = [&h](int m) -> const BigInt& { return h[m]; };
    Column col(static_cast<std::size_t>(max_n) + 1);
    const auto prev = [&col](int m) -> BigInt { return m >= 0 ? col[static_cast<std::size_t>(m)] : BigInt{0}; };

    // S(n) = h(n-k) + h(n-2k) + ...
    Column tail(col.size());
    for (int n = 0; n <= max_n; ++n)
        tail[n] = n >= k ? tail[n - k] + at(n - k) : BigInt{0};

    const int c = component_colors(kind, selector, k);
    for (int n = 0; n <= max_n; ++n) {
        auto& v = col[static_cast<std::size_t>(n)];
        switch (kind) {
        case StatKind::f_uniform:
        case StatKind::g_uniform:
        case StatKind::f_general:
        case StatKind::f_kcolors: v = c * tail[n]; break;
        case StatKind::f_odd: v = k % 2 == 1 ? BigInt(c * tail[n]) : BigInt{0}; break;
        case StatKind::h_uniform: v = prev(n - k) + BigInt(c) * k * tail[n]; break;
        case StatKind::g_kcolors: v = prev(n - k) + tail[n]; break;
        case StatKind::g_odd: v = n >= k ? BigInt(prev(n - 2 * k) + c * at(n - k)) : BigInt{0}; break;
        case StatKind::f_distinct: v = n >= k ? BigInt(c * at(n - k) - prev(n - k)) : BigInt{0}; break;
        case StatKind::obar_m: v = n >= k ? BigInt(2 * at(n - k) - prev(n - k)) : BigInt{0}; break;
        case StatKind::tbar_m: v = n >= 3 * k ? BigInt(2 * at(n - 3 * k) - prev(n - k)) : BigInt{0}; break;
        case StatKind::fbar_1: v = n >= 1 ? BigInt(prev(n - 2) + 2 * at(n - 1)) : BigInt{0}; break;
        default: throw InvalidArgument("no column recurrence for " + std::string(tag(kind)));
        }
    }
    return col;
}

} // namespace

BigInt f_general(const CoeffSeries& h, int bk, int k, int n)
{
    require(h, k, n);
    return bk * tail_sum(h, k, n);
}

BigInt f_step(const CoeffSeries& h, int bk, int k, int n)
{
    require(h, k, n);
    if (n < k)
        return 0;
    // Walk up from the residue r = n mod k, where F_k(r) = 0.
    BigInt f = 0;
    for (int m = n % k + k; m <= n; m += k)
        f += bk * h[m - k];
    return f;
}

BigInt g_uniform(const CoeffSeries& h, int b, int k, int n)
{
    require(h, k, n);
    return b * tail_sum(h, k, n);
}

BigInt h_uniform(const CoeffSeries& h, int b, int k, int n)
{
    require(h, k, n);
    BigInt s = 0;
    for (int j = 1; n - j * k >= 0; ++j)
        s += BigInt(j) * h[n - j * k];
    return s * b * k;
}

BigInt f_odd(const CoeffSeries& h_odd, int b, int k, int n)
{
    require(h_odd, k, n);
    if (k % 2 == 0)
        return 0;
    return b * tail_sum(h_odd, k, n);
}

BigInt g_odd(const CoeffSeries& h_odd, int b, int k, int n)
{
    require(h_odd, k, n);
    BigInt s = 0;
    for (int m = n - k; m >= 0; m -= 2 * k)
        s += h_odd[m];
    return b * s;
}

BigInt f_distinct(const CoeffSeries& h_distinct, int b, int k, int n)
{
    require(h_distinct, k, n);
    return b * alternating_tail(h_distinct, k, n);
}

BigInt g_kcolors(const CoeffSeries& h_kcolors, int k, int n)
{
    require(h_kcolors, k, n);
    BigInt s = 0;
    for (int j = 1; n - j * k >= 0; ++j)
        s += BigInt(j) * h_kcolors[n - j * k];
    return s;
}

BigInt obar_m(const CoeffSeries& pbar, int m, int n)
{
    require(pbar, m, n);
    return 2 * alternating_tail(pbar, m, n);
}

BigInt o_overlined_m(const CoeffSeries& pbar, int m, int n)
{
    require(pbar, m, n);
    if (n < m)
        return 0;
    return pbar[n - m] - 2 * alternating_tail(pbar, m, n, 2);
}

BigInt tbar_m(const CoeffSeries& pbar, int m, int n)
{
    require(pbar, m, n);
    return 2 * alternating_tail(pbar, m, n, 3);
}

BigInt fbar_1(const CoeffSeries& pbar, int n)
{
    require(pbar, 1, n);
    BigInt s = 0;
    for (int m = n - 1; m >= 0; m -= 2)
        s += pbar[m];
    return 2 * s;
}

BigInt gbar(const CoeffSeries& pbar, int r, int n)
{
    if (r != 1 && r != 3)
        throw InvalidArgument("gbar has closed forms only for r = 1 and r = 3, got " + std::to_string(r));
    require(pbar, 1, n);
    BigInt s = 0;
    for (int m = 1; m <= n; ++m)
        s += r == 1 ? obar_m(pbar, m, n) : tbar_m(pbar, m, n);
    return s;
}

BigInt evaluate(StatKind kind, const SpecSelector& selector, const CoeffSeries& h, int k, int n)
{
    if (!compatible(kind, selector))
        throw InvalidArgument(std::string(tag(kind)) + " does not apply to " + selector.to_string() +
                              "; valid pairing: " + valid_pairing(kind));
    if (const auto fixed = fixed_index(kind))
        k = *fixed;
    const int c = component_colors(kind, selector, k);
    switch (kind) {
    case StatKind::f_uniform:
    case StatKind::f_general:
    case StatKind::f_kcolors: return f_general(h, c, k, n);
    case StatKind::g_uniform: return g_uniform(h, c, k, n);
    case StatKind::h_uniform: return h_uniform(h, c, k, n);
    case StatKind::f_odd: return f_odd(h, c, k, n);
    case StatKind::g_odd: return g_odd(h, c, k, n);
    case StatKind::f_distinct: return f_distinct(h, c, k, n);
    case StatKind::g_kcolors: return g_kcolors(h, k, n);
    case StatKind::obar_m: return obar_m(h, k, n);
    case StatKind::o_overlined_m: return o_overlined_m(h, k, n);
    case StatKind::tbar_m: return tbar_m(h, k, n);
    case StatKind::fbar_1: return fbar_1(h, n);
    case StatKind::gbar_1: return gbar(h, 1, n);
    case StatKind::gbar_3: return gbar(h, 3, n);
    }
    throw InvalidArgument("unknown stat kind");
}

StatTable build_table(StatKind kind, const SpecSelector& selector, const CoeffSeries& h, const std::vector<int>& ks,
                      int max_n, TableOptions options)
{
    if (!compatible(kind, selector))
        throw InvalidArgument(std::string(tag(kind)) + " does not apply to " + selector.to_string() +
                              "; valid pairing: " + valid_pairing(kind));
    if (max_n < 0)
        throw InvalidArgument("max n must be >= 0, got " + std::to_string(max_n));
    if (max_n > h.truncation())
        throw TruncationError("table up to n = " + std::to_string(max_n) + " needs a longer series than " +
                              std::to_string(h.truncation()));

    std::vector<int> columns = ks;
    if (const auto fixed = fixed_index(kind))
        columns = {*fixed};
    for (int k : columns)
        if (k < 1)
            throw InvalidArgument("k (or m) must be >= 1, got " + std::to_string(k));

    const int width = static_cast<int>(columns.size());
    std::vector<Column> grid(columns.size(), Column(static_cast<std::size_t>(max_n) + 1));
    const bool parallel = options.policy == ExecPolicy::parallel;

    if (!options.memoize) {
        const int cells = width * (max_n + 1);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
        for (int cell = 0; cell < cells; ++cell) {
            const int col = cell / (max_n + 1);
            const int n = cell % (max_n + 1);
            grid[col][n] = evaluate(kind, selector, h, columns[col], n);
        }
    } else if (kind == StatKind::gbar_1 || kind == StatKind::gbar_3) {
        const StatKind ancillary = kind == StatKind::gbar_1 ? StatKind::obar_m : StatKind::tbar_m;
        std::vector<Column> per_m(static_cast<std::size_t>(max_n) + 1);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int m = 1; m <= max_n; ++m)
            per_m[m] = memo_column(ancillary, selector, h, m, max_n);
        for (int n = 0; n <= max_n; ++n)
            for (int m = 1; m <= n; ++m)
                grid[0][n] += per_m[m][n];
    } else {
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int col = 0; col < width; ++col) {
            const int k = columns[col];
            if (kind == StatKind::o_overlined_m) {
                grid[col] = memo_column(StatKind::obar_m, selector, h, k, max_n);
                for (int n = k; n <= max_n; ++n)
                    grid[col][n] -= h[n - k];
            } else {
                grid[col] = memo_column(kind, selector, h, k, max_n);
            }
        }
    }

    StatTable table{kind, selector.label(), max_n, {}};
    for (int col = 0; col < width; ++col)
        for (int n = 0; n <= max_n; ++n)
            table.values.emplace(std::pair{columns[col], n}, std::move(grid[col][n]));
    return table;
}

std::string to_csv(const StatTable& table)
{
    std::ostringstream out;
    out << "kind,spec,k,n,value\n";
    const std::string spec = csv_field(table.spec_label);
    for (const auto& [key, value] : table.values)
        out << tag(table.kind) << ',' << spec << ',' << key.first << ',' << key.second << ',' << value.str() << '\n';
    return out.str();
}

nlohmann::json to_json(const StatTable& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, value] : table.values)
        rows.push_back({{"kind", tag(table.kind)},
                        {"spec", table.spec_label},
                        {"k", key.first},
                        {"n", key.second},
                        {"value", value.str()}});
    return {{"kind", tag(table.kind)}, {"spec", table.spec_label}, {"max_n", table.max_n}, {"rows", std::move(rows)}};
}

} // namespace prefab

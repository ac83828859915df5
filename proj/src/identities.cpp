#include "prefab/identities.hpp"

#include <algorithm>
#include <sstream>

#include "prefab/partitions.hpp"
#include "prefab/series.hpp"
#include "prefab/stats.hpp"

namespace prefab {

namespace {

struct TheoremNames {
    TheoremId id;
    std::string_view tag;
    std::string_view cli;
};

constexpr TheoremNames theorem_names[] = {
    {TheoremId::sef_classic, "SEF_CLASSIC", "sef-classic"},
    {TheoremId::sef_bcolored, "SEF_BCOLORED", "sef-bcolored"},
    {TheoremId::andrews_merca_h, "ANDREWS_MERCA_H", "andrews-merca"},
    {TheoremId::odd_sum, "ODD_SUM", "odd-sum"},
    {TheoremId::distinct_diff, "DISTINCT_DIFF", "distinct-diff"},
    {TheoremId::kcolors, "KCOLORS", "kcolors"},
    {TheoremId::overpartition_combined, "OVERPARTITION_COMBINED", "overpartition"},
    {TheoremId::overline_1_3, "OVERLINE_1_3", "overline13"},
    {TheoremId::euler_odd_distinct, "EULER_ODD_DISTINCT", "euler"},
};

const std::vector<RegisteredMutation>& mutation_table()
{
    static const std::vector<RegisteredMutation> table{
        {TheoremId::sef_classic, Mutation::sef_shift_n, {1}, "G_k read at n-1"},
        {TheoremId::sef_bcolored, Mutation::sef_drop_b, {2}, "G_k without the color factor b"},
        {TheoremId::andrews_merca_h, Mutation::andrews_merca_shift_one, {1}, "H_k(n) - H_k(n-1)"},
        {TheoremId::odd_sum, Mutation::odd_drop_b, {2}, "odd-part frequency without the factor b"},
        {TheoremId::distinct_diff, Mutation::distinct_sign, {1}, "G°(n) + G°(n-k)"},
        {TheoremId::kcolors, Mutation::kcolors_drop_k, {}, "G_k(n) - G_k(n-k) without the factor k"},
        {TheoremId::overpartition_combined, Mutation::overpartition_swap_rs, {2, 1}, "F^d with r colors"},
        {TheoremId::overline_1_3, Mutation::overline_plain_p, {}, "O_m(n) = p(n-m)"},
        {TheoremId::euler_odd_distinct, Mutation::euler_colors_mismatch, {1}, "odd(1) against distinct(2)"},
    };
    return table;
}

struct Equality {
    std::string_view check;
    BigInt lhs;
    BigInt rhs;
};

constexpr std::string_view check_f_g = "F=G";
constexpr std::string_view check_am = "kF=H(n)-H(n-k)";
constexpr std::string_view check_odd = "Fo=Go(n)+Go(n-k)";
constexpr std::string_view check_dist = "Fd=Go(n)-Go(n-k)";
constexpr std::string_view check_kc = "F=k(G(n)-G(n-k))";
constexpr std::string_view check_overline = "Fbar1=Gbar1-Gbar3";
constexpr std::string_view check_euler = "h_odd=h_distinct";

// Everything one parameter tuple of one theorem needs.
struct Sweep {
    TheoremId theorem;
    Params params;
    Mutation mutation;
    std::vector<SpecSelector> selectors;
    std::vector<CoeffSeries> series;
    std::vector<std::vector<OracleTally>> tallies;
};

int param(const Params& p, std::size_t i)
{
    return i < p.size() ? p[i] : 1;
}

std::vector<SpecSelector> selectors_for(TheoremId theorem, const Params& p, Mutation mutation)
{
    const int b = param(p, 0);
    switch (theorem) {
    case TheoremId::sef_classic:
    case TheoremId::sef_bcolored:
    case TheoremId::andrews_merca_h: return {{SpecFamily::uniform, b, 0}};
    case TheoremId::odd_sum: return {{SpecFamily::odd, b, 0}};
    case TheoremId::distinct_diff: return {{SpecFamily::distinct, b, 0}, {SpecFamily::odd, b, 0}};
    case TheoremId::kcolors: return {{SpecFamily::kcolors, 0, 0}};
    case TheoremId::overpartition_combined:
        return {{SpecFamily::overpartition, p[0], p[1]}, {SpecFamily::odd_overlined, p[0], p[1]}};
    case TheoremId::overline_1_3:
        if (mutation == Mutation::overline_plain_p)
            return {{SpecFamily::overpartition, 1, 1}, {SpecFamily::uniform, 1, 0}};
        return {{SpecFamily::overpartition, 1, 1}};
    case TheoremId::euler_odd_distinct:
        return {{SpecFamily::odd, b, 0},
                {SpecFamily::distinct, mutation == Mutation::euler_colors_mismatch ? b + 1 : b, 0}};
    }
    return {};
}

// Which series each side of each equality reads, for the report.
std::vector<std::string> describe_series(TheoremId theorem, const std::vector<SpecSelector>& sel)
{
    const auto one = [](std::string_view check, const SpecSelector& l, const SpecSelector& r) {
        return std::string(check) + ": lhs " + l.label() + ", rhs " + r.label();
    };
    switch (theorem) {
    case TheoremId::sef_classic:
    case TheoremId::sef_bcolored: return {one(check_f_g, sel[0], sel[0])};
    case TheoremId::andrews_merca_h: return {one(check_am, sel[0], sel[0])};
    case TheoremId::odd_sum: return {one(check_odd, sel[0], sel[0])};
    case TheoremId::distinct_diff: return {one(check_dist, sel[0], sel[1])};
    case TheoremId::kcolors: return {one(check_kc, sel[0], sel[0])};
    case TheoremId::overpartition_combined:
        return {one(check_f_g, sel[0], sel[0]), one(check_dist, sel[0], sel[1]), one(check_odd, sel[1], sel[1])};
    case TheoremId::overline_1_3: return {one(check_overline, sel[0], sel[0])};
    case TheoremId::euler_odd_distinct: return {one(check_euler, sel[0], sel[1])};
    }
    return {};
}

std::vector<int> k_values(TheoremId theorem, int n)
{
    std::vector<int> ks;
    switch (theorem) {
    case TheoremId::overline_1_3: return {1};
    case TheoremId::euler_odd_distinct: return {0};
    case TheoremId::odd_sum:
        for (int k = 1; k <= n; k += 2)
            ks.push_back(k);
        return ks;
    default:
        for (int k = 1; k <= n; ++k)
            ks.push_back(k);
        return ks;
    }
}

void fast_equalities(const Sweep& s, int k, int n, std::vector<Equality>& out)
{
    const Params& p = s.params;
    const Mutation mut = s.mutation;
    const CoeffSeries& h = s.series[0];
    switch (s.theorem) {
    case TheoremId::sef_classic:
    case TheoremId::sef_bcolored: {
        const int b = param(p, 0);
        const int g_colors = mut == Mutation::sef_drop_b ? 1 : b;
        const int g_n = mut == Mutation::sef_shift_n ? n - 1 : n;
        out.push_back({check_f_g, f_step(h, b, k, n), g_uniform(h, g_colors, k, g_n)});
        return;
    }
    case TheoremId::andrews_merca_h: {
        const int b = param(p, 0);
        const int shift = mut == Mutation::andrews_merca_shift_one ? 1 : k;
        out.push_back({check_am, k * f_general(h, b, k, n), h_uniform(h, b, k, n) - h_uniform(h, b, k, n - shift)});
        return;
    }
    case TheoremId::odd_sum: {
        const int b = param(p, 0);
        const int f_colors = mut == Mutation::odd_drop_b ? 1 : b;
        out.push_back({check_odd, f_odd(h, f_colors, k, n), g_odd(h, b, k, n) + g_odd(h, b, k, n - k)});
        return;
    }
    case TheoremId::distinct_diff: {
        const int b = param(p, 0);
        const CoeffSeries& h_odd = s.series[1];
        BigInt rhs = mut == Mutation::distinct_sign ? BigInt(g_odd(h_odd, b, k, n) + g_odd(h_odd, b, k, n - k))
                                                    : BigInt(g_odd(h_odd, b, k, n) - g_odd(h_odd, b, k, n - k));
        out.push_back({check_dist, f_distinct(h, b, k, n), std::move(rhs)});
        return;
    }
    case TheoremId::kcolors: {
        const BigInt diff = g_kcolors(h, k, n) - g_kcolors(h, k, n - k);
        out.push_back({check_kc, f_general(h, k, k, n), mut == Mutation::kcolors_drop_k ? diff : BigInt(k * diff)});
        return;
    }
    case TheoremId::overpartition_combined: {
        const int r = p[0];
        const int sc = p[1];
        const CoeffSeries& h_odd = s.series[1];
        const int d_colors = mut == Mutation::overpartition_swap_rs ? r : sc;
        out.push_back({check_f_g, f_step(h, r, k, n), g_uniform(h, r, k, n)});
        out.push_back({check_dist, f_distinct(h, d_colors, k, n),
                       g_odd(h_odd, sc, k, n) - g_odd(h_odd, sc, k, n - k)});
        if (k % 2 == 1)
            out.push_back({check_odd, f_odd(h_odd, sc, k, n), g_odd(h_odd, sc, k, n) + g_odd(h_odd, sc, k, n - k)});
        return;
    }
    case TheoremId::overline_1_3: {
        BigInt g1;
        if (mut == Mutation::overline_plain_p) {
            const CoeffSeries& p_plain = s.series[1];
            for (int m = 1; m <= n; ++m)
                g1 += p_plain[n - m] + o_overlined_m(h, m, n);
        } else {
            g1 = gbar(h, 1, n);
        }
        out.push_back({check_overline, fbar_1(h, n), g1 - gbar(h, 3, n)});
        return;
    }
    case TheoremId::euler_odd_distinct: out.push_back({check_euler, h[n], s.series[1][n]}); return;
    }
}

void oracle_equalities(const Sweep& s, int k, int n, std::vector<Equality>& out)
{
    const auto col = [&s](std::size_t which, int at) -> const OracleTally& {
        return s.tallies[which][static_cast<std::size_t>(at)];
    };
    const auto big = [](std::uint64_t v) { return BigInt(v); };
    const auto R = static_cast<std::size_t>(FactorKind::repeatable);
    const auto D = static_cast<std::size_t>(FactorKind::distinct);
    const auto M = static_cast<std::size_t>(FactorKind::marked);
    const auto& t = col(0, n);
    switch (s.theorem) {
    case TheoremId::sef_classic:
    case TheoremId::sef_bcolored:
        out.push_back({check_f_g, big(OracleTally::get(t.freq[R], k)), big(OracleTally::get(t.repeated_colored[R], k))});
        return;
    case TheoremId::andrews_merca_h:
        out.push_back({check_am, k * big(OracleTally::get(t.freq[R], k)),
                       big(OracleTally::get(t.divisible_sum, k)) -
                           big(OracleTally::get(col(0, n - k).divisible_sum, k))});
        return;
    case TheoremId::odd_sum:
        out.push_back({check_odd, big(OracleTally::get(t.freq[R], k)),
                       big(OracleTally::get(t.repeated_colored[R], k)) +
                           big(OracleTally::get(col(0, n - k).repeated_colored[R], k))});
        return;
    case TheoremId::distinct_diff:
        out.push_back({check_dist, big(OracleTally::get(t.freq[D], k)),
                       big(OracleTally::get(col(1, n).repeated_colored[R], k)) -
                           big(OracleTally::get(col(1, n - k).repeated_colored[R], k))});
        return;
    case TheoremId::kcolors:
        out.push_back({check_kc, big(OracleTally::get(t.freq[R], k)),
                       k * (big(OracleTally::get(t.repeated_colored[R], k)) -
                            big(OracleTally::get(col(0, n - k).repeated_colored[R], k)))});
        return;
    case TheoremId::overpartition_combined: {
        const auto& odd_n = col(1, n);
        const auto& odd_shift = col(1, n - k);
        const BigInt go = big(OracleTally::get(odd_n.repeated_colored[M], k));
        const BigInt go_shift = big(OracleTally::get(odd_shift.repeated_colored[M], k));
        out.push_back({check_f_g, big(OracleTally::get(t.freq[R], k)), big(OracleTally::get(t.repeated_colored[R], k))});
        out.push_back({check_dist, big(OracleTally::get(t.freq[D], k)), go - go_shift});
        if (k % 2 == 1)
            out.push_back({check_odd, big(OracleTally::get(odd_n.freq[M], k)), go + go_shift});
        return;
    }
    case TheoremId::overline_1_3:
        out.push_back({check_overline, big(OracleTally::get(t.freq_all, 1)),
                       big(OracleTally::get(t.repeated_by_value, 1)) - big(OracleTally::get(t.repeated_by_value, 3))});
        return;
    case TheoremId::euler_odd_distinct: out.push_back({check_euler, big(t.count), big(col(1, n).count)}); return;
    }
}

// Results of one n, written by exactly one thread.
struct PointResult {
    std::uint64_t checked = 0;
    std::uint64_t oracle_checked = 0;
    std::vector<Failure> failures;
};

PointResult sweep_point(const Sweep& s, int n, VerifyMode mode, int oracle_limit)
{
    PointResult r;
    std::vector<Equality> fast;
    std::vector<Equality> oracle;
    const bool use_fast = mode != VerifyMode::oracle;
    const bool use_oracle = mode == VerifyMode::oracle || (mode == VerifyMode::both && n <= oracle_limit);
    const auto fail = [&](int k, std::string check, const BigInt& lhs, const BigInt& rhs) {
        r.failures.push_back({s.params, k, n, std::move(check), lhs, rhs});
    };

    for (int k : k_values(s.theorem, n)) {
        fast.clear();
        oracle.clear();
        if (use_fast)
            fast_equalities(s, k, n, fast);
        if (use_oracle)
            oracle_equalities(s, k, n, oracle);

        const auto& primary = use_fast ? fast : oracle;
        for (const auto& e : primary) {
            ++r.checked;
            if (e.lhs != e.rhs)
                fail(k, std::string(e.check), e.lhs, e.rhs);
        }
        if (use_fast && use_oracle) {
            for (std::size_t i = 0; i < fast.size(); ++i) {
                r.oracle_checked += 2;
                if (fast[i].lhs != oracle[i].lhs)
                    fail(k, std::string(fast[i].check) + " lhs fast~oracle", fast[i].lhs, oracle[i].lhs);
                if (fast[i].rhs != oracle[i].rhs)
                    fail(k, std::string(fast[i].check) + " rhs fast~oracle", fast[i].rhs, oracle[i].rhs);
            }
        }
    }
    return r;
}

void validate_params(TheoremId theorem, const Params& p)
{
    const ParamShape shape = param_shape(theorem);
    const std::size_t wanted = shape == ParamShape::none ? 0 : shape == ParamShape::colors ? 1 : 2;
    if (p.size() != wanted)
        throw InvalidArgument(std::string(tag(theorem)) + " takes " + std::to_string(wanted) + " parameter(s), got " +
                              std::to_string(p.size()));
    for (int v : p)
        if (v < 1)
            throw InvalidArgument(std::string(tag(theorem)) + " parameters must be >= 1");
    if (theorem == TheoremId::sef_classic && p[0] != 1)
        throw InvalidArgument("SEF_CLASSIC is the b = 1 case");
}

std::string params_text(const Params& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + std::to_string(p[i]);
    return out + "]";
}

} // namespace

std::string_view tag(TheoremId id)
{
    for (const auto& t : theorem_names)
        if (t.id == id)
            return t.tag;
    return "UNKNOWN";
}

std::string_view cli_name(TheoremId id)
{
    for (const auto& t : theorem_names)
        if (t.id == id)
            return t.cli;
    return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view text)
{
    for (const auto& t : theorem_names)
        if (text == t.tag || text == t.cli)
            return t.id;
    return std::nullopt;
}

ParamShape param_shape(TheoremId id)
{
    switch (id) {
    case TheoremId::kcolors:
    case TheoremId::overline_1_3: return ParamShape::none;
    case TheoremId::overpartition_combined: return ParamShape::color_pair;
    default: return ParamShape::colors;
    }
}

std::string_view to_string(VerifyMode mode)
{
    switch (mode) {
    case VerifyMode::fast: return "fast";
    case VerifyMode::oracle: return "oracle";
    case VerifyMode::both: return "both";
    }
    return "fast";
}

std::optional<VerifyMode> parse_mode(std::string_view text)
{
    if (text == "fast" || text == "FAST")
        return VerifyMode::fast;
    if (text == "oracle" || text == "ORACLE")
        return VerifyMode::oracle;
    if (text == "both" || text == "BOTH")
        return VerifyMode::both;
    return std::nullopt;
}

std::string_view to_string(Mutation mutation)
{
    switch (mutation) {
    case Mutation::none: return "none";
    case Mutation::sef_shift_n: return "sef-shift-n";
    case Mutation::sef_drop_b: return "sef-drop-b";
    case Mutation::andrews_merca_shift_one: return "andrews-merca-shift-one";
    case Mutation::odd_drop_b: return "odd-drop-b";
    case Mutation::distinct_sign: return "distinct-sign";
    case Mutation::kcolors_drop_k: return "kcolors-drop-k";
    case Mutation::overpartition_swap_rs: return "overpartition-swap-rs";
    case Mutation::overline_plain_p: return "overline-plain-p";
    case Mutation::euler_colors_mismatch: return "euler-colors-mismatch";
    }
    return "none";
}

IdentityReport verify(TheoremId theorem, std::span<const Params> params, int max_n, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    if (max_n < 1)
        throw InvalidArgument("empty range: max n must be >= 1, got " + std::to_string(max_n));
    if (params.empty())
        throw InvalidArgument("no parameter tuples given for " + std::string(tag(theorem)));
    for (const auto& p : params)
        validate_params(theorem, p);
    if (options.mode == VerifyMode::oracle)
        check_cap(max_n, options.oracle_cap);

    IdentityReport report;
    report.theorem = theorem;
    report.mode = options.mode;
    report.mutation = options.mutation;
    report.params.assign(params.begin(), params.end());
    report.max_n = max_n;
    const bool single_k = theorem == TheoremId::overline_1_3 || theorem == TheoremId::euler_odd_distinct;
    report.min_k = theorem == TheoremId::euler_odd_distinct ? 0 : 1;
    report.max_k = single_k ? report.min_k : max_n;

    const int oracle_limit = options.mode == VerifyMode::fast ? -1 : std::min(max_n, options.oracle_cap);
    const bool parallel = options.policy == ExecPolicy::parallel;

    for (const auto& p : params) {
        Sweep s{theorem, p, options.mutation, selectors_for(theorem, p, options.mutation), {}, {}};
        for (const auto& sel : s.selectors) {
            s.series.push_back(expand(sel.build(max_n), max_n));
            if (oracle_limit >= 0)
                s.tallies.push_back(oracle_tallies(sel, oracle_limit, options.oracle_cap, options.policy));
        }
        for (auto& line : describe_series(theorem, s.selectors))
            if (std::find(report.series_used.begin(), report.series_used.end(), line) == report.series_used.end())
                report.series_used.push_back(std::move(line));

        std::vector<PointResult> per_n(static_cast<std::size_t>(max_n) + 1);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (int i = 0; i < max_n; ++i) {
            const int n = max_n - i; // larger n carry more k values
            per_n[static_cast<std::size_t>(n)] = sweep_point(s, n, options.mode, oracle_limit);
        }
        for (int n = 1; n <= max_n; ++n) {
            auto& r = per_n[static_cast<std::size_t>(n)];
            report.checked += r.checked;
            report.oracle_checked += r.oracle_checked;
            report.failure_count += r.failures.size();
            for (auto& f : r.failures)
                if (report.failures.size() < max_reported_failures)
                    report.failures.push_back(std::move(f));
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<Params> default_params(TheoremId theorem, std::span<const int> b_range, std::span<const Params> rs_range)
{
    switch (param_shape(theorem)) {
    case ParamShape::none: return {Params{}};
    case ParamShape::color_pair: return {rs_range.begin(), rs_range.end()};
    case ParamShape::colors: break;
    }
    if (theorem == TheoremId::sef_classic)
        return {Params{1}};
    std::vector<Params> out;
    for (int b : b_range)
        out.push_back({b});
    return out;
}

std::vector<IdentityReport> verify_all(int max_n, std::span<const int> b_range, std::span<const Params> rs_range,
                                       const VerifyOptions& options)
{
    std::vector<IdentityReport> reports;
    for (TheoremId theorem : all_theorems) {
        const auto params = default_params(theorem, b_range, rs_range);
        try {
            reports.push_back(verify(theorem, params, max_n, options));
        } catch (const Error& e) {
            IdentityReport failed;
            failed.theorem = theorem;
            failed.mode = options.mode;
            failed.params = params;
            failed.max_n = max_n;
            failed.error = e.what();
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

std::span<const RegisteredMutation> registered_mutations()
{
    return mutation_table();
}

IdentityReport mutation_smoke(TheoremId theorem, int max_n)
{
    for (const auto& m : registered_mutations()) {
        if (m.theorem != theorem)
            continue;
        VerifyOptions options;
        options.mutation = m.mutation;
        const std::vector<Params> params{m.params};
        return verify(theorem, params, max_n, options);
    }
    throw InvalidArgument("no mutation registered for " + std::string(tag(theorem)));
}

nlohmann::json to_json(const IdentityReport& report, bool include_timing)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"params", f.params},
                            {"k", f.k},
                            {"n", f.n},
                            {"check", f.check},
                            {"lhs", f.lhs.str()},
                            {"rhs", f.rhs.str()}});
    nlohmann::json out = {
        {"theorem", tag(report.theorem)},
        {"mode", to_string(report.mode)},
        {"mutation", to_string(report.mutation)},
        {"params", report.params},
        {"range_n", {report.min_n, report.max_n}},
        {"range_k", {report.min_k, report.max_k}},
        {"checked", report.checked},
        {"oracle_checked", report.oracle_checked},
        {"failure_count", report.failure_count},
        {"failures", std::move(failures)},
        {"series", report.series_used},
        {"pass", report.pass()},
    };
    if (report.error)
        out["error"] = *report.error;
    if (include_timing)
        out["elapsed_seconds"] = report.elapsed.count();
    return out;
}

std::string summary_line(const IdentityReport& report)
{
    std::ostringstream out;
    if (report.error) {
        out << "ERROR " << tag(report.theorem) << ": " << *report.error;
        return out.str();
    }
    out << (report.pass() ? "PASS " : "FAIL ") << tag(report.theorem) << " mode=" << to_string(report.mode);
    if (report.mutation != Mutation::none)
        out << " mutation=" << to_string(report.mutation);
    out << " params=";
    for (std::size_t i = 0; i < report.params.size(); ++i)
        out << (i ? "," : "") << params_text(report.params[i]);
    out << " n=" << report.min_n << ".." << report.max_n << " checked=" << report.checked
        << " oracle_checked=" << report.oracle_checked << " failures=" << report.failure_count;
    return out.str();
}

} // namespace prefab

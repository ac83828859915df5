#include "prefab/series.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

namespace prefab {

namespace {

const BigInt zero{0};

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw InvalidArgument("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::string family_name(SpecFamily family)
{
    switch (family) {
    case SpecFamily::uniform: return "uniform";
    case SpecFamily::kcolors: return "kcolors";
    case SpecFamily::odd: return "odd";
    case SpecFamily::distinct: return "distinct";
    case SpecFamily::overpartition: return "overpartition";
    case SpecFamily::odd_overlined: return "oddoverlined";
    case SpecFamily::custom: return "custom";
    }
    return "custom";
}

int parameter_count(SpecFamily family)
{
    switch (family) {
    case SpecFamily::kcolors: return 0;
    case SpecFamily::overpartition:
    case SpecFamily::odd_overlined: return 2;
    default: return 1;
    }
}

// c <- c / (1 - q^part)^colors, in place.
void apply_repeatable(std::vector<BigInt>& c, int part, int colors)
{
    const int n_max = static_cast<int>(c.size()) - 1;
    if (colors <= n_max / part) {
        for (int pass = 0; pass < colors; ++pass)
            for (int n = part; n <= n_max; ++n)
                c[n] += c[n - part];
        return;
    }
    // Multiset count: j copies of `part` spread over `colors` colors.
    for (int n = n_max; n >= part; --n) {
        BigInt acc = c[n];
        BigInt weight = 1;
        for (int j = 1; j * part <= n; ++j) {
            weight = weight * (colors + j - 1) / j;
            acc += weight * c[n - j * part];
        }
        c[n] = std::move(acc);
    }
}

// c <- c * (1 + q^part)^colors, in place.
void apply_distinct(std::vector<BigInt>& c, int part, int colors)
{
    const int n_max = static_cast<int>(c.size()) - 1;
    for (int n = n_max; n >= part; --n) {
        BigInt acc = c[n];
        BigInt weight = 1;
        for (int j = 1; j <= colors && j * part <= n; ++j) {
            weight = weight * (colors - j + 1) / j;
            acc += weight * c[n - j * part];
        }
        c[n] = std::move(acc);
    }
}

} // namespace

const char* kind_code(FactorKind kind)
{
    switch (kind) {
    case FactorKind::repeatable: return "R";
    case FactorKind::distinct: return "D";
    case FactorKind::marked: return "M";
    }
    return "?";
}

FactorSpec::FactorSpec(std::vector<Factor> factors, std::string label, SpecFamily family)
    : label_(std::move(label))
    , family_(family)
{
    std::map<std::pair<int, int>, int> merged; // (-part, kind) -> multiplicity
    for (const auto& f : factors) {
        if (f.part < 1)
            throw InvalidArgument("factor part must be >= 1, got " + std::to_string(f.part));
        if (f.multiplicity < 0)
            throw InvalidArgument("factor multiplicity must be >= 0, got " + std::to_string(f.multiplicity));
        merged[{-f.part, static_cast<int>(f.kind)}] += f.multiplicity;
    }
    for (const auto& [key, mult] : merged)
        if (mult > 0)
            factors_.push_back({-key.first, mult, static_cast<FactorKind>(key.second)});
}

FactorSpec FactorSpec::uniform(int colors, int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; ++k)
        fs.push_back({k, colors, FactorKind::repeatable});
    return {std::move(fs), "uniform(" + std::to_string(colors) + ")", SpecFamily::uniform};
}

FactorSpec FactorSpec::k_colors(int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; ++k)
        fs.push_back({k, k, FactorKind::repeatable});
    return {std::move(fs), "k-colors", SpecFamily::kcolors};
}

FactorSpec FactorSpec::odd(int colors, int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; k += 2)
        fs.push_back({k, colors, FactorKind::repeatable});
    return {std::move(fs), "odd(" + std::to_string(colors) + ")", SpecFamily::odd};
}

FactorSpec FactorSpec::distinct(int colors, int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; ++k)
        fs.push_back({k, colors, FactorKind::distinct});
    return {std::move(fs), "distinct(" + std::to_string(colors) + ")", SpecFamily::distinct};
}

FactorSpec FactorSpec::overpartition(int ordinary_colors, int overline_colors, int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; ++k) {
        fs.push_back({k, ordinary_colors, FactorKind::repeatable});
        fs.push_back({k, overline_colors, FactorKind::distinct});
    }
    return {std::move(fs),
            "overpartition(" + std::to_string(ordinary_colors) + "," + std::to_string(overline_colors) + ")",
            SpecFamily::overpartition};
}

FactorSpec FactorSpec::odd_overlined(int ordinary_colors, int odd_colors, int max_part)
{
    std::vector<Factor> fs;
    for (int k = 1; k <= max_part; ++k) {
        fs.push_back({k, ordinary_colors, FactorKind::repeatable});
        if (k % 2 == 1)
            fs.push_back({k, odd_colors, FactorKind::marked});
    }
    return {std::move(fs),
            "odd-overlined(" + std::to_string(ordinary_colors) + "," + std::to_string(odd_colors) + ")",
            SpecFamily::odd_overlined};
}

int FactorSpec::colors(int part, FactorKind kind) const
{
    for (const auto& f : factors_)
        if (f.part == part && f.kind == kind)
            return f.multiplicity;
    return 0;
}

int FactorSpec::repeatable_colors(int part) const
{
    return colors(part, FactorKind::repeatable) + colors(part, FactorKind::marked);
}

bool FactorSpec::has_kind(FactorKind kind) const
{
    return std::any_of(factors_.begin(), factors_.end(), [kind](const Factor& f) { return f.kind == kind; });
}

SpecSelector SpecSelector::parse(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    SpecSelector sel;
    if (name == "uniform")
        sel.family = SpecFamily::uniform;
    else if (name == "kcolors")
        sel.family = SpecFamily::kcolors;
    else if (name == "odd")
        sel.family = SpecFamily::odd;
    else if (name == "distinct")
        sel.family = SpecFamily::distinct;
    else if (name == "overpartition")
        sel.family = SpecFamily::overpartition;
    else if (name == "oddoverlined")
        sel.family = SpecFamily::odd_overlined;
    else
        throw InvalidArgument("unknown spec '" + std::string(text) +
                              "' (expected uniform:b, kcolors, odd:b, distinct:b, overpartition:r,s, oddoverlined:r,s)");

    const int wanted = parameter_count(sel.family);
    std::vector<int> values;
    if (colon != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto comma = args.find(',', start);
            values.push_back(parse_int(args.substr(start, comma - start), "spec parameter"));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    }
    if (static_cast<int>(values.size()) != wanted)
        throw InvalidArgument("spec '" + std::string(text) + "' takes " + std::to_string(wanted) + " parameter(s)");
    for (int v : values)
        if (v < 1)
            throw InvalidArgument("spec parameters must be >= 1 in '" + std::string(text) + "'");

    sel.first = wanted >= 1 ? values[0] : 0;
    sel.second = wanted == 2 ? values[1] : 0;
    return sel;
}

std::string SpecSelector::to_string() const
{
    switch (parameter_count(family)) {
    case 0: return family_name(family);
    case 1: return family_name(family) + ":" + std::to_string(first);
    default: return family_name(family) + ":" + std::to_string(first) + "," + std::to_string(second);
    }
}

std::string SpecSelector::label() const
{
    return build(0).label();
}

FactorSpec SpecSelector::build(int max_part) const
{
    switch (family) {
    case SpecFamily::uniform: return FactorSpec::uniform(first, max_part);
    case SpecFamily::kcolors: return FactorSpec::k_colors(max_part);
    case SpecFamily::odd: return FactorSpec::odd(first, max_part);
    case SpecFamily::distinct: return FactorSpec::distinct(first, max_part);
    case SpecFamily::overpartition: return FactorSpec::overpartition(first, second, max_part);
    case SpecFamily::odd_overlined: return FactorSpec::odd_overlined(first, second, max_part);
    case SpecFamily::custom: break;
    }
    throw InvalidArgument("custom specs have no selector");
}

CoeffSeries::CoeffSeries(std::vector<BigInt> coeffs, std::string label)
    : coeffs_(std::move(coeffs))
    , label_(std::move(label))
{
    if (coeffs_.empty())
        throw InvalidArgument("a coefficient series needs at least c_0");
}

const BigInt& CoeffSeries::at(int n) const
{
    if (n < 0)
        return zero;
    if (n > truncation())
        throw TruncationError("coefficient " + std::to_string(n) + " requested from " + label_ +
                              " truncated at " + std::to_string(truncation()));
    return coeffs_[static_cast<std::size_t>(n)];
}

CoeffSeries expand(const FactorSpec& spec, int max_n)
{
    if (max_n < 0)
        throw InvalidArgument("truncation must be >= 0, got " + std::to_string(max_n));
    std::vector<BigInt> c(static_cast<std::size_t>(max_n) + 1);
    c[0] = 1;
    for (const auto& f : spec.factors()) {
        if (f.part > max_n || f.multiplicity == 0)
            continue;
        if (f.kind == FactorKind::distinct)
            apply_distinct(c, f.part, f.multiplicity);
        else
            apply_repeatable(c, f.part, f.multiplicity);
    }
    return {std::move(c), spec.label()};
}

const BigInt& coefficient(const CoeffSeries& series, int n)
{
    return series.at(n);
}

CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b)
{
    const int n_max = std::min(a.truncation(), b.truncation());
    std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m)
            c[n] += a.at(m) * b.at(n - m);
    return {std::move(c), a.label() + "*" + b.label()};
}

bool series_equal(const CoeffSeries& a, const CoeffSeries& b)
{
    if (a.truncation() != b.truncation())
        throw InvalidArgument("series_equal: truncations differ (" + std::to_string(a.truncation()) + " vs " +
                              std::to_string(b.truncation()) + ")");
    return std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin());
}

nlohmann::json to_json(const CoeffSeries& series)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : series.coeffs())
        coeffs.push_back(c.str());
    return {{"label", series.label()}, {"truncation", series.truncation()}, {"coeffs", std::move(coeffs)}};
}

} // namespace prefab

#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "prefab/common.hpp"

namespace prefab {

/// How a factor contributes to the generating product.
///
/// repeatable: 1/(1-q^part)^multiplicity
/// distinct:   (1+q^part)^multiplicity
/// marked:     1/(1-q^part)^multiplicity, but tracked as a second component
///             (the odd parts of an odd-overlined partition).
enum class FactorKind : std::uint8_t { repeatable = 0, distinct = 1, marked = 2 };

inline constexpr int factor_kind_count = 3;

/// One-letter code used in JSON exports ("R", "D", "M").
const char* kind_code(FactorKind kind);

struct Factor {
    int part = 1;
    int multiplicity = 0;
    FactorKind kind = FactorKind::repeatable;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Named families of generating products. `custom` covers hand-built factor lists.
enum class SpecFamily : std::uint8_t { custom, uniform, kcolors, odd, distinct, overpartition, odd_overlined };

/// A finite generating product: the list of factors plus a descriptive label.
///
/// Factors are kept in canonical order (descending part, then kind) with one
/// entry per (part, kind); duplicates are merged by adding multiplicities and
/// zero-multiplicity factors are dropped.
class FactorSpec {
public:
    FactorSpec() = default;
    FactorSpec(std::vector<Factor> factors, std::string label, SpecFamily family = SpecFamily::custom);

    static FactorSpec uniform(int colors, int max_part);
    static FactorSpec k_colors(int max_part);
    static FactorSpec odd(int colors, int max_part);
    static FactorSpec distinct(int colors, int max_part);
    static FactorSpec overpartition(int ordinary_colors, int overline_colors, int max_part);
    static FactorSpec odd_overlined(int ordinary_colors, int odd_colors, int max_part);

    const std::vector<Factor>& factors() const { return factors_; }
    const std::string& label() const { return label_; }
    SpecFamily family() const { return family_; }

    /// Multiplicity of the (part, kind) factor, 0 if absent.
    int colors(int part, FactorKind kind) const;

    /// Number of colored parts of size `part` that may repeat (repeatable + marked).
    int repeatable_colors(int part) const;

    bool has_kind(FactorKind kind) const;

private:
    std::vector<Factor> factors_;
    std::string label_ = "empty";
    SpecFamily family_ = SpecFamily::custom;
};

/// Family plus parameters, independent of the truncation. Parsed from the
/// CLI grammar `name[:p1[,p2]]`.
struct SpecSelector {
    SpecFamily family = SpecFamily::uniform;
    int first = 1;  // b, or r for two-parameter families
    int second = 0; // s for overpartition / oddoverlined

    static SpecSelector parse(std::string_view text);

    /// Canonical selector text, e.g. "overpartition:2,1".
    std::string to_string() const;
    /// Descriptive label, e.g. "overpartition(2,1)".
    std::string label() const;
    FactorSpec build(int max_part) const;

    friend bool operator==(const SpecSelector&, const SpecSelector&) = default;
    friend auto operator<=>(const SpecSelector&, const SpecSelector&) = default;
};

/// Truncated coefficient sequence c_0..c_N of a generating product.
class CoeffSeries {
public:
    CoeffSeries(std::vector<BigInt> coeffs, std::string label);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& label() const { return label_; }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// c_n; zero for n < 0, TruncationError for n > truncation().
    const BigInt& at(int n) const;
    const BigInt& operator[](int n) const { return at(n); }

private:
    std::vector<BigInt> coeffs_;
    std::string label_;
};

CoeffSeries expand(const FactorSpec& spec, int max_n);

const BigInt& coefficient(const CoeffSeries& series, int n);

/// Cauchy product, truncated to the smaller of the two truncations.
CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b);

/// Coefficient-wise equality. Both series must share a truncation.
bool series_equal(const CoeffSeries& a, const CoeffSeries& b);

/// {"label", "truncation", "coeffs": [decimal strings]}
nlohmann::json to_json(const CoeffSeries& series);

} // namespace prefab

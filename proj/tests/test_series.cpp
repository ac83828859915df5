#include <doctest.h>

#include <algorithm>
#include <random>

#include "prefab/series.hpp"
#include "support/naive_oracle.hpp"

using namespace prefab;

namespace {

std::vector<long> values(const CoeffSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coeffs())
        out.push_back(c.convert_to<long>());
    return out;
}

} // namespace

TEST_CASE("ordinary partitions")
{
    const auto p = expand(FactorSpec::uniform(1, 10), 10);
    CHECK(values(p) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    CHECK(p.label() == "uniform(1)");
    CHECK(p.truncation() == 10);
}

TEST_CASE("families at small order")
{
    CHECK(values(expand(FactorSpec::k_colors(6), 6)) == std::vector<long>{1, 1, 3, 6, 13, 24, 48});
    CHECK(values(expand(FactorSpec::uniform(2, 5), 5)) == std::vector<long>{1, 2, 5, 10, 20, 36});
    CHECK(values(expand(FactorSpec::overpartition(1, 1, 5), 5)) == std::vector<long>{1, 2, 4, 8, 14, 24});
    CHECK(values(expand(FactorSpec::odd(2, 4), 4)) == std::vector<long>{1, 2, 3, 6, 9});
    CHECK(values(expand(FactorSpec::distinct(2, 4), 4)) == std::vector<long>{1, 2, 3, 6, 9});
    CHECK(expand(FactorSpec::uniform(3, 18), 18)[18] == 142769);
}

TEST_CASE("empty product and zero order")
{
    const auto one = expand(FactorSpec{}, 5);
    CHECK(values(one) == std::vector<long>{1, 0, 0, 0, 0, 0});
    CHECK(values(expand(FactorSpec::k_colors(0), 0)) == std::vector<long>{1});
    CHECK_THROWS_AS(expand(FactorSpec::uniform(1, 3), -1), InvalidArgument);
}

TEST_CASE("coefficient access")
{
    const auto p = expand(FactorSpec::uniform(1, 8), 8);
    CHECK(p.at(-3) == 0);
    CHECK(coefficient(p, 8) == 22);
    CHECK_THROWS_AS(p.at(9), TruncationError);
}

TEST_CASE("factor validation and merging")
{
    CHECK_THROWS_AS(FactorSpec({{0, 1, FactorKind::repeatable}}, "bad"), InvalidArgument);
    CHECK_THROWS_AS(FactorSpec({{2, -1, FactorKind::repeatable}}, "bad"), InvalidArgument);

    const FactorSpec merged({{2, 1, FactorKind::repeatable}, {1, 1, FactorKind::repeatable},
                             {2, 2, FactorKind::repeatable}, {3, 0, FactorKind::repeatable}},
                            "merged");
    CHECK(merged.colors(2, FactorKind::repeatable) == 3);
    CHECK(merged.colors(3, FactorKind::repeatable) == 0);
    CHECK(merged.factors().size() == 2);
}

TEST_CASE("large color counts use binomial weights")
{
    // b > n/k: (1-q)^-5 has coefficients C(n+4, 4).
    const auto s = expand(FactorSpec({{1, 5, FactorKind::repeatable}}, "x"), 6);
    CHECK(values(s) == std::vector<long>{1, 5, 15, 35, 70, 126, 210});
    // (1+q^2)^4
    const auto d = expand(FactorSpec({{2, 4, FactorKind::distinct}}, "y"), 9);
    CHECK(values(d) == std::vector<long>{1, 0, 4, 0, 6, 0, 4, 0, 1, 0});
}

TEST_CASE("selector grammar")
{
    const auto sel = SpecSelector::parse("overpartition:2,1");
    CHECK(sel.family == SpecFamily::overpartition);
    CHECK(sel.first == 2);
    CHECK(sel.second == 1);
    CHECK(sel.to_string() == "overpartition:2,1");
    CHECK(sel.label() == "overpartition(2,1)");
    CHECK(SpecSelector::parse("kcolors").to_string() == "kcolors");
    CHECK(SpecSelector::parse("oddoverlined:1,3").label() == "odd-overlined(1,3)");

    for (const char* bad : {"", "uniform", "uniform:0", "uniform:1,2", "kcolors:2", "overpartition:1",
                            "odd:x", "partitions:1", "distinct:-1", "uniform:1x"})
        CHECK_THROWS_AS(SpecSelector::parse(bad), InvalidArgument);

    for (const char* text : {"uniform:3", "kcolors", "odd:2", "distinct:1", "overpartition:1,2", "oddoverlined:2,1"})
        CHECK(SpecSelector::parse(SpecSelector::parse(text).to_string()) == SpecSelector::parse(text));
}

TEST_CASE("convolution")
{
    const auto a = expand(FactorSpec::uniform(1, 10), 10);
    const auto b = expand(FactorSpec::distinct(1, 8), 8);
    const auto c = convolve(a, b);
    CHECK(c.truncation() == 8);
    CHECK(c.label() == "uniform(1)*distinct(1)");
    CHECK(series_equal(c, expand(FactorSpec::overpartition(1, 1, 8), 8)));
    CHECK_THROWS_AS(series_equal(a, b), InvalidArgument);
}

TEST_CASE("json export")
{
    const auto j = to_json(expand(FactorSpec::uniform(1, 3), 3));
    CHECK(j["label"] == "uniform(1)");
    CHECK(j["truncation"] == 3);
    CHECK(j["coeffs"] == nlohmann::json::array({"1", "1", "2", "3"}));
}

TEST_CASE("big coefficients stay exact")
{
    // p(200) = 3972999029388
    CHECK(expand(FactorSpec::uniform(1, 200), 200)[200] == BigInt("3972999029388"));
    // p(1000) has 32 digits
    CHECK(expand(FactorSpec::uniform(1, 1000), 1000)[1000] == BigInt("24061467864032622473692149727991"));
}

TEST_CASE("property: factor order does not matter")
{
    std::mt19937 rng(20260101);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Factor> factors;
        const int count = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int i = 0; i < count; ++i)
            factors.push_back({std::uniform_int_distribution<int>(1, 9)(rng),
                               std::uniform_int_distribution<int>(0, 4)(rng),
                               static_cast<FactorKind>(std::uniform_int_distribution<int>(0, 1)(rng))});
        auto shuffled = factors;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto a = expand(FactorSpec(factors, "a"), 30);
        const auto b = expand(FactorSpec(shuffled, "b"), 30);
        CHECK(series_equal(a, b));
    }
}

TEST_CASE("property: expansion agrees with brute force on random products")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> b(10);
        std::vector<Factor> factors;
        for (int v = 1; v <= 10; ++v) {
            b[static_cast<std::size_t>(v - 1)] = std::uniform_int_distribution<int>(0, 3)(rng);
            factors.push_back({v, b[static_cast<std::size_t>(v - 1)], FactorKind::repeatable});
        }
        const auto s = expand(FactorSpec(factors, "random"), 10);
        const auto types = naive::custom(b);
        for (int n = 0; n <= 10; ++n)
            CHECK(s[n] == naive::count(n, types));
    }
}

TEST_CASE("property: built-in families agree with brute force for n <= 14")
{
    constexpr int n_max = 14;
    struct Case {
        FactorSpec spec;
        std::vector<naive::PartType> types;
    };
    const std::vector<Case> cases{
        {FactorSpec::uniform(1, n_max), naive::uniform(1, n_max)},
        {FactorSpec::uniform(2, n_max), naive::uniform(2, n_max)},
        {FactorSpec::k_colors(n_max), naive::kcolors(n_max)},
        {FactorSpec::odd(2, n_max), naive::odd(2, n_max)},
        {FactorSpec::distinct(3, n_max), naive::distinct(3, n_max)},
        {FactorSpec::overpartition(2, 1, n_max), naive::overpartition(2, 1, n_max)},
        {FactorSpec::odd_overlined(1, 2, n_max), naive::odd_overlined(1, 2, n_max)},
    };
    for (const auto& c : cases) {
        const auto s = expand(c.spec, n_max);
        for (int n = 0; n <= n_max; ++n)
            CHECK(s[n] == naive::count(n, c.types));
    }
}

TEST_CASE("property: odd and distinct products agree")
{
    for (int b = 1; b <= 3; ++b)
        CHECK(series_equal(expand(FactorSpec::odd(b, 200), 200), expand(FactorSpec::distinct(b, 200), 200)));
}

TEST_CASE("property: overpartitions and odd-overlined partitions are equinumerous")
{
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            CHECK(series_equal(expand(FactorSpec::overpartition(r, s, 120), 120),
                               expand(FactorSpec::odd_overlined(r, s, 120), 120)));
}

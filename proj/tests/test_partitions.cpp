#include <doctest.h>

#include <random>
#include <set>

#include "prefab/partitions.hpp"
#include "support/naive_oracle.hpp"

using namespace prefab;

namespace {

constexpr auto R = FactorKind::repeatable;
constexpr auto D = FactorKind::distinct;
constexpr auto M = FactorKind::marked;

std::vector<std::string> texts(int n, const FactorSpec& spec)
{
    std::vector<std::string> out;
    for_each_partition(n, spec, [&](const ColoredPartition& pi) { out.push_back(to_text(pi, spec)); });
    return out;
}

} // namespace

TEST_CASE("ordinary partitions of 4 in canonical order")
{
    CHECK(texts(4, FactorSpec::uniform(1, 4)) ==
          std::vector<std::string>{"4", "3+1", "2+2", "2+1+1", "1+1+1+1"});
}

TEST_CASE("the empty partition")
{
    const auto all = enumerate(0, FactorSpec::uniform(1, 3));
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
    CHECK(all[0].weight() == 0);
    CHECK(to_text(all[0], FactorSpec::uniform(1, 3)) == "()");
    CHECK(to_json(all[0]) == nlohmann::json::array());
}

TEST_CASE("text and json rendering")
{
    const auto spec = FactorSpec::uniform(2, 3);
    CHECK(texts(2, spec) == std::vector<std::string>{"2_1", "2_2", "1_1+1_1", "1_1+1_2", "1_2+1_2"});

    const auto over = FactorSpec::overpartition(1, 1, 3);
    CHECK(texts(2, over) == std::vector<std::string>{"2", "2~", "1+1", "1+1~"});

    const auto oddo = FactorSpec::odd_overlined(1, 1, 3);
    CHECK(texts(2, oddo) == std::vector<std::string>{"2", "1+1", "1+1^", "1^+1^"});

    const ColoredPartition pi({{{3, 2, R}, 2}, {{1, 1, D}, 1}});
    CHECK(to_json(pi) == nlohmann::json::parse(R"([[3,2,"R",2],[1,1,"D",1]])"));
}

TEST_CASE("construction sorts, merges and validates")
{
    const ColoredPartition pi({{{1, 1, R}, 1}, {{3, 1, R}, 1}, {{1, 1, R}, 2}, {{2, 1, M}, 0}});
    REQUIRE(pi.entries().size() == 2);
    CHECK(pi.entries()[0] == PartEntry{{3, 1, R}, 1});
    CHECK(pi.entries()[1] == PartEntry{{1, 1, R}, 3});
    CHECK(pi.weight() == 6);
    CHECK(pi.recompute_weight() == 6);
    CHECK_THROWS_AS(ColoredPartition({{{2, 1, D}, 2}}), InvalidArgument);
    CHECK_THROWS_AS(ColoredPartition({{{0, 1, R}, 1}}), InvalidArgument);

    CHECK(canonical_less({3, 1, R}, {2, 1, R}));
    CHECK(canonical_less({2, 1, R}, {2, 1, D}));
    CHECK(canonical_less({2, 1, D}, {2, 1, M}));
    CHECK(canonical_less({2, 1, R}, {2, 2, R}));
    CHECK_FALSE(canonical_less({2, 1, R}, {2, 1, R}));
}

TEST_CASE("per-partition statistics")
{
    const auto pi = ColoredPartition::from_values({4, 3, 3, 2, 1, 1, 1, 1});
    CHECK(frequency(pi, 1) == 4);
    CHECK(frequency(pi, 3) == 2);
    CHECK(frequency(pi, 5) == 0);
    CHECK(parts_repeated_at_least(pi, 1, Merge::by_colored_part) == 4);
    CHECK(parts_repeated_at_least(pi, 2, Merge::by_colored_part) == 2);
    CHECK(parts_repeated_at_least(pi, 4, Merge::by_colored_part) == 1);
    CHECK(sum_parts_divisible_by(pi, 1) == 10);
    CHECK(sum_parts_divisible_by(pi, 2) == 6);

    const auto stats = partition_stats(pi);
    CHECK(stats.weight == 16);
    CHECK(stats.freq_by_value == std::vector<std::pair<int, int>>{{4, 1}, {3, 2}, {2, 1}, {1, 4}});

    // Two colors of 2, one of them overlined: merged by value they repeat.
    const ColoredPartition colored({{{2, 1, R}, 1}, {{2, 2, R}, 1}, {{2, 1, D}, 1}});
    CHECK(frequency(colored, 2) == 3);
    CHECK(frequency(colored, 2, D) == 1);
    CHECK(parts_repeated_at_least(colored, 2, Merge::by_colored_part) == 0);
    CHECK(parts_repeated_at_least(colored, 3, Merge::by_value) == 1);
    CHECK(parts_repeated_at_least(colored, 1, Merge::by_colored_part, R) == 2);
    CHECK(sum_parts_divisible_by(colored, 2) == 6);
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate(21, FactorSpec::uniform(1, 21)), CapExceeded);
    CHECK(enumerate(21, FactorSpec::uniform(1, 21), 21).size() == 792);
    try {
        check_cap(25, 20);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("20") != std::string::npos);
    }
    CHECK_THROWS_AS(for_each_partition(-1, FactorSpec::uniform(1, 1), [](const ColoredPartition&) {}),
                    InvalidArgument);
}

TEST_CASE("property: enumeration matches brute force, no duplicates, weights intact")
{
    constexpr int n_max = 12;
    struct Case {
        FactorSpec spec;
        std::vector<naive::PartType> types;
    };
    const std::vector<Case> cases{
        {FactorSpec::uniform(3, n_max), naive::uniform(3, n_max)},
        {FactorSpec::k_colors(n_max), naive::kcolors(n_max)},
        {FactorSpec::odd(1, n_max), naive::odd(1, n_max)},
        {FactorSpec::distinct(2, n_max), naive::distinct(2, n_max)},
        {FactorSpec::overpartition(1, 2, n_max), naive::overpartition(1, 2, n_max)},
        {FactorSpec::odd_overlined(2, 1, n_max), naive::odd_overlined(2, 1, n_max)},
    };
    for (const auto& c : cases) {
        for (int n = 0; n <= n_max; ++n) {
            std::set<std::string> seen;
            std::uint64_t count = 0;
            bool ok = true;
            for_each_partition(n, c.spec, [&](const ColoredPartition& pi) {
                ++count;
                ok = ok && pi.weight() == n && pi.recompute_weight() == n;
                ok = ok && seen.insert(to_json(pi).dump()).second;
                for (std::size_t i = 1; i < pi.entries().size(); ++i)
                    ok = ok && canonical_less(pi.entries()[i - 1].part, pi.entries()[i].part);
                for (const auto& e : pi.entries())
                    ok = ok && e.frequency >= 1 && (e.part.kind != D || e.frequency == 1) &&
                         e.part.color <= c.spec.colors(e.part.value, e.part.kind);
            });
            CHECK(ok);
            CHECK(count == naive::count(n, c.types));
        }
    }
}

TEST_CASE("property: frequencies decompose the weight")
{
    // Σ_k k·f_k(π) = |π| on every partition, hence Σ_k k·F_k(n) = n·h(n).
    for (int n = 0; n <= 16; ++n) {
        const auto t = oracle_tally(n, FactorSpec::uniform(2, n), 20);
        std::uint64_t sum = 0;
        for (int k = 1; k <= n; ++k)
            sum += static_cast<std::uint64_t>(k) * OracleTally::get(t.freq_all, k);
        CHECK(sum == static_cast<std::uint64_t>(n) * t.count);
    }
}

TEST_CASE("tallies agree with brute force")
{
    constexpr int n = 9;
    {
        const auto t = oracle_tally(n, FactorSpec::uniform(2, n), 20);
        const auto types = naive::uniform(2, n);
        for (int k = 1; k <= n; ++k) {
            CHECK(OracleTally::get(t.freq_all, k) == naive::total(n, types, naive::freq(k)));
            CHECK(OracleTally::get(t.repeated_colored_all, k) == naive::total(n, types, naive::repeated(k)));
            CHECK(OracleTally::get(t.divisible_sum, k) == naive::total(n, types, naive::divisible_sum(k)));
        }
    }
    {
        const auto t = oracle_tally(n, FactorSpec::overpartition(1, 1, n), 20);
        const auto types = naive::overpartition(1, 1, n);
        for (int m = 1; m <= n; ++m) {
            CHECK(OracleTally::get(t.repeated_by_value, m) == naive::total(n, types, naive::repeated_values(m)));
            CHECK(OracleTally::get(t.value_present, m) == naive::total(n, types, naive::value_at_least(m, 1)));
            CHECK(OracleTally::get(t.value_thrice, m) == naive::total(n, types, naive::value_at_least(m, 3)));
            CHECK(OracleTally::get(t.only_overlined, m) == naive::total(n, types, naive::only_once_kind(m)));
            CHECK(OracleTally::get(t.freq[1], m) == naive::total(n, types, naive::freq(m, naive::once)));
        }
    }
    CHECK(OracleTally::get(OracleTally(3).freq_all, 7) == 0);
}

TEST_CASE("property: serial and parallel tallies are identical")
{
    for (const char* text : {"uniform:2", "overpartition:1,1", "oddoverlined:1,2"}) {
        const auto sel = SpecSelector::parse(text);
        const auto a = oracle_tallies(sel, 14, 20, ExecPolicy::serial);
        const auto b = oracle_tallies(sel, 14, 20, ExecPolicy::parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t n = 0; n < a.size(); ++n) {
            CHECK(a[n].count == b[n].count);
            CHECK(a[n].freq_all == b[n].freq_all);
            CHECK(a[n].repeated_by_value == b[n].repeated_by_value);
            CHECK(a[n].divisible_sum == b[n].divisible_sum);
        }
    }
    CHECK_THROWS_AS(oracle_tallies(SpecSelector::parse("uniform:1"), 21), CapExceeded);
}

TEST_CASE("oracle_stat for one point")
{
    const auto sel = SpecSelector::parse("uniform:1");
    CHECK(oracle_stat(5, sel, StatKind::f_uniform, 1) == 12);
    CHECK(oracle_stat(6, sel, StatKind::h_uniform, 2) == 24);
    CHECK(oracle_stat(5, SpecSelector::parse("odd:1"), StatKind::f_odd, 1) == 7);
    CHECK_THROWS_AS(oracle_stat(30, sel, StatKind::f_uniform, 1), CapExceeded);
}

#include <doctest.h>

#include "prefab/identities.hpp"

using namespace prefab;

namespace {

const std::vector<int> bs{1, 2, 3};
const std::vector<Params> rs{{1, 1}, {2, 1}, {1, 2}};

IdentityReport run(TheoremId id, int max_n, VerifyOptions options = {})
{
    const auto params = default_params(id, bs, rs);
    return verify(id, params, max_n, options);
}

} // namespace

TEST_CASE("names round-trip")
{
    for (TheoremId id : all_theorems) {
        CHECK(parse_theorem(tag(id)) == id);
        CHECK(parse_theorem(cli_name(id)) == id);
    }
    CHECK(cli_name(TheoremId::overline_1_3) == "overline13");
    CHECK_FALSE(parse_theorem("sef"));
    CHECK(parse_mode("both") == VerifyMode::both);
    CHECK_FALSE(parse_mode("slow"));
}

TEST_CASE("default parameter grids")
{
    CHECK(default_params(TheoremId::sef_classic, bs, rs) == std::vector<Params>{{1}});
    CHECK(default_params(TheoremId::sef_bcolored, bs, rs) == std::vector<Params>{{1}, {2}, {3}});
    CHECK(default_params(TheoremId::overpartition_combined, bs, rs) == rs);
    CHECK(default_params(TheoremId::kcolors, bs, rs) == std::vector<Params>{{}});
}

TEST_CASE("every theorem holds in fast mode")
{
    for (TheoremId id : all_theorems) {
        const auto r = run(id, 120);
        CHECK_MESSAGE(r.pass(), tag(id));
        CHECK(r.checked > 0);
        CHECK(r.oracle_checked == 0);
        CHECK(r.failures.empty());
        CHECK_FALSE(r.series_used.empty());
    }
}

TEST_CASE("oracle and both modes")
{
    for (TheoremId id : all_theorems) {
        VerifyOptions oracle;
        oracle.mode = VerifyMode::oracle;
        const auto r = run(id, 14, oracle);
        CHECK_MESSAGE(r.pass(), tag(id));

        VerifyOptions both;
        both.mode = VerifyMode::both;
        const auto b = run(id, 14, both);
        CHECK_MESSAGE(b.pass(), tag(id));
        CHECK(b.oracle_checked > 0);
    }
    // Past the cap only the fast side is swept, cross-checks stop at the cap.
    VerifyOptions both;
    both.mode = VerifyMode::both;
    both.oracle_cap = 8;
    const auto wide = run(TheoremId::overline_1_3, 30, both);
    CHECK(wide.pass());
    CHECK(wide.checked == 30);
    const auto narrow = run(TheoremId::overline_1_3, 8, both);
    CHECK(wide.oracle_checked == narrow.oracle_checked);
}

TEST_CASE("range of k per theorem")
{
    CHECK(run(TheoremId::sef_classic, 10).checked == 55);
    CHECK(run(TheoremId::odd_sum, 10).checked == 3 * 30); // odd k only
    CHECK(run(TheoremId::euler_odd_distinct, 10).checked == 3 * 10);
    CHECK(run(TheoremId::overline_1_3, 10).checked == 10);
    const auto e = run(TheoremId::euler_odd_distinct, 10);
    CHECK(e.min_k == 0);
    CHECK(e.max_k == 0);
}

TEST_CASE("argument errors")
{
    const std::vector<Params> one{{1}};
    CHECK_THROWS_AS(verify(TheoremId::sef_bcolored, one, 0), InvalidArgument);
    CHECK_THROWS_AS(verify(TheoremId::sef_bcolored, std::vector<Params>{{0}}, 5), InvalidArgument);
    CHECK_THROWS_AS(verify(TheoremId::sef_bcolored, std::vector<Params>{{1, 2}}, 5), InvalidArgument);
    CHECK_THROWS_AS(verify(TheoremId::sef_classic, std::vector<Params>{{2}}, 5), InvalidArgument);
    CHECK_THROWS_AS(verify(TheoremId::overpartition_combined, one, 5), InvalidArgument);
    CHECK_THROWS_AS(verify(TheoremId::sef_bcolored, std::vector<Params>{}, 5), InvalidArgument);

    VerifyOptions oracle;
    oracle.mode = VerifyMode::oracle;
    CHECK_THROWS_AS(verify(TheoremId::sef_bcolored, one, 21, oracle), CapExceeded);
    oracle.oracle_cap = 21;
    CHECK(verify(TheoremId::sef_classic, one, 21, oracle).pass());
}

TEST_CASE("verify_all records errors instead of throwing")
{
    VerifyOptions oracle;
    oracle.mode = VerifyMode::oracle;
    const auto reports = verify_all(25, bs, rs, oracle);
    REQUIRE(reports.size() == std::size(all_theorems));
    for (const auto& r : reports) {
        CHECK(r.error.has_value());
        CHECK_FALSE(r.pass());
    }
    CHECK(summary_line(reports[0]).rfind("ERROR SEF_CLASSIC", 0) == 0);
}

TEST_CASE("mutations are caught early")
{
    const auto registered = registered_mutations();
    CHECK(registered.size() == std::size(all_theorems));
    for (const auto& m : registered) {
        const auto r = mutation_smoke(m.theorem, 10);
        CHECK_MESSAGE(r.failure_count > 0, tag(m.theorem));
        REQUIRE_FALSE(r.failures.empty());
        CHECK(r.failures.front().n <= 10);
        CHECK(r.failures.front().lhs != r.failures.front().rhs);
        CHECK(r.mutation == m.mutation);
    }
}

TEST_CASE("failure lists are bounded")
{
    const auto r = mutation_smoke(TheoremId::sef_bcolored, 60);
    CHECK(r.failure_count > max_reported_failures);
    CHECK(r.failures.size() == max_reported_failures);
    const auto j = to_json(r);
    CHECK(j["failures"].size() == max_reported_failures);
    CHECK(j["failure_count"] == r.failure_count);
    CHECK(j["pass"] == false);
    CHECK(summary_line(r).rfind("FAIL SEF_BCOLORED", 0) == 0);
}

TEST_CASE("report json")
{
    const auto r = run(TheoremId::kcolors, 12);
    const auto j = to_json(r);
    for (const char* key : {"theorem", "mode", "mutation", "params", "range_n", "range_k", "checked",
                            "oracle_checked", "failure_count", "failures", "series", "pass"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK_FALSE(j.contains("elapsed_seconds"));
    CHECK_FALSE(j.contains("error"));
    CHECK(to_json(r, true).contains("elapsed_seconds"));
    CHECK(j["theorem"] == "KCOLORS");
    CHECK(j["range_n"] == nlohmann::json::array({1, 12}));
    CHECK(summary_line(r) == "PASS KCOLORS mode=fast params=[] n=1..12 checked=78 oracle_checked=0 failures=0");
}

TEST_CASE("property: reports are reproducible and policy independent")
{
    VerifyOptions serial;
    serial.policy = ExecPolicy::serial;
    serial.mode = VerifyMode::both;
    VerifyOptions parallel = serial;
    parallel.policy = ExecPolicy::parallel;
    for (TheoremId id : all_theorems) {
        const auto a = to_json(run(id, 16, serial)).dump();
        const auto b = to_json(run(id, 16, parallel)).dump();
        const auto c = to_json(run(id, 16, parallel)).dump();
        CHECK(a == b);
        CHECK(b == c);
    }
    const auto m1 = to_json(mutation_smoke(TheoremId::distinct_diff, 40)).dump();
    const auto m2 = to_json(mutation_smoke(TheoremId::distinct_diff, 40)).dump();
    CHECK(m1 == m2);
}

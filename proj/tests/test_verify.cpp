#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ktdual/verify.hpp"

using namespace ktdual;

TEST_CASE("coverage manifest names every required invariant") {
    std::set<std::string> covered;
    for (const auto& [suite, invariants] : coverage_manifest()) {
        CHECK(std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end());
        covered.insert(invariants.begin(), invariants.end());
    }
    for (const auto& inv : required_invariants()) {
        INFO("invariant: " << inv);
        CHECK(covered.count(inv) == 1);
    }
    CHECK(coverage_manifest().size() == suite_names().size());
}

TEST_CASE("suites pass on a small scope") {
    std::vector<SuiteCase> scope{
        make_case(resolve_group("c2"), "triv+sigma"),
        make_case(resolve_group("s3"), "triv+std"),
        make_case(resolve_group("c5"), "chi1+chi2+chi3"),
    };
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, scope, 1);
        INFO(name << ": " << (r.failures.empty() ? "" : r.failures.front().subject + " | " +
                                                             r.failures.front().detail));
        CHECK(r.passed());
        CHECK(r.cases_run > 0);
    }
}

TEST_CASE("tables suite flags the dim-4 corner discrepancy") {
    SuiteResult r = run_suite("tables", default_scope(), 0);
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("15") != std::string::npos);
    CHECK(r.notes[0].find("14") != std::string::npos);
}

TEST_CASE("results are deterministic under a fixed seed") {
    std::vector<SuiteCase> scope{make_case(resolve_group("c3"), "chi1+chi2")};
    SuiteResult a = run_suite("lambda_ring", scope, 7);
    SuiteResult b = run_suite("lambda_ring", scope, 7);
    nlohmann::json ja = a.to_json(), jb = b.to_json();
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("unknown suites and empty scopes are rejected") {
    CHECK_THROWS_AS(run_suite("nosuch", default_scope(), 0), UserError);
    CHECK_THROWS_AS(run_suite("tables", {}, 0), UserError);
}

TEST_CASE("default scope composition") {
    auto scope = default_scope();
    std::set<std::string> groups;
    bool has_c5_dim4 = false, has_c2_repeated = false;
    for (const auto& sc : scope) {
        groups.insert(sc.group->name());
        if (sc.group->name() == "c5" && *sc.rep.dim().as_rational() == 4) has_c5_dim4 = true;
        if (sc.label == "c2:2*triv+sigma") has_c2_repeated = true;
        long d = to_long(*sc.rep.dim().as_rational());
        CHECK(d >= 1);
        CHECK(d <= 4);
    }
    CHECK(groups == std::set<std::string>{"c1", "c2", "c3", "c4", "c6", "c2xc2", "c5", "s3", "d4", "q8"});
    CHECK(has_c5_dim4);
    CHECK(has_c2_repeated);
}

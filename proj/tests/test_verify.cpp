#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tamcy/verify.hpp"

using namespace tamcy;

namespace {

FinitePoset pentagon() {
    return FinitePoset::from_covers({"t0", "t1", "t2", "t3", "t4"},
                                    {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}});
}

} // namespace

TEST_CASE("combinatorial serre catalog for n = 2") {
    const auto [s1, k1] = serre_combinatorial(IntervalPoset(2, {}));
    CHECK(s1 == IntervalPoset(2, {{2, 1}}));
    CHECK(k1 == 0);
    const auto [s2, k2] = serre_combinatorial(IntervalPoset(2, {{2, 1}}));
    CHECK(s2 == IntervalPoset(2, {{1, 2}}));
    CHECK(k2 == 1);
    const auto [s3, k3] = serre_combinatorial(IntervalPoset(2, {{1, 2}}));
    CHECK(s3 == IntervalPoset(2, {}));
    CHECK(k3 == 0);

    CHECK_THROWS_AS(serre_combinatorial(ip_closure(3, {{2, 3}, {2, 1}})),
                    precondition_error);
}

TEST_CASE("orbits close with the right shifts") {
    const OrbitRecord orb = serre_orbit(IntervalPoset(2, {}));
    CHECK(orb.closed);
    CHECK(orb.steps.size() == 6);
    CHECK(orb.period == 3);
    CHECK(orb.total_shift == 2);
    std::vector<int> shifts;
    for (const auto& s : orb.steps) shifts.push_back(s.shift);
    CHECK(shifts == std::vector<int>{0, 1, 0, 0, 1, 0});
    CHECK(orb.steps.back().cumulative_shift == 2);
    CHECK(orb.steps.back().ip == orb.start);

    const OrbitRecord one = serre_orbit(IntervalPoset(1, {}));
    CHECK(one.closed);
    CHECK(one.steps.size() == 4);
    CHECK(one.period == 1);
    CHECK(one.total_shift == 0);

    const OrbitRecord four = serre_orbit(ip_closure(4, {{2, 3}, {3, 1}, {1, 4}}));
    CHECK(four.closed);
    CHECK(four.steps.size() == 10);
    CHECK(four.period == 5);
    CHECK(four.total_shift == 12);
}

TEST_CASE("campaigns pass at small sizes") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(verify_bijections(n).passed());
        CHECK(verify_serre(n).passed());
        CHECK(verify_cy(n).passed());
        CHECK(verify_coxeter(n).passed());
        CHECK(verify_kclass(n).passed());
    }

    const VerificationReport rep = verify_cy(3);
    CHECK(rep.campaign == "cy");
    CHECK(rep.checked == 12);
    CHECK(rep.projectives_checked == 5);
    CHECK(rep.failures.empty());
    const auto j = rep.json();
    CHECK(j["campaign"] == "cy");
    CHECK(j["n"] == 3);
    CHECK(j["checked"] == 12);
    CHECK(j["projectives_checked"] == 5);
    CHECK(j["failures"].empty());

    const auto bj = verify_bijections(2).json();
    CHECK(bj.count("projectives_checked") == 0);
}

TEST_CASE("generic coxeter check and its failure report") {
    const FinitePoset p = pentagon();
    CHECK(verify_coxeter_generic(p, 8).passed());
    const VerificationReport bad = verify_coxeter_generic(p, 7);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.failures.size() == 1);
    CHECK(bad.failures[0]["power"] == 7);
    CHECK(bad.campaign == "coxeter-generic");
    CHECK(bad.n == 5);
}

TEST_CASE("campaign preconditions") {
    CHECK_THROWS_AS(verify_bijections(0), precondition_error);
    CHECK_THROWS_AS(verify_bijections(6), precondition_error);
    CHECK_THROWS_AS(verify_serre(5), precondition_error);
    CHECK_THROWS_AS(verify_serre(6, true), precondition_error);
    CHECK_THROWS_AS(verify_cy(7), precondition_error);
    CHECK_THROWS_AS(verify_coxeter(9), precondition_error);
    CHECK_THROWS_AS(verify_kclass(6), precondition_error);
    CHECK_THROWS_AS(verify_coxeter_generic(pentagon(), 0), precondition_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tamcy/interval_poset.hpp"

using namespace tamcy;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// Closure of {2 <| 3, 3 <| 1, 1 <| 4} on four elements; the running example
// for the two tree bijections.
IntervalPoset running_example() { return ip_closure(4, {{2, 3}, {3, 1}, {1, 4}}); }

} // namespace

TEST_CASE("closure computes the running example") {
    const IntervalPoset ip = running_example();
    CHECK(ip.relations() ==
          Pairs{{1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 4}});
    CHECK(ip.rel(3, 1));
    CHECK_FALSE(ip.rel(1, 3));
    CHECK(ip.inc().pairs(4) == Pairs{{1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(ip.dec().pairs(4) == Pairs{{1, 2}, {1, 3}});
    CHECK(ip == IntervalPoset(4, ip.relations()));
}

TEST_CASE("constructor validates closedness and antisymmetry") {
    CHECK_THROWS_AS(IntervalPoset(2, {{1, 2}, {2, 1}}), validation_error);
    // missing the forced relation 2 <| 3 (first interval condition on 1 <| 3... 3 <| 1 side)
    CHECK_THROWS_AS(IntervalPoset(3, {{3, 1}}), validation_error);
    // missing transitivity 2 <| 4 via 2 <| 3 <| 4
    CHECK_THROWS_AS(IntervalPoset(4, {{2, 3}, {3, 4}}), validation_error);
    CHECK_THROWS_AS(IntervalPoset(0, {}), precondition_error);
    CHECK_THROWS_AS(IntervalPoset(3, {{0, 1}}), validation_error);
    CHECK_THROWS_AS(ip_closure(2, {{1, 2}, {2, 1}}), validation_error);
}

TEST_CASE("intervals and interval-posets correspond") {
    const IntervalPoset ip = running_example();
    const auto [s, t] = ip_to_interval(ip);
    CHECK(tamari_leq(s, t));
    CHECK(tree_relations(s).inc == ip.inc());
    CHECK(tree_relations(t).dec == ip.dec());
    CHECK(interval_to_ip(s, t) == ip);

    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_ips(n)) {
            const auto [lo, hi] = ip_to_interval(x);
            CHECK(interval_to_ip(lo, hi) == x);
        }
}

TEST_CASE("hasse covers split by direction") {
    const HasseSplit h = hasse_split(running_example());
    CHECK(h.increasing == Pairs{{1, 4}, {2, 3}});
    CHECK(h.decreasing == Pairs{{3, 1}});

    // all-decreasing triangle: 2 <| 1, 3 <| 1, 3 <| 2
    const HasseSplit g = hasse_split(ip_closure(3, {{2, 1}, {3, 1}, {3, 2}}));
    CHECK(g.increasing.empty());
    CHECK(g.decreasing == Pairs{{2, 1}, {3, 2}});
}

TEST_CASE("shape predicates") {
    const IntervalPoset ip = running_example();
    CHECK(is_exceptional(ip));
    // the closure pins down one tree: both endpoints of the interval coincide
    CHECK(is_simple(ip));
    CHECK_FALSE(is_projective(ip));
    CHECK_FALSE(is_injective(ip));

    CHECK_FALSE(is_exceptional(ip_closure(3, {{2, 3}, {2, 1}})));

    const IntervalPoset empty2(2, {});
    CHECK(is_projective(empty2));
    CHECK(is_injective(empty2));
    CHECK(is_exceptional(empty2));
    CHECK_FALSE(is_simple(empty2));

    CHECK(is_simple(ip_closure(3, {{2, 1}, {3, 1}, {3, 2}})));

    const long exceptional_counts[] = {0, 1, 3, 12, 55, 273};
    for (int n = 1; n <= 5; ++n)
        CHECK(long(enumerate_exceptional(n).size()) == exceptional_counts[n]);
    const long interval_counts[] = {0, 1, 3, 13, 68, 399};
    for (int n = 1; n <= 5; ++n)
        CHECK(long(enumerate_ips(n).size()) == interval_counts[n]);
}

TEST_CASE("c_zero pairs projectives with injectives") {
    CHECK(c_zero(IntervalPoset(2, {})) == IntervalPoset(2, {{2, 1}}));
    CHECK(c_zero(IntervalPoset(2, {{1, 2}})) == IntervalPoset(2, {}));
    CHECK(c_zero(IntervalPoset(3, {})) ==
          IntervalPoset(3, {{2, 1}, {3, 1}, {3, 2}}));
    CHECK_THROWS_AS(c_zero(running_example()), precondition_error);

    // the decreasing part of c_zero always cuts out the singleton interval
    // at the same tree the projective is attached to
    for (int n = 2; n <= 4; ++n)
        for (const auto& x : enumerate_trees(n)) {
            const IntervalPoset c(n, tree_relations(x).inc.pairs(n));
            const IntervalPoset z = c_zero(c);
            CHECK(is_injective(z));
            CHECK(z.dec() == interval_to_ip(x, x).dec());
        }
}

TEST_CASE("reversing decreasing covers stays projective") {
    const IntervalPoset ip = running_example();
    const IntervalPoset c(4, ip.inc().pairs(4));
    const IntervalPoset r = add_reversed(c, {{3, 1}});
    CHECK(is_projective(r));
    CHECK(r.relations() == Pairs{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(add_reversed(c, {}) == c);
}

TEST_CASE("support trees trace the interval") {
    for (int n = 1; n <= 4; ++n) {
        const TamariLattice lat = tamari_lattice(n);
        for (const auto& ip : enumerate_ips(n)) {
            const auto [s, t] = ip_to_interval(ip);
            const auto sup = support_trees(ip);
            std::size_t direct = 0;
            for (const auto& x : lat.trees)
                if (tamari_leq(s, x) && tamari_leq(x, t)) ++direct;
            CHECK(sup.size() == direct);
            for (const auto& x : sup) {
                CHECK(tamari_leq(s, x));
                CHECK(tamari_leq(x, t));
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tamcy/noncrossing.hpp"

using namespace tamcy;

namespace {

using Edges = std::vector<std::pair<int, int>>;

IntervalPoset running_example() { return ip_closure(4, {{2, 3}, {3, 1}, {1, 4}}); }

const OrientedEdge& find_edge(const std::vector<OrientedEdge>& v, int a, int b) {
    for (const auto& e : v)
        if (e.a == a && e.b == b) return e;
    throw std::runtime_error("edge not found");
}

} // namespace

TEST_CASE("validation") {
    CHECK(validate_nc(2, {{1, 2}, {2, 3}}));
    std::string why;
    CHECK_FALSE(validate_nc(3, {{1, 3}, {2, 4}, {1, 2}}, &why)); // (1,3) x (2,4)
    CHECK_FALSE(why.empty());
    CHECK_FALSE(validate_nc(3, {{1, 2}, {2, 3}, {1, 3}}, &why)); // cycle, 4 isolated
    CHECK_FALSE(validate_nc(2, {{1, 2}}, &why));                        // too few
    CHECK_FALSE(validate_nc(2, {{1, 2}, {1, 2}}, &why));                // duplicate
    CHECK_THROWS_AS(NoncrossingTree(3, {{1, 3}, {2, 4}, {1, 2}}), validation_error);

    const long counts[] = {0, 1, 3, 12, 55, 273, 1428};
    for (int n = 1; n <= 6; ++n) CHECK(long(enumerate_nc(n).size()) == counts[n]);
}

TEST_CASE("cyclic walks") {
    CHECK(cyclic_walk(2, 5, 5) == std::vector<int>{2, 3, 4});
    CHECK(cyclic_walk(4, 2, 5) == std::vector<int>{4, 5, 1});
    CHECK(cyclic_walk(3, 3, 5).empty());
}

TEST_CASE("the two bijections on the running example") {
    const IntervalPoset ip = running_example();
    const NoncrossingTree p = psi(ip);
    const NoncrossingTree t = theta(ip);
    CHECK(p.edges() == Edges{{1, 4}, {1, 5}, {2, 3}, {2, 4}});
    CHECK(t.edges() == Edges{{1, 3}, {1, 4}, {2, 3}, {4, 5}});
    CHECK(psi_inv(p) == ip);
    CHECK(theta_inv(t) == ip);
    CHECK(planar_dual(p) == t);

    CHECK_THROWS_AS(psi(ip_closure(3, {{2, 3}, {2, 1}})), precondition_error);
}

TEST_CASE("edge statistics of the running example") {
    const NoncrossingTree p = psi(running_example());
    const auto oriented = orient(p);
    REQUIRE(oriented.size() == 4);

    const OrientedEdge& base = find_edge(oriented, 1, 5);
    CHECK(base.i_f == 4);
    CHECK(base.j_f == 5);
    CHECK(base.kind == EdgeKind::Rise);
    CHECK(base.forbidden);

    const OrientedEdge& inner = find_edge(oriented, 2, 3);
    CHECK(inner.i_f == 2);
    CHECK(inner.j_f == 3);

    std::map<std::pair<int, int>, int> expected{
        {{1, 4}, 1}, {{1, 5}, 4}, {{2, 3}, 2}, {{2, 4}, 3}};
    const auto labels = edge_labels(p);
    for (std::size_t i = 0; i < labels.size(); ++i)
        CHECK(labels[i] == expected.at(p.edges()[i]));
}

TEST_CASE("rotation") {
    const NoncrossingTree p = psi(running_example());
    CHECK(rotate(p).edges() == Edges{{1, 2}, {1, 3}, {3, 5}, {4, 5}});
    CHECK(rotate(rotate(p)).edges() == Edges{{1, 5}, {2, 4}, {2, 5}, {3, 4}});
    CHECK(rotate(NoncrossingTree(2, {{1, 2}, {2, 3}})).edges() == Edges{{1, 2}, {1, 3}});

    for (const auto& t : enumerate_nc(4)) {
        NoncrossingTree full = t;
        for (int i = 0; i <= 4; ++i) full = rotate(full);
        CHECK(full == t);
    }
}

TEST_CASE("duality squares to rotation and commutes with it") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_nc(n)) {
            CHECK(planar_dual(planar_dual(t)) == rotate(t));
            CHECK(planar_dual(rotate(t)) == rotate(planar_dual(t)));
        }
}

TEST_CASE("descent and forbidden-rise counts") {
    const NoncrossingTree path2(2, {{1, 2}, {2, 3}});
    CHECK(count_descents(path2) == 0);
    CHECK(count_forbidden_rises(path2) == 2);

    const NoncrossingTree star4(4, {{1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(count_descents(star4) == 0);
    CHECK(count_forbidden_rises(star4) == 1);

    // over one full turn every edge becomes forbidden exactly twice
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_nc(n)) {
            int total = 0;
            NoncrossingTree x = t;
            for (int i = 0; i <= n; ++i) {
                total += count_forbidden_rises(x);
                x = rotate(x);
            }
            CHECK(total == 2 * n);
        }
}

TEST_CASE("labels are a permutation") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_nc(n)) {
            auto l = edge_labels(t);
            std::sort(l.begin(), l.end());
            for (int i = 0; i < n; ++i) CHECK(l[i] == i + 1);
        }
}

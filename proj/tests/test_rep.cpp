#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "tamcy/rep.hpp"

using namespace tamcy;

namespace {

PosetPtr diamond_chain() {
    return std::make_shared<const FinitePoset>(FinitePoset::from_covers(
        {"a", "b", "c", "d", "e"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
}

} // namespace

TEST_CASE("projectives, injectives, simples") {
    const PosetPtr p = diamond_chain();
    CHECK(proj(p, 0).dim == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(proj(p, 1).dim == std::vector<int>{0, 1, 0, 1, 1});
    CHECK(proj(p, 4).dim == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(inj(p, 3).dim == std::vector<int>{1, 1, 1, 1, 0});
    CHECK(inj(p, 0).dim == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(simple(p, 2).dim == std::vector<int>{0, 0, 1, 0, 0});
    for (int x = 0; x < p->size(); ++x) {
        proj(p, x).validate();
        inj(p, x).validate();
        simple(p, x).validate();
    }
    CHECK(zero_rep(p).is_zero());
    CHECK_FALSE(proj(p, 0).is_zero());
}

TEST_CASE("direct sum and radical") {
    const PosetPtr p = diamond_chain();
    const Rep s = direct_sum(proj(p, 1), proj(p, 2));
    CHECK(s.dim == std::vector<int>{0, 1, 1, 2, 2});
    s.validate();

    CHECK(radical(proj(p, 0)).dim == std::vector<int>{0, 1, 1, 1, 1});
    radical(proj(p, 0)).validate();
    CHECK(radical(simple(p, 0)).is_zero());
    CHECK(radical(inj(p, 3)).dim == std::vector<int>{0, 1, 1, 1, 0});
}

TEST_CASE("hom dimensions detect the order") {
    const PosetPtr p = diamond_chain();
    for (int x = 0; x < p->size(); ++x)
        for (int y = 0; y < p->size(); ++y) {
            CHECK(hom_dim(proj(p, x), proj(p, y)) == (p->leq(y, x) ? 1 : 0));
            CHECK(hom_dim(inj(p, x), inj(p, y)) == (p->leq(y, x) ? 1 : 0));
            if (x != y) CHECK(hom_dim(simple(p, x), simple(p, y)) == 0);
        }
    CHECK(hom_dim(proj(p, 0), inj(p, 4)) == 1);
    CHECK(hom_dim(proj(p, 1), simple(p, 1)) == 1);
    CHECK(hom_dim(proj(p, 1), simple(p, 3)) == 0);
    CHECK(hom_dim(simple(p, 3), inj(p, 3)) == 1);

    // a rank-two endomorphism space: the sum of two copies of a simple
    const Rep two = direct_sum(simple(p, 2), simple(p, 2));
    CHECK(hom_dim(two, two) == 4);
}

TEST_CASE("interval modules over the rotation lattice") {
    const TamariLattice lat = tamari_lattice(2);
    // empty relation set = the full interval = projective at the minimum
    const Rep full = interval_module(lat, IntervalPoset(2, {}));
    CHECK(full.dim == std::vector<int>{1, 1});
    CHECK(iso_thin(full, proj(lat.poset, lat.poset->minimum())));

    // all-decreasing = the singleton at the minimum
    const Rep bottom = interval_module(lat, IntervalPoset(2, {{2, 1}}));
    CHECK(iso_thin(bottom, simple(lat.poset, lat.poset->minimum())));

    // all-increasing = the singleton at the maximum
    const Rep top = interval_module(lat, IntervalPoset(2, {{1, 2}}));
    CHECK(iso_thin(top, simple(lat.poset, lat.poset->maximum())));

    const TamariLattice lat3 = tamari_lattice(3);
    for (const auto& ip : enumerate_ips(3)) {
        const Rep m = interval_module(lat3, ip);
        m.validate();
        CHECK(hom_dim(m, m) == 1);
        const auto [s, t] = ip_to_interval(ip);
        long dim_total = 0;
        for (int d : m.dim) dim_total += d;
        CHECK(m.dim[lat3.index_of(s)] == 1);
        CHECK(m.dim[lat3.index_of(t)] == 1);
        long in_interval = 0;
        for (std::size_t i = 0; i < lat3.trees.size(); ++i)
            if (tamari_leq(s, lat3.trees[i]) && tamari_leq(lat3.trees[i], t)) ++in_interval;
        CHECK(dim_total == in_interval);
    }
}

TEST_CASE("thin isomorphism") {
    const PosetPtr p = diamond_chain();
    CHECK(iso_thin(proj(p, 1), proj(p, 1)));
    CHECK_FALSE(iso_thin(proj(p, 1), proj(p, 2)));
    // the constant module is both the projective at the bottom and the
    // injective at the top
    CHECK(iso_thin(proj(p, 0), inj(p, 4)));

    // same dimensions, different vanishing pattern: the interval {a, b}
    // against the sum of the two simples
    Rep seg{p, {1, 1, 0, 0, 0}, {}};
    seg.maps[{0, 1}] = RatMat::identity(1);
    seg.validate();
    CHECK_FALSE(iso_thin(seg, direct_sum(simple(p, 0), simple(p, 1))));

    Rep broken = proj(p, 0);
    broken.maps[{1, 3}] = RatMat(1, 1); // zero out one internal cover map
    CHECK_FALSE(iso_thin(broken, proj(p, 0)));

    CHECK_THROWS_AS(iso_thin(direct_sum(simple(p, 0), simple(p, 0)),
                             direct_sum(simple(p, 0), simple(p, 0))),
                    precondition_error);
}

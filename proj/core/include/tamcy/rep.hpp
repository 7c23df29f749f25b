#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tamcy/binary_tree.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/matrix.hpp"
#include "tamcy/poset.hpp"

namespace tamcy {

// Module over the incidence algebra of a finite poset: one vector space per
// element and one linear map per cover, going upward, such that all composite
// paths between two comparable elements agree.
struct Rep {
    PosetPtr poset;
    std::vector<int> dim;                      // per element index
    std::map<std::pair<int, int>, RatMat> maps; // cover (x, y) -> dim[y] x dim[x]

    // Cover map, materialized as a zero matrix when absent.
    RatMat cover_map(int x, int y) const;

    // Composite along any cover path from x up to y (identity when x == y).
    // Well defined once validate() has passed.
    RatMat composite(int x, int y) const;

    bool is_zero() const;
    const std::vector<int>& dim_vector() const { return dim; }

    // Checks shapes, and on posets with at most 50 elements also that every
    // pair of cover paths between two elements composes to the same map.
    void validate() const;
};

Rep zero_rep(PosetPtr p);

// Thin module on the principal up-set of x, identity maps inside the support.
Rep proj(PosetPtr p, int x);

// Thin module on the principal down-set of x.
Rep inj(PosetPtr p, int x);

Rep simple(PosetPtr p, int x);

Rep direct_sum(const Rep& a, const Rep& b);

// Largest submodule with zero top: at each element, the sum of the images of
// the incoming cover maps.
Rep radical(const Rep& m);

// Thin module supported on the trees of the interval described by ip,
// with identity maps inside the support.
Rep interval_module(const TamariLattice& lat, const IntervalPoset& ip);

// Dimension of the space of module homomorphisms a -> b, computed from the
// commuting-square linear system.
long hom_dim(const Rep& a, const Rep& b);

// Isomorphism test for thin modules (all dims <= 1): equal dimension vectors
// and the same vanishing pattern on in-support cover maps.  Any consistent
// nonzero pattern can be rescaled to identity maps along a spanning tree of
// the support, so the pattern determines the iso class.  Throws on non-thin
// input; compare dimension vectors directly for those.
bool iso_thin(const Rep& a, const Rep& b);

} // namespace tamcy

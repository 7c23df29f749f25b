#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tamcy/interval_poset.hpp"

namespace tamcy {

// Noncrossing spanning tree on n + 1 vertices arranged on a circle and
// labeled 1..n+1 clockwise.  Edges are stored as (a, b) with a < b, sorted
// lexicographically; the constructor validates.
class NoncrossingTree {
public:
    NoncrossingTree(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const NoncrossingTree&) const = default;

    std::string key() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// True iff the edges form a noncrossing spanning tree on {1..n+1}; when they
// do not and why is non-null, a short reason is stored there.
bool validate_nc(int n, const std::vector<std::pair<int, int>>& edges,
                 std::string* why = nullptr);

// All noncrossing trees of size n, ordered lexicographically by their sorted
// edge lists.
std::vector<NoncrossingTree> enumerate_nc(int n);

// Vertices from `from` walking clockwise (1 -> 2 -> ... -> m -> 1), stopping
// before to_excl.  Labels are 1..m.
std::vector<int> cyclic_walk(int from, int to_excl, int m);

enum class EdgeKind { Rise, Descent };

// Edge of a noncrossing tree together with its orientation toward n + 1 and
// its two boundary statistics: writing the edge as {a, b} with a < b,
//   i_f = last vertex of the walk a..b-1 still connected to a without f,
//   j_f = last vertex of the walk b..a-1 (wrapping) still connected to b.
struct OrientedEdge {
    int a = 0, b = 0; // a < b
    int child = 0, parent = 0;
    EdgeKind kind = EdgeKind::Rise;
    int i_f = 0, j_f = 0;
    bool forbidden = false; // rise whose j_f is n + 1
};

// One record per edge, in edge order.
std::vector<OrientedEdge> orient(const NoncrossingTree& t);

// Label of each edge (aligned with t.edges()): the cell of the complement on
// the far side from the base carries the label, which works out to i_f.
// The labels are a permutation of 1..n.
std::vector<int> edge_labels(const NoncrossingTree& t);

// Exceptional interval-posets <-> noncrossing trees, one edge per vertex:
// vertex v gives the edge [min D(v), max D(v) + 1] over its lower set D(v).
NoncrossingTree psi(const IntervalPoset& ip);
IntervalPoset psi_inv(const NoncrossingTree& t);

// Second bijection: one edge per Hasse cover after adjoining n + 1 on top of
// all maximal elements.
NoncrossingTree theta(const IntervalPoset& ip);
IntervalPoset theta_inv(const NoncrossingTree& t);

// Planar dual on the same circle: edge f becomes [i_f, j_f].
NoncrossingTree planar_dual(const NoncrossingTree& t);

// Relabel v -> v - 1 (1 -> n + 1): one rotation step of the circle.
NoncrossingTree rotate(const NoncrossingTree& t);

int count_descents(const NoncrossingTree& t);
int count_forbidden_rises(const NoncrossingTree& t);

} // namespace tamcy

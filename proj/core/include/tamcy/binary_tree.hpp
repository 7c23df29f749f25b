#pragma once

#include <bitset>
#include <string>
#include <utility>
#include <vector>

#include "tamcy/poset.hpp"

namespace tamcy {

// Planar binary tree with vertices labeled 1..n by in-order traversal, which
// makes the labeling a binary search tree and the representation canonical:
// equal shapes give equal arrays.  Index 0 / value 0 mean "absent".
struct BinaryTree {
    int n = 0;
    int root = 0;
    std::vector<int> left, right; // size n + 1, indexed by label

    bool operator==(const BinaryTree&) const = default;
};

// Compact canonical encoding, e.g. "[null,[null,null]]".
std::string tree_key(const BinaryTree& t);

// All trees with n internal vertices, ordered by ascending left-subtree size,
// recursively.  n = 0 is only allowed when include_empty is set.
std::vector<BinaryTree> enumerate_trees(int n, bool include_empty = false);

// Set of pairs (a, b) with 1 <= a < b <= 16, used for the relation bookkeeping
// of trees and interval-posets.
class PairSet {
public:
    void add(int a, int b) { bits_.set(bit(a, b)); }
    void remove(int a, int b) { bits_.reset(bit(a, b)); }
    bool contains(int a, int b) const { return bits_.test(bit(a, b)); }
    bool subset_of(const PairSet& o) const { return (bits_ & ~o.bits_).none(); }
    bool intersects(const PairSet& o) const { return (bits_ & o.bits_).any(); }
    bool empty() const { return bits_.none(); }
    std::size_t count() const { return bits_.count(); }
    bool operator==(const PairSet&) const = default;

    // Pairs in lexicographic order; needs the ambient n to iterate.
    std::vector<std::pair<int, int>> pairs(int n) const;

private:
    static int bit(int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }
    std::bitset<128> bits_;
};

// inc holds pairs (a, b), a < b, meaning a is in the subtree rooted at b with
// a smaller label; dec holds pairs (a, b), a < b, meaning b lies in the
// subtree rooted at a (the relation b before a in the natural order).
struct TreeRelations {
    int n = 0;
    PairSet inc, dec;
};

TreeRelations tree_relations(const BinaryTree& t);

// Lattice order: t1 <= t2 iff the decreasing relations of t2 are among those
// of t1.  Cross-checked against the increasing-relation formulation.
bool tamari_leq(const BinaryTree& t1, const BinaryTree& t2);

// Upper covers of t: one left rotation at each vertex that has a right child,
// listed by ascending rotation vertex.
std::vector<BinaryTree> rotation_covers(const BinaryTree& t);

struct TamariLattice {
    int n = 0;
    std::vector<BinaryTree> trees;        // enumeration order == poset index
    std::vector<TreeRelations> rels;      // aligned with trees
    PosetPtr poset;

    int index_of(const BinaryTree& t) const;
};

// Builds the full lattice for 1 <= n <= 8.  Construction cross-checks that
// the order's cover relations coincide with the rotation covers and that the
// extreme elements are the two combs.
TamariLattice tamari_lattice(int n);

} // namespace tamcy

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tamcy/binary_tree.hpp"

namespace tamcy {

// A poset on {1..n} whose relation set is transitively closed and satisfies
// the two interval conditions:
//   a < c and a before c   imply  b before c for all a < b < c,
//   a < c and c before a   imply  b before a for all a < b < c,
// writing "x before y" for the order relation x <| y.  Such posets are exactly
// the intervals of the rotation lattice.  Immutable value type.
class IntervalPoset {
public:
    // relations: pairs (a, b) meaning a <| b.  Must already be closed.
    IntervalPoset(int n, const std::vector<std::pair<int, int>>& relations);

    int n() const { return n_; }
    bool rel(int a, int b) const; // a <| b
    std::size_t relation_count() const { return inc_.count() + dec_.count(); }

    // All pairs (a, b) with a <| b, lexicographic.
    std::vector<std::pair<int, int>> relations() const;

    const PairSet& inc() const { return inc_; } // (a, b): a <| b, a < b
    const PairSet& dec() const { return dec_; } // (a, b): b <| a, a < b

    bool operator==(const IntervalPoset&) const = default;

    // Canonical string, usable as a sort/deduplication key.
    std::string key() const;

private:
    friend IntervalPoset ip_closure(int, const std::vector<std::pair<int, int>>&);
    struct raw_tag {};
    IntervalPoset(raw_tag, int n, PairSet inc, PairSet dec)
        : n_(n), inc_(inc), dec_(dec) {}

    int n_ = 0;
    PairSet inc_, dec_;
};

// Smallest interval-poset containing the given relations; throws
// validation_error when the closure forces both a <| b and b <| a.
IntervalPoset ip_closure(int n, const std::vector<std::pair<int, int>>& pairs);

// The interval [s, t] of the rotation order as an interval-poset: increasing
// relations of s plus decreasing relations of t.  Requires s <= t.
IntervalPoset interval_to_ip(const BinaryTree& s, const BinaryTree& t);

// Inverse of interval_to_ip.
std::pair<BinaryTree, BinaryTree> ip_to_interval(const IntervalPoset& ip);

// Cover relations of the interval-poset, split by direction.  Both lists
// store pairs (from, to) meaning from <| to; increasing covers have
// from < to, decreasing covers from > to.
struct HasseSplit {
    std::vector<std::pair<int, int>> increasing;
    std::vector<std::pair<int, int>> decreasing;
};

HasseSplit hasse_split(const IntervalPoset& ip);

// No vertex of the Hasse diagram has cover arrows to both a smaller and a
// larger vertex.
bool is_exceptional(const IntervalPoset& ip);

// Both endpoint trees coincide: for every a < b some z in [a, b] satisfies
// a <| z and b <| z (allowing z = a or z = b).
bool is_simple(const IntervalPoset& ip);

bool is_projective(const IntervalPoset& ip); // no decreasing relations
bool is_injective(const IntervalPoset& ip);  // no increasing relations

// For a projective interval-poset with increasing relations C, the injective
// one whose relations are
//   { j <| i : i < j and no i <| s lies in C for i < s <= j }.
IntervalPoset c_zero(const IntervalPoset& ip);

// Closure of C plus the reversals of the given decreasing pairs.  reversed
// takes pairs (j, i) with i < j (relations j <| i) and adds i <| j instead.
// The result is again projective; this cannot fail.
IntervalPoset add_reversed(const IntervalPoset& ip,
                           const std::vector<std::pair<int, int>>& reversed);

// Trees x whose increasing relations contain those of the interval-poset and
// avoid the reversals of its decreasing covers; equivalently, the trees lying
// in the interval [s, t] = ip_to_interval(ip).
std::vector<BinaryTree> support_trees(const IntervalPoset& ip);

std::vector<IntervalPoset> enumerate_ips(int n);
std::vector<IntervalPoset> enumerate_exceptional(int n);

} // namespace tamcy

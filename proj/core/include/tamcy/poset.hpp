#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tamcy/matrix.hpp"

namespace tamcy {

// Immutable finite poset over named elements.  Construction validates the
// order axioms; everything downstream may rely on them.
class FinitePoset {
public:
    // leq_pairs must be the full relation (reflexive, antisymmetric, transitive),
    // given as index pairs (a, b) meaning a <= b.
    static FinitePoset from_leq(std::vector<std::string> names,
                                const std::vector<std::pair<int, int>>& leq_pairs);

    // Convenience: generates the reflexive-transitive closure of the given
    // cover (or any generating) pairs, then validates antisymmetry.
    static FinitePoset from_covers(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& cover_pairs);

    int size() const { return int(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& name) const; // -1 if absent

    bool leq(int a, int b) const { return up_[a].test(b); }

    // Cover pairs (lower, upper), lexicographic by indices.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& covers_above(int x) const { return covers_above_[x]; }
    const std::vector<int>& covers_below(int x) const { return covers_below_[x]; }

    // All comparable pairs (a, b) with a <= b, lexicographic.
    std::vector<std::pair<int, int>> intervals() const;

    std::vector<int> up_set(int x) const;
    std::vector<int> down_set(int x) const;
    int down_set_size(int x) const { return int(down_[x].count()); }

    // Indices sorted so that a <= b implies a comes first.
    std::vector<int> linear_extension() const;

    // Unique minimum / maximum if present, else -1.
    int minimum() const;
    int maximum() const;

private:
    FinitePoset() = default;
    void finalize(); // covers, adjacency, validation of axioms

    std::vector<std::string> names_;
    std::vector<boost::dynamic_bitset<>> up_, down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> covers_above_, covers_below_;
    std::unordered_map<std::string, int> index_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

IntMatrix zeta_matrix(const FinitePoset& p);

// Inverse of the zeta matrix, computed by permuting to a linear extension and
// back-substituting through the resulting unitriangular matrix.  Integer-exact;
// no divisions occur.
IntMatrix mobius_matrix(const FinitePoset& p);

// C = -Z * (Z^-1)^t.
IntMatrix coxeter_matrix(const FinitePoset& p);

} // namespace tamcy

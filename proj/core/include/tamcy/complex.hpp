#pragma once

#include <map>
#include <vector>

#include "tamcy/interval_poset.hpp"
#include "tamcy/rep.hpp"

namespace tamcy {

enum class TermKind { Projective, Injective };

// Bounded complex whose degree-k term is a direct sum of thin modules, one
// per listed vertex (projectives on up-sets or injectives on down-sets), and
// whose differentials are scalar matrices in the canonical hom bases: the
// entry c at (i, j) stands for c times the canonical map from the j-th
// summand of degree k+1 to the i-th summand of degree k.  Such a map can be
// nonzero only when the target vertex is below the source vertex, and scalar
// matrices multiply exactly as the morphisms they name do.
struct VertexComplex {
    PosetPtr poset;
    TermKind kind = TermKind::Projective;
    std::vector<std::vector<int>> terms; // terms[k]: summand vertices in degree k
    std::vector<RatMat> diffs;           // diffs[k]: degree k+1 -> degree k

    int top_degree() const { return int(terms.size()) - 1; }

    // Shapes, the comparability pattern of nonzero entries, and d*d = 0.
    void validate() const;
};

// Same scalars, injective summands instead of projective ones.  The canonical
// embeddings between projectives turn into the canonical epimorphisms between
// the corresponding injectives.  Throws unless the input is projective.
VertexComplex nakayama(const VertexComplex& x);

// Projective resolution of the interval module of ip, indexed by the subsets
// of its decreasing Hasse covers J: in degree k, one summand for every
// k-subset R, placed at the minimum tree of the interval obtained by
// reversing R inside the increasing part.  The differential drops one element
// of R at a time with the simplex sign (-1)^position, J being ordered by
// (smaller endpoint, larger endpoint).
VertexComplex boolean_resolution(const TamariLattice& lat, const IntervalPoset& ip);

// Minimal projective resolution by iterated projective covers, tops chosen by
// completing the radical span with standard basis vectors (element order,
// then coordinate order).  Terminates within poset-size many steps.
VertexComplex min_proj_resolution(const Rep& m);

// The Serre functor on a module: nakayama of its minimal projective
// resolution, as a complex of injectives.
VertexComplex serre_module(const Rep& m);

// Complex of explicit representations with per-element differentials.
struct RepComplex {
    PosetPtr poset;
    std::vector<Rep> terms;
    std::vector<std::vector<RatMat>> diffs; // diffs[k][z]: terms[k+1] at z -> terms[k] at z

    int top_degree() const { return int(terms.size()) - 1; }

    // Terms, shapes, naturality of each differential, d*d = 0 per element.
    void validate() const;
};

// Materializes the summands and differentials of a vertex complex.
RepComplex expand(const VertexComplex& x);

// Homology in each degree, as representations on chosen subquotient bases;
// only degrees with a nonzero result appear in the map.
std::map<int, Rep> homology(const RepComplex& x);

// Repeated application of the Serre functor with shift bookkeeping: after
// each step the homology of the resulting injective complex is computed; as
// long as it sits in a single degree d the iteration continues with that
// module and adds d to the running shift.  Otherwise it stops and reports the
// graded pieces at their absolute degrees (local degree + shift so far).
struct SerreIterationReport {
    int steps_requested = 0;
    int steps_done = 0;
    bool halted = false;        // stopped early: homology spread over degrees
    long total_shift = 0;
    std::vector<int> step_degrees; // concentration degree of each completed step
    Rep module;                    // module after the last completed step
    std::map<int, Rep> graded;     // only populated when halted
};

SerreIterationReport serre_iterate(const Rep& m, int steps);

} // namespace tamcy

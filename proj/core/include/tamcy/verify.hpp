#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tamcy/complex.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/noncrossing.hpp"

namespace tamcy {

// One Serre step on the combinatorial side: carry the exceptional
// interval-poset through psi, take the planar dual, come back.  The returned
// shift is the number of decreasing Hasse covers of the input.
std::pair<IntervalPoset, int> serre_combinatorial(const IntervalPoset& ip);

struct SerreStep {
    IntervalPoset ip; // state after the step
    int shift = 0;    // decreasing Hasse covers of the predecessor
    long cumulative_shift = 0;
};

// A full orbit: exactly 2n+2 combinatorial Serre steps.
struct OrbitRecord {
    IntervalPoset start;
    std::vector<SerreStep> steps;
    bool closed = false; // the last step returns to start
    int period = 0;      // first return to start, 0 if none
    long total_shift = 0;
};

OrbitRecord serre_orbit(const IntervalPoset& ip);

struct VerificationReport {
    std::string campaign;
    int n = 0;
    long checked = 0;
    long projectives_checked = -1; // reported by the orbit campaign
    std::vector<nlohmann::json> failures;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
    nlohmann::json json() const;
};

// Round trips and identities of the two bijections, the planar duality, the
// cover/descent dictionary, and the catalog counts.  1 <= n <= 5.
VerificationReport verify_bijections(int n);

// Homological cross-check of the combinatorial Serre step: boolean and
// minimal resolutions agree with the dual-tree answer instance by instance.
// 1 <= n <= 4; n = 5 takes noticeably longer and sits behind `extended`.
VerificationReport verify_serre(int n, bool extended = false);

// Orbit campaign: every exceptional interval-poset returns to itself after
// 2n+2 combinatorial Serre steps with total shift n(n-1), double-checked
// against the forbidden-rise count over the rotation orbit.  1 <= n <= 6.
VerificationReport verify_cy(int n);

// Coxeter matrix of the rotation lattice: periodicity 2n+2, and for n <= 6
// every power stays within {-1,0,1} with column-wise constant signs.
// 1 <= n <= 8.
VerificationReport verify_coxeter(int n);

// Same periodicity check for an arbitrary finite poset.
VerificationReport verify_coxeter_generic(const FinitePoset& p, long power);

// Class identity in the Grothendieck group: a combinatorial Serre step acts
// on dimension vectors as (-1)^shift times Z (Z^-1)^t.  1 <= n <= 5.
VerificationReport verify_kclass(int n);

} // namespace tamcy

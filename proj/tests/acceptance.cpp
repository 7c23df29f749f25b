// Acceptance suite for the library.  Eight release criteria, each printed as
// a single [PASS]/[FAIL] line with its runtime and time budget.  The process
// exits 0 only when every criterion holds inside its budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "tamcy/binary_tree.hpp"
#include "tamcy/complex.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/json_io.hpp"
#include "tamcy/matrix.hpp"
#include "tamcy/noncrossing.hpp"
#include "tamcy/poset.hpp"
#include "tamcy/rep.hpp"
#include "tamcy/verify.hpp"

namespace {

int criteria_failed = 0;

void criterion(const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over budget";
    }
    if (!ok) ++criteria_failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    for (std::size_t i = name.size(); i < 34; ++i) std::cout << ' ';
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs (budget %gs)", secs, budget_s);
    std::cout << timing;
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n" << std::flush;
}

// C(3n, n) / (2n + 1): the number of noncrossing trees on n + 1 vertices.
long noncrossing_count(int n) {
    long num = 1, den = 1;
    for (int k = 1; k <= n; ++k) {
        num *= 3 * n - k + 1;
        den *= k;
    }
    return num / den / (2 * n + 1);
}

bool campaign_sweep(const std::function<tamcy::VerificationReport(int)>& run, int n_max,
                    std::string& detail) {
    for (int n = 1; n <= n_max; ++n) {
        const auto rep = run(n);
        if (!rep.passed()) {
            detail = rep.campaign + " n=" + std::to_string(n) + ": " +
                     std::to_string(rep.failures.size()) + " failure(s), first " +
                     rep.failures.front().dump();
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    using namespace tamcy;

    // 1. Catalog counts: rotation lattices carry the Catalan numbers, and the
    //    noncrossing-tree and exceptional catalogs agree with C(3n,n)/(2n+1).
    criterion("catalog counts", 60.0, [](std::string& detail) {
        const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
        for (int n = 1; n <= 8; ++n)
            if (long(enumerate_trees(n).size()) != catalan[n]) {
                detail = "tree count off at n=" + std::to_string(n);
                return false;
            }
        for (int n = 1; n <= 6; ++n) {
            const long want = noncrossing_count(n);
            if (long(enumerate_nc(n).size()) != want) {
                detail = "noncrossing count off at n=" + std::to_string(n);
                return false;
            }
            if (long(enumerate_exceptional(n).size()) != want) {
                detail = "exceptional catalog off at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    // 2. Bijection identities: round trips, the duality square, the rotation
    //    identities and the cover/descent dictionary, exhaustively for n <= 5.
    criterion("bijection identities", 120.0, [](std::string& detail) {
        return campaign_sweep(verify_bijections, 5, detail);
    });

    // 3. Golden example: the closure of {2<|3, 3<|1, 1<|4} and its two trees,
    //    pinned down to byte-exact canonical JSON.
    criterion("golden example", 10.0, [](std::string& detail) {
        const IntervalPoset ip = ip_closure(4, {{2, 3}, {3, 1}, {1, 4}});
        if (ip_json(ip).dump() !=
            R"({"n":4,"relations":[[1,4],[2,1],[2,3],[2,4],[3,1],[3,4]]})") {
            detail = "closure relations changed: " + ip_json(ip).dump();
            return false;
        }
        const NoncrossingTree source = psi(ip), target = theta(ip);
        if (nc_json(source).dump() != R"({"edges":[[1,4],[1,5],[2,3],[2,4]],"n":4})") {
            detail = "psi image changed: " + nc_json(source).dump();
            return false;
        }
        if (nc_json(target).dump() != R"({"edges":[[1,3],[1,4],[2,3],[4,5]],"n":4})") {
            detail = "theta image changed: " + nc_json(target).dump();
            return false;
        }
        if (!(planar_dual(source) == target)) {
            detail = "planar dual does not connect the two trees";
            return false;
        }
        if (!(psi_inv(source) == ip) || !(theta_inv(target) == ip)) {
            detail = "round trip broken";
            return false;
        }
        return true;
    });

    // 4. Homological Serre step: for every interval-poset with n <= 4 the
    //    boolean resolution has the right homology, and on exceptional ones the
    //    Nakayama image is the dual-tree interval module in degree |J|.
    criterion("homological serre step", 300.0, [](std::string& detail) {
        return campaign_sweep([](int n) { return verify_serre(n); }, 4, detail);
    });

    // 5. Orbits close: 2n+2 combinatorial Serre steps return every exceptional
    //    interval-poset to itself with total shift n(n-1), for n <= 6.
    criterion("serre orbits close", 180.0, [](std::string& detail) {
        return campaign_sweep(verify_cy, 6, detail);
    });

    // 6. Coxeter periodicity: C^{2n+2} = Id for n <= 8, with the entry and
    //    column-sign checks on every intermediate power for n <= 6.
    criterion("coxeter periodicity", 300.0, [](std::string& detail) {
        return campaign_sweep(verify_coxeter, 8, detail);
    });

    // 7. Five-element walkthrough: on the bowtie-with-tail poset the Serre
    //    iteration sends P_d to I_d, then to Rad(P_a) shifted by one, and halts
    //    at the third step with simples in adjacent degrees; C^8 = Id.
    criterion("five-element walkthrough", 1.0, [](std::string& detail) {
        const auto p = std::make_shared<const FinitePoset>(FinitePoset::from_covers(
            {"a", "b", "c", "d", "e"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
        const auto r1 = serre_iterate(proj(p, 3), 1);
        if (r1.halted || r1.total_shift != 0 || !iso_thin(r1.module, inj(p, 3))) {
            detail = "first step is not the injective at d";
            return false;
        }
        const auto r2 = serre_iterate(proj(p, 3), 2);
        if (r2.halted || r2.total_shift != 1 || !iso_thin(r2.module, radical(proj(p, 0)))) {
            detail = "second step is not Rad(P_a)[1]";
            return false;
        }
        const auto r3 = serre_iterate(proj(p, 3), 3);
        if (!r3.halted || r3.steps_done != 2 || r3.graded.size() != 2 ||
            !iso_thin(r3.graded.at(1), simple(p, 0)) ||
            !iso_thin(r3.graded.at(2), simple(p, 3))) {
            detail = "third step should halt with S_a and S_d in adjacent degrees";
            return false;
        }
        if (!verify_coxeter_generic(*p, 8).passed()) {
            detail = "C^8 != Id";
            return false;
        }
        return true;
    });

    // 8. Dimension-vector transport: one combinatorial Serre step acts on
    //    dimension vectors as (-1)^shift Z (Z^-1)^t, for every exceptional
    //    interval-poset with n <= 5.
    criterion("dimension-vector transport", 120.0, [](std::string& detail) {
        return campaign_sweep(verify_kclass, 5, detail);
    });

    if (criteria_failed == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << criteria_failed << " criteria FAILED\n";
    return 1;
}

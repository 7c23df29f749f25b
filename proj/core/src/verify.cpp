#include "tamcy/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <set>
#include <thread>

#include "tamcy/binary_tree.hpp"
#include "tamcy/errors.hpp"
#include "tamcy/json_io.hpp"
#include "tamcy/rep.hpp"

namespace tamcy {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs f over [0, count) on a small pool and concatenates the failure lists
// in instance order, so reports stay deterministic and diffable.
template <typename F>
std::vector<json> fan_out(std::size_t count, F&& f) {
    std::vector<std::vector<json>> slots(count);
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> cursor{0};
    std::vector<std::future<void>> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1))
                slots[i] = f(i);
        }));
    for (auto& fut : pool) fut.get();
    std::vector<json> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<IntervalPoset> sorted_by_key(std::vector<IntervalPoset> v) {
    std::sort(v.begin(), v.end(), [](const IntervalPoset& a, const IntervalPoset& b) {
        return a.key() < b.key();
    });
    return v;
}

json ip_failure(const IntervalPoset& ip, const std::string& check) {
    const auto [s, t] = ip_to_interval(ip);
    return json{{"check", check},
                {"ip", ip_json(ip)},
                {"lower_tree", tree_key(s)},
                {"upper_tree", tree_key(t)}};
}

bool thin(const Rep& r) {
    for (int d : r.dim)
        if (d > 1) return false;
    return true;
}

constexpr long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430}; // index n
constexpr long kNoncrossing[] = {0, 1, 3, 12, 55, 273, 1428};     // index n
constexpr long kIntervalCount[] = {0, 1, 3, 13, 68, 399, 2530};   // index n

std::vector<Int> int_dims(const std::vector<int>& dims) {
    return std::vector<Int>(dims.begin(), dims.end());
}

std::vector<Int> apply_int(const IntMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

} // namespace

nlohmann::json VerificationReport::json() const {
    nlohmann::json j{{"campaign", campaign},
                     {"n", n},
                     {"checked", checked},
                     {"failures", failures},
                     {"seconds", seconds}};
    if (projectives_checked >= 0) j["projectives_checked"] = projectives_checked;
    return j;
}

std::pair<IntervalPoset, int> serre_combinatorial(const IntervalPoset& ip) {
    if (!is_exceptional(ip))
        throw precondition_error("serre step needs an exceptional interval-poset");
    const int shift = int(hasse_split(ip).decreasing.size());
    return {psi_inv(planar_dual(psi(ip))), shift};
}

OrbitRecord serre_orbit(const IntervalPoset& ip) {
    OrbitRecord rec{ip, {}, false, 0, 0};
    IntervalPoset cur = ip;
    long cum = 0;
    const int total = 2 * ip.n() + 2;
    for (int s = 1; s <= total; ++s) {
        auto [next, shift] = serre_combinatorial(cur);
        cum += shift;
        cur = next;
        rec.steps.push_back({cur, shift, cum});
        if (rec.period == 0 && cur == ip) rec.period = s;
    }
    rec.closed = cur == ip;
    rec.total_shift = cum;
    return rec;
}

VerificationReport verify_bijections(int n) {
    if (n < 1 || n > 5)
        throw precondition_error("the bijection campaign runs for 1 <= n <= 5");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "bijections";
    rep.n = n;

    const TamariLattice lat = tamari_lattice(n);
    const std::vector<IntervalPoset> ips = sorted_by_key(enumerate_ips(n));
    const std::vector<NoncrossingTree> ncs = enumerate_nc(n);

    long exceptional = 0;
    for (const auto& ip : ips)
        if (is_exceptional(ip)) ++exceptional;
    if (long(ips.size()) != kIntervalCount[n] ||
        ips.size() != lat.poset->intervals().size())
        rep.failures.push_back({{"check", "interval count"},
                                {"expected", kIntervalCount[n]},
                                {"got", ips.size()},
                                {"lattice_intervals", lat.poset->intervals().size()}});
    if (exceptional != kNoncrossing[n] || long(ncs.size()) != kNoncrossing[n])
        rep.failures.push_back({{"check", "noncrossing count"},
                                {"expected", kNoncrossing[n]},
                                {"exceptional", exceptional},
                                {"trees", ncs.size()}});
    if (long(lat.trees.size()) != kCatalan[n])
        rep.failures.push_back(
            {{"check", "tree count"}, {"expected", kCatalan[n]}, {"got", lat.trees.size()}});

    auto ip_fails = fan_out(ips.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const IntervalPoset& ip = ips[idx];
        const auto [s, t] = ip_to_interval(ip);
        if (!tamari_leq(s, t)) bad.push_back(ip_failure(ip, "interval endpoints in order"));
        if (!(interval_to_ip(s, t) == ip)) bad.push_back(ip_failure(ip, "interval round trip"));
        if ((is_projective(ip) && is_injective(ip)) != (ip.relation_count() == 0))
            bad.push_back(ip_failure(ip, "projective and injective means empty relation"));
        if (is_simple(ip) != (s == t))
            bad.push_back(ip_failure(ip, "simple means singleton interval"));
        if ((is_projective(ip) || is_injective(ip) || is_simple(ip)) && !is_exceptional(ip))
            bad.push_back(ip_failure(ip, "projectives, injectives and simples are exceptional"));
        if (!is_exceptional(ip)) return bad;

        const NoncrossingTree tp = psi(ip);
        const NoncrossingTree tt = theta(ip);
        if (!(psi_inv(tp) == ip)) bad.push_back(ip_failure(ip, "psi round trip"));
        if (!(theta_inv(tt) == ip)) bad.push_back(ip_failure(ip, "theta round trip"));
        if (!(planar_dual(tp) == tt)) bad.push_back(ip_failure(ip, "dual of psi equals theta"));
        const HasseSplit h = hasse_split(ip);
        if (count_descents(tt) != int(h.decreasing.size()))
            bad.push_back(ip_failure(ip, "theta descents count the decreasing covers"));

        // Dictionary between the edges of psi(ip) and the Hasse diagram:
        // descents give the increasing covers, plain rises the decreasing
        // ones, forbidden rises the maximal elements, all via (i_f, j_f).
        const std::set<std::pair<int, int>> inc_cov(h.increasing.begin(), h.increasing.end());
        const std::set<std::pair<int, int>> dec_cov(h.decreasing.begin(), h.decreasing.end());
        std::set<int> maximal;
        for (int v = 1; v <= n; ++v) {
            bool has_out = false;
            for (int y = 1; y <= n && !has_out; ++y) has_out = y != v && ip.rel(v, y);
            if (!has_out) maximal.insert(v);
        }
        std::set<std::pair<int, int>> descents, rises;
        std::set<int> forbidden;
        const std::vector<int> labels = edge_labels(tp);
        const std::vector<OrientedEdge> oriented = orient(tp);
        for (std::size_t e = 0; e < oriented.size(); ++e) {
            const OrientedEdge& oe = oriented[e];
            if (labels[e] != oe.i_f) bad.push_back(ip_failure(ip, "edge label equals i_f"));
            if (oe.kind == EdgeKind::Descent) descents.insert({oe.i_f, oe.j_f});
            else if (oe.forbidden) forbidden.insert(oe.i_f);
            else rises.insert({oe.i_f, oe.j_f});
        }
        if (descents != inc_cov)
            bad.push_back(ip_failure(ip, "descents match the increasing covers"));
        if (rises != dec_cov)
            bad.push_back(ip_failure(ip, "plain rises match the decreasing covers"));
        if (forbidden != maximal)
            bad.push_back(ip_failure(ip, "forbidden rises match the maximal elements"));
        return bad;
    });
    rep.failures.insert(rep.failures.end(), ip_fails.begin(), ip_fails.end());
    rep.checked += long(ips.size());

    auto nc_fails = fan_out(ncs.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const NoncrossingTree& t = ncs[idx];
        auto tree_failure = [&](const std::string& check) {
            return json{{"check", check}, {"tree", nc_json(t)}};
        };
        if (!(psi(psi_inv(t)) == t)) bad.push_back(tree_failure("psi onto the trees"));
        if (!(theta(theta_inv(t)) == t)) bad.push_back(tree_failure("theta onto the trees"));
        const NoncrossingTree d = planar_dual(t);
        if (!(planar_dual(d) == rotate(t)))
            bad.push_back(tree_failure("double dual is one rotation"));
        if (!(planar_dual(rotate(t)) == rotate(d)))
            bad.push_back(tree_failure("dual commutes with rotation"));
        NoncrossingTree full = t;
        for (int i = 0; i <= n; ++i) full = rotate(full);
        if (!(full == t)) bad.push_back(tree_failure("a full turn is the identity"));
        std::vector<int> labels = edge_labels(t);
        std::sort(labels.begin(), labels.end());
        for (int i = 0; i < n; ++i)
            if (labels[i] != i + 1) {
                bad.push_back(tree_failure("labels form a permutation"));
                break;
            }
        long forbidden = 0;
        NoncrossingTree x = t;
        for (int i = 0; i <= n; ++i) {
            forbidden += count_forbidden_rises(x);
            x = rotate(x);
        }
        if (forbidden != 2L * n)
            bad.push_back(tree_failure("every edge turns forbidden exactly twice"));
        return bad;
    });
    rep.failures.insert(rep.failures.end(), nc_fails.begin(), nc_fails.end());
    rep.checked += long(ncs.size());

    auto tree_fails = fan_out(lat.trees.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const IntervalPoset c(n, lat.rels[idx].inc.pairs(n));
        const IntervalPoset z = c_zero(c);
        const IntervalPoset single = interval_to_ip(lat.trees[idx], lat.trees[idx]);
        if (!is_injective(z) || !(z.dec() == single.dec()))
            bad.push_back({{"check", "c_zero matches the singleton interval"},
                           {"tree", tree_key(lat.trees[idx])}});
        return bad;
    });
    rep.failures.insert(rep.failures.end(), tree_fails.begin(), tree_fails.end());
    rep.checked += long(lat.trees.size());

    if (n <= 4) {
        // Hom spaces between the projectives detect the lattice order.
        const std::size_t m = lat.trees.size();
        auto hom_fails = fan_out(m * m, [&](std::size_t idx) {
            std::vector<json> bad;
            const std::size_t i = idx / m, j = idx % m;
            const IntervalPoset c1(n, lat.rels[i].inc.pairs(n));
            const IntervalPoset c2(n, lat.rels[j].inc.pairs(n));
            const long expected = lat.rels[j].inc.subset_of(lat.rels[i].inc) ? 1 : 0;
            if (hom_dim(interval_module(lat, c1), interval_module(lat, c2)) != expected)
                bad.push_back({{"check", "hom dimension between projectives"},
                               {"from", tree_key(lat.trees[i])},
                               {"to", tree_key(lat.trees[j])}});
            return bad;
        });
        rep.failures.insert(rep.failures.end(), hom_fails.begin(), hom_fails.end());
        rep.checked += long(m * m);
    }

    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_serre(int n, bool extended) {
    if (n < 1 || n > 5 || (n == 5 && !extended))
        throw precondition_error(
            "the serre campaign runs for 1 <= n <= 4; n = 5 needs the extended flag");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "serre";
    rep.n = n;

    const TamariLattice lat = tamari_lattice(n);
    const IntMatrix phi = coxeter_matrix(*lat.poset).negated();
    const std::vector<IntervalPoset> ips = sorted_by_key(enumerate_ips(n));

    auto fails = fan_out(ips.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const IntervalPoset& ip = ips[idx];
        const Rep m = interval_module(lat, ip);
        const VertexComplex boolres = boolean_resolution(lat, ip);
        json summands = json::array();
        for (const auto& level : boolres.terms) summands.push_back(level.size());
        auto fail = [&](const std::string& check, const std::map<int, Rep>& graded) {
            json f = ip_failure(ip, check);
            f["resolution_summands"] = summands;
            json g = json::object();
            for (const auto& [d, mod] : graded) g[std::to_string(d)] = mod.dim_vector();
            f["graded_dims"] = g;
            bad.push_back(std::move(f));
        };
        const std::map<int, Rep> none;

        const auto h0 = homology(expand(boolres));
        if (h0.size() != 1 || h0.count(0) == 0 || !thin(h0.at(0)) || !iso_thin(h0.at(0), m))
            fail("boolean complex resolves the interval module", h0);

        const auto sh = homology(expand(serre_module(m)));
        std::vector<Int> euler(lat.poset->size(), 0);
        for (const auto& [d, mod] : sh)
            for (int z = 0; z < lat.poset->size(); ++z)
                euler[z] += (d % 2 == 0 ? 1 : -1) * Int(mod.dim[z]);
        if (euler != apply_int(phi, int_dims(m.dim)))
            fail("graded Euler class matches the Coxeter image", sh);

        if (is_exceptional(ip)) {
            const auto [next, shift] = serre_combinatorial(ip);
            const Rep expected = interval_module(lat, next);
            if (shift != int(hasse_split(ip).decreasing.size()))
                fail("shift counts the decreasing covers", none);
            const auto hb = homology(expand(nakayama(boolres)));
            if (hb.size() != 1 || hb.count(shift) == 0 || !thin(hb.at(shift)) ||
                !iso_thin(hb.at(shift), expected))
                fail("boolean route lands on the dual-tree module", hb);
            if (sh.size() != 1 || sh.count(shift) == 0 || !thin(sh.at(shift)) ||
                !iso_thin(sh.at(shift), expected))
                fail("minimal route lands on the dual-tree module", sh);
        }
        return bad;
    });
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
    rep.checked = long(ips.size());
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_cy(int n) {
    if (n < 1 || n > 6)
        throw precondition_error("the orbit campaign runs for 1 <= n <= 6");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "cy";
    rep.n = n;

    const std::vector<IntervalPoset> exc = sorted_by_key(enumerate_exceptional(n));
    long projectives = 0;
    for (const auto& ip : exc)
        if (is_projective(ip)) ++projectives;
    rep.projectives_checked = projectives;
    // The reduction to exceptional objects needs at least the projectives in
    // the pool; their count is one per tree.
    if (projectives != kCatalan[n])
        rep.failures.push_back({{"check", "projectives among the checked instances"},
                                {"expected", kCatalan[n]},
                                {"got", projectives}});

    const long want = long(n) * (n - 1);
    auto fails = fan_out(exc.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const IntervalPoset& ip = exc[idx];
        const OrbitRecord orb = serre_orbit(ip);
        if (!orb.closed) bad.push_back(ip_failure(ip, "orbit closes after 2n+2 steps"));
        if (orb.total_shift != want) {
            json f = ip_failure(ip, "orbit shift equals n(n-1)");
            f["total_shift"] = orb.total_shift;
            bad.push_back(std::move(f));
        }
        if (orb.period == 0 || (2 * n + 2) % orb.period != 0) {
            bad.push_back(ip_failure(ip, "period divides 2n+2"));
        } else if (orb.steps[orb.period - 1].cumulative_shift * ((2 * n + 2) / orb.period) !=
                   want) {
            bad.push_back(ip_failure(ip, "periodic shift scales to n(n-1)"));
        }
        const IntervalPoset* prev = &ip;
        for (const SerreStep& st : orb.steps) {
            if (st.shift != count_descents(theta(*prev))) {
                bad.push_back(ip_failure(ip, "step shift equals theta descent count"));
                break;
            }
            prev = &st.ip;
        }
        if (!(psi(orb.steps[1].ip) == rotate(psi(ip))))
            bad.push_back(ip_failure(ip, "two steps rotate the tree"));
        long forbidden = 0;
        NoncrossingTree x = psi(ip);
        for (int i = 0; i <= n; ++i) {
            forbidden += count_forbidden_rises(x);
            x = rotate(x);
        }
        if (long(n) * (n + 1) - forbidden != want)
            bad.push_back(ip_failure(ip, "forbidden-rise bookkeeping"));
        return bad;
    });
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
    rep.checked = long(exc.size());
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_coxeter(int n) {
    if (n < 1 || n > 8)
        throw precondition_error("the coxeter campaign runs for 1 <= n <= 8");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "coxeter";
    rep.n = n;

    const TamariLattice lat = tamari_lattice(n);
    const IntMatrix c = coxeter_matrix(*lat.poset);
    ++rep.checked;
    if (!matrix_power_is_identity(c, 2 * n + 2))
        rep.failures.push_back(
            {{"check", "coxeter power is the identity"}, {"power", 2 * n + 2}});
    if (n <= 6) {
        IntMatrix power = IntMatrix::identity(c.rows());
        for (int k = 1; k <= 2 * n + 2; ++k) {
            power = power * c;
            ++rep.checked;
            if (!entries_within_one(power))
                rep.failures.push_back(
                    {{"check", "power entries stay within one"}, {"power", k}});
            if (!column_signs_consistent(power))
                rep.failures.push_back(
                    {{"check", "power columns keep one sign"}, {"power", k}});
        }
        if (!power.is_identity())
            rep.failures.push_back({{"check", "iterated product returns to the identity"}});
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_coxeter_generic(const FinitePoset& p, long power) {
    if (power < 1) throw precondition_error("the power must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "coxeter-generic";
    rep.n = p.size();
    const IntMatrix c = coxeter_matrix(p);
    rep.checked = 1;
    if (!matrix_power_is_identity(c, power))
        rep.failures.push_back({{"check", "coxeter power is the identity"},
                                {"power", power},
                                {"elements", p.size()}});
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_kclass(int n) {
    if (n < 1 || n > 5)
        throw precondition_error("the class campaign runs for 1 <= n <= 5");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.campaign = "kclass";
    rep.n = n;

    const TamariLattice lat = tamari_lattice(n);
    const IntMatrix phi = coxeter_matrix(*lat.poset).negated();
    for (int x = 0; x < lat.poset->size(); ++x) {
        ++rep.checked;
        if (apply_int(phi, int_dims(proj(lat.poset, x).dim)) != int_dims(inj(lat.poset, x).dim))
            rep.failures.push_back({{"check", "projective class maps to injective class"},
                                    {"element", lat.poset->name(x)}});
    }

    const std::vector<IntervalPoset> exc = sorted_by_key(enumerate_exceptional(n));
    auto fails = fan_out(exc.size(), [&](std::size_t idx) {
        std::vector<json> bad;
        const IntervalPoset& ip = exc[idx];
        const auto [next, shift] = serre_combinatorial(ip);
        std::vector<Int> lhs = int_dims(interval_module(lat, next).dim);
        if (shift % 2 == 1)
            for (Int& v : lhs) v = -v;
        if (lhs != apply_int(phi, int_dims(interval_module(lat, ip).dim)))
            bad.push_back(ip_failure(ip, "signed class equals the Coxeter image"));
        return bad;
    });
    rep.failures.insert(rep.failures.end(), fails.begin(), fails.end());
    rep.checked += long(exc.size());
    rep.seconds = seconds_since(t0);
    return rep;
}

} // namespace tamcy

#include "tamcy/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tamcy {

namespace {

bool edges_cross(std::pair<int, int> e, std::pair<int, int> f) {
    auto [a, b] = e;
    auto [c, d] = f;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int m) : p(m + 1) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

bool validate_nc(int n, const std::vector<std::pair<int, int>>& edges, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (n < 1) return fail("size must be at least 1");
    if (int(edges.size()) != n) return fail("a spanning tree needs exactly n edges");
    for (auto [a, b] : edges)
        if (a < 1 || b < 1 || a > n + 1 || b > n + 1 || a >= b)
            return fail("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") is not a pair 1 <= a < b <= n + 1");
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i] == edges[j]) return fail("duplicate edge");
            if (edges_cross(edges[i], edges[j]))
                return fail("edges (" + std::to_string(edges[i].first) + ", " +
                            std::to_string(edges[i].second) + ") and (" +
                            std::to_string(edges[j].first) + ", " +
                            std::to_string(edges[j].second) + ") cross");
        }
    UnionFind uf(n + 1);
    for (auto [a, b] : edges)
        if (!uf.unite(a, b)) return fail("edges contain a cycle");
    return true;
}

NoncrossingTree::NoncrossingTree(int n, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    std::string why;
    if (!validate_nc(n, edges, &why)) throw validation_error("not a noncrossing tree: " + why);
    n_ = n;
    edges_ = std::move(edges);
}

std::string NoncrossingTree::key() const {
    std::string s = std::to_string(n_) + ":";
    bool first = true;
    for (auto [a, b] : edges_) {
        if (!first) s += ';';
        first = false;
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s;
}

std::vector<NoncrossingTree> enumerate_nc(int n) {
    if (n < 1 || n > 6) throw precondition_error("noncrossing enumeration supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= n + 1; ++a)
        for (int b = a + 1; b <= n + 1; ++b) all.emplace_back(a, b);
    std::vector<NoncrossingTree> out;
    std::vector<std::pair<int, int>> chosen;
    // lexicographic backtracking over the candidate list
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (int(chosen.size()) == n) {
            UnionFind uf(n + 1);
            int comps = n + 1;
            for (auto [a, b] : chosen)
                if (uf.unite(a, b)) --comps;
            if (comps == 1) out.emplace_back(n, chosen);
            return;
        }
        if (from >= all.size()) return;
        if (all.size() - from < n - chosen.size()) return;
        // include all[from] if it stays acyclic and noncrossing
        bool ok = true;
        for (auto e : chosen)
            if (edges_cross(e, all[from])) { ok = false; break; }
        if (ok) {
            UnionFind uf(n + 1);
            for (auto [a, b] : chosen) uf.unite(a, b);
            if (uf.unite(all[from].first, all[from].second)) {
                chosen.push_back(all[from]);
                rec(from + 1);
                chosen.pop_back();
            }
        }
        rec(from + 1);
    };
    rec(0);
    return out;
}

std::vector<int> cyclic_walk(int from, int to_excl, int m) {
    std::vector<int> out;
    int v = from;
    while (v != to_excl) {
        out.push_back(v);
        v = v % m + 1;
    }
    return out;
}

namespace {

std::vector<std::vector<int>> adjacency(const NoncrossingTree& t,
                                        std::pair<int, int> skip = {0, 0}) {
    std::vector<std::vector<int>> adj(t.n() + 2);
    for (auto [a, b] : t.edges()) {
        if (std::pair{a, b} == skip) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<bool> component_of(const NoncrossingTree& t, std::pair<int, int> skip, int start) {
    auto adj = adjacency(t, skip);
    std::vector<bool> seen(t.n() + 2, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

} // namespace

std::vector<OrientedEdge> orient(const NoncrossingTree& t) {
    const int top = t.n() + 1;
    auto adj = adjacency(t);
    std::vector<int> parent(top + 1, 0);
    std::vector<int> order{top};
    parent[top] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (!parent[w]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    std::vector<OrientedEdge> out;
    out.reserve(t.edges().size());
    for (auto [a, b] : t.edges()) {
        OrientedEdge e;
        e.a = a;
        e.b = b;
        if (parent[a] == b) {
            e.child = a;
            e.parent = b;
        } else {
            e.child = b;
            e.parent = a;
        }
        e.kind = e.child < e.parent ? EdgeKind::Rise : EdgeKind::Descent;
        std::vector<bool> comp_a = component_of(t, {a, b}, a);
        for (int v : cyclic_walk(a, b, top))
            if (comp_a[v]) e.i_f = v;
        std::vector<bool> comp_b = component_of(t, {a, b}, b);
        for (int v : cyclic_walk(b, a, top))
            if (comp_b[v]) e.j_f = v;
        e.forbidden = e.kind == EdgeKind::Rise && e.j_f == top;
        out.push_back(e);
    }
    return out;
}

std::vector<int> edge_labels(const NoncrossingTree& t) {
    std::vector<int> labels;
    labels.reserve(t.edges().size());
    for (const OrientedEdge& e : orient(t)) labels.push_back(e.i_f);
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 1; v <= t.n(); ++v)
        if (sorted[v - 1] != v) throw error("edge labels failed to be a permutation");
    return labels;
}

NoncrossingTree psi(const IntervalPoset& ip) {
    if (!is_exceptional(ip)) throw precondition_error("tree bijections need an exceptional input");
    const int n = ip.n();
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v) {
        int lo = v, hi = v;
        for (int x = 1; x <= n; ++x)
            if (ip.rel(x, v)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        edges.emplace_back(lo, hi + 1);
    }
    return NoncrossingTree(n, std::move(edges));
}

IntervalPoset psi_inv(const NoncrossingTree& t) {
    std::vector<int> labels = edge_labels(t);
    const auto& edges = t.edges();
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            // edge i strictly inside the span of edge j separates it from the base
            if (edges[j].first <= edges[i].first && edges[i].second <= edges[j].second)
                rel.emplace_back(labels[i], labels[j]);
        }
    IntervalPoset ip(t.n(), rel);
    if (!is_exceptional(ip)) throw error("separation relations were not exceptional");
    return ip;
}

NoncrossingTree theta(const IntervalPoset& ip) {
    if (!is_exceptional(ip)) throw precondition_error("tree bijections need an exceptional input");
    const int n = ip.n();
    HasseSplit h = hasse_split(ip);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : h.increasing) edges.emplace_back(a, b);
    for (auto [a, b] : h.decreasing) edges.emplace_back(b, a);
    for (int v = 1; v <= n; ++v) {
        bool maximal = true;
        for (int w = 1; w <= n && maximal; ++w)
            if (ip.rel(v, w)) maximal = false;
        if (maximal) edges.emplace_back(v, n + 1);
    }
    return NoncrossingTree(n, std::move(edges));
}

IntervalPoset theta_inv(const NoncrossingTree& t) {
    const int top = t.n() + 1;
    std::vector<std::pair<int, int>> pairs;
    for (const OrientedEdge& e : orient(t))
        if (e.parent != top) pairs.emplace_back(e.child, e.parent);
    IntervalPoset ip = ip_closure(t.n(), pairs);
    if (!is_exceptional(ip)) throw error("oriented covers were not exceptional");
    return ip;
}

NoncrossingTree planar_dual(const NoncrossingTree& t) {
    std::vector<std::pair<int, int>> edges;
    for (const OrientedEdge& e : orient(t))
        edges.emplace_back(std::min(e.i_f, e.j_f), std::max(e.i_f, e.j_f));
    return NoncrossingTree(t.n(), std::move(edges));
}

NoncrossingTree rotate(const NoncrossingTree& t) {
    const int top = t.n() + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : t.edges()) {
        int ra = a == 1 ? top : a - 1;
        int rb = b == 1 ? top : b - 1;
        edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    return NoncrossingTree(t.n(), std::move(edges));
}

int count_descents(const NoncrossingTree& t) {
    int c = 0;
    for (const OrientedEdge& e : orient(t))
        if (e.kind == EdgeKind::Descent) ++c;
    return c;
}

int count_forbidden_rises(const NoncrossingTree& t) {
    int c = 0;
    for (const OrientedEdge& e : orient(t))
        if (e.forbidden) ++c;
    return c;
}

} // namespace tamcy

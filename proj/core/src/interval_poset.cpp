#include "tamcy/interval_poset.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace tamcy {

namespace {

constexpr int kMaxN = 16;

struct RelTable {
    int n;
    // rel[a][b] == a <| b, 1-indexed
    std::array<std::array<bool, kMaxN + 1>, kMaxN + 1> rel{};

    void require_consistent(int a, int b) const {
        if (rel[a][b] && rel[b][a])
            throw validation_error("closure forces both " + std::to_string(a) + " and " +
                                   std::to_string(b) + " below each other");
    }
};

// Fixpoint of transitivity and the two interval conditions.
RelTable close(int n, const std::vector<std::pair<int, int>>& pairs) {
    RelTable t{};
    t.n = n;
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n || a == b)
            throw validation_error("relation (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") out of range");
        t.rel[a][b] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (!t.rel[a][b]) continue;
                for (int c = 1; c <= n; ++c)
                    if (t.rel[b][c] && a != c && !t.rel[a][c]) {
                        t.rel[a][c] = true;
                        changed = true;
                    }
                if (a < b) {
                    for (int x = a + 1; x < b; ++x)
                        if (!t.rel[x][b]) {
                            t.rel[x][b] = true;
                            changed = true;
                        }
                } else {
                    for (int x = b + 1; x < a; ++x)
                        if (!t.rel[x][b]) {
                            t.rel[x][b] = true;
                            changed = true;
                        }
                }
            }
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) t.require_consistent(a, b);
    return t;
}

void split_masks(const RelTable& t, PairSet& inc, PairSet& dec) {
    for (int a = 1; a <= t.n; ++a)
        for (int b = a + 1; b <= t.n; ++b) {
            if (t.rel[a][b]) inc.add(a, b);
            if (t.rel[b][a]) dec.add(a, b);
        }
}

} // namespace

IntervalPoset::IntervalPoset(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 1 || n > kMaxN)
        throw precondition_error("interval-posets need 1 <= n <= 16");
    n_ = n;
    RelTable closed = close(n, relations);
    PairSet inc, dec;
    split_masks(closed, inc, dec);
    PairSet in_inc, in_dec;
    for (auto [a, b] : relations)
        a < b ? in_inc.add(a, b) : in_dec.add(b, a);
    if (!(in_inc == inc) || !(in_dec == dec))
        throw validation_error("relation set is not closed");
    inc_ = inc;
    dec_ = dec;
}

IntervalPoset ip_closure(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1 || n > kMaxN)
        throw precondition_error("interval-posets need 1 <= n <= 16");
    RelTable closed = close(n, pairs);
    PairSet inc, dec;
    split_masks(closed, inc, dec);
    return IntervalPoset(IntervalPoset::raw_tag{}, n, inc, dec);
}

bool IntervalPoset::rel(int a, int b) const {
    if (a == b) return false;
    return a < b ? inc_.contains(a, b) : dec_.contains(b, a);
}

std::vector<std::pair<int, int>> IntervalPoset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (rel(a, b)) out.emplace_back(a, b);
    return out;
}

std::string IntervalPoset::key() const {
    std::string s = std::to_string(n_) + ":";
    bool first = true;
    for (auto [a, b] : relations()) {
        if (!first) s += ';';
        first = false;
        s += std::to_string(a) + "<" + std::to_string(b);
    }
    return s;
}

IntervalPoset interval_to_ip(const BinaryTree& s, const BinaryTree& t) {
    if (!tamari_leq(s, t)) throw precondition_error("interval endpoints out of order");
    TreeRelations rs = tree_relations(s), rt = tree_relations(t);
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : rs.inc.pairs(s.n)) pairs.emplace_back(a, b);
    for (auto [a, b] : rt.dec.pairs(t.n)) pairs.emplace_back(b, a);
    return IntervalPoset(s.n, pairs);
}

namespace {

// Forest of one directional part: parent[v] = unique cover of v, or 0.
struct Forest {
    std::vector<int> parent;             // size n + 1
    std::vector<std::vector<int>> kids;  // ascending
    std::vector<int> roots;              // ascending
};

Forest directional_forest(const IntervalPoset& ip, bool increasing) {
    const int n = ip.n();
    Forest f;
    f.parent.assign(n + 1, 0);
    f.kids.assign(n + 1, {});
    auto related = [&](int v, int w) {
        return increasing ? (v < w && ip.rel(v, w)) : (v > w && ip.rel(v, w));
    };
    for (int v = 1; v <= n; ++v) {
        int cover = 0;
        for (int w = 1; w <= n; ++w) {
            if (!related(v, w)) continue;
            bool minimal = true;
            for (int z = 1; z <= n; ++z)
                if (related(v, z) && related(z, w)) { minimal = false; break; }
            if (minimal) {
                if (cover)
                    throw error("directional part is not a forest");
                cover = w;
            }
        }
        f.parent[v] = cover;
        if (cover)
            f.kids[cover].push_back(v);
        else
            f.roots.push_back(v);
    }
    for (auto& k : f.kids) std::sort(k.begin(), k.end());
    return f;
}

// Increasing forest -> lower tree: first sibling takes the chain; a vertex's
// sons hang to its left, its next brother to its right.
int build_lower(const Forest& f, const std::vector<int>& sibs, std::size_t from,
                BinaryTree& t) {
    if (from >= sibs.size()) return 0;
    int m = sibs[from];
    t.left[m] = build_lower(f, f.kids[m], 0, t);
    t.right[m] = build_lower(f, sibs, from + 1, t);
    return m;
}

// Decreasing forest -> upper tree: last sibling takes the chain; a vertex's
// sons hang to its right, its previous brother to its left.
int build_upper(const Forest& f, const std::vector<int>& sibs, std::size_t count,
                BinaryTree& t) {
    if (count == 0) return 0;
    int m = sibs[count - 1];
    t.right[m] = build_upper(f, f.kids[m], f.kids[m].size(), t);
    t.left[m] = build_upper(f, sibs, count - 1, t);
    return m;
}

void check_inorder(const BinaryTree& t) {
    int expect = 1;
    std::function<void(int)> walk = [&](int v) {
        if (!v) return;
        walk(t.left[v]);
        if (v != expect++) throw error("labels lost the in-order property");
        walk(t.right[v]);
    };
    walk(t.root);
    if (expect != t.n + 1) throw error("labels lost the in-order property");
}

} // namespace

std::pair<BinaryTree, BinaryTree> ip_to_interval(const IntervalPoset& ip) {
    const int n = ip.n();
    Forest fi = directional_forest(ip, true);
    Forest fd = directional_forest(ip, false);
    BinaryTree s, t;
    s.n = t.n = n;
    s.left.assign(n + 1, 0);
    s.right.assign(n + 1, 0);
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    s.root = build_lower(fi, fi.roots, 0, s);
    t.root = build_upper(fd, fd.roots, fd.roots.size(), t);
    check_inorder(s);
    check_inorder(t);
    return {s, t};
}

HasseSplit hasse_split(const IntervalPoset& ip) {
    const int n = ip.n();
    HasseSplit h;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!ip.rel(a, b)) continue;
            bool cover = true;
            for (int z = 1; z <= n; ++z)
                if (ip.rel(a, z) && ip.rel(z, b)) { cover = false; break; }
            if (!cover) continue;
            (a < b ? h.increasing : h.decreasing).emplace_back(a, b);
        }
    return h;
}

bool is_exceptional(const IntervalPoset& ip) {
    HasseSplit h = hasse_split(ip);
    for (auto [y, z] : h.increasing)        // y < z
        for (auto [y2, x] : h.decreasing)   // y2 > x
            if (y2 == y && x < y) return false;
    return true;
}

bool is_simple(const IntervalPoset& ip) {
    const int n = ip.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool ok = false;
            for (int z = a; z <= n && z <= b && !ok; ++z)
                ok = (z == a || ip.rel(a, z)) && (z == b || ip.rel(b, z));
            if (!ok) return false;
        }
    return true;
}

bool is_projective(const IntervalPoset& ip) { return ip.dec().empty(); }

bool is_injective(const IntervalPoset& ip) { return ip.inc().empty(); }

IntervalPoset c_zero(const IntervalPoset& ip) {
    if (!is_projective(ip)) throw precondition_error("c_zero needs a projective input");
    const int n = ip.n();
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool blocked = false;
            for (int s = i + 1; s <= j; ++s)
                if (ip.rel(i, s)) { blocked = true; break; }
            if (!blocked) out.emplace_back(j, i);
        }
    return IntervalPoset(n, out);
}

IntervalPoset add_reversed(const IntervalPoset& ip,
                           const std::vector<std::pair<int, int>>& reversed) {
    if (!is_projective(ip)) throw precondition_error("add_reversed needs a projective input");
    std::vector<std::pair<int, int>> pairs = ip.relations();
    for (auto [j, i] : reversed) {
        if (i >= j) throw precondition_error("reversal pairs must be (j, i) with i < j");
        pairs.emplace_back(i, j);
    }
    IntervalPoset out = ip_closure(ip.n(), pairs);
    if (!is_projective(out)) throw error("reversal closure left decreasing relations");
    return out;
}

std::vector<BinaryTree> support_trees(const IntervalPoset& ip) {
    const int n = ip.n();
    if (n > 6) throw precondition_error("support enumeration supports n <= 6");
    PairSet rev_covers;
    HasseSplit h = hasse_split(ip);
    for (auto [j, i] : h.decreasing) rev_covers.add(i, j);
    std::vector<BinaryTree> out;
    for (BinaryTree& t : enumerate_trees(n)) {
        TreeRelations r = tree_relations(t);
        if (ip.inc().subset_of(r.inc) && !r.inc.intersects(rev_covers))
            out.push_back(std::move(t));
    }
    return out;
}

std::vector<IntervalPoset> enumerate_ips(int n) {
    if (n < 1 || n > 6) throw precondition_error("interval enumeration supports 1 <= n <= 6");
    std::vector<BinaryTree> trees = enumerate_trees(n);
    std::vector<TreeRelations> rels;
    rels.reserve(trees.size());
    for (const BinaryTree& t : trees) rels.push_back(tree_relations(t));
    std::vector<IntervalPoset> out;
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = 0; j < trees.size(); ++j)
            if (rels[j].dec.subset_of(rels[i].dec))
                out.push_back(interval_to_ip(trees[i], trees[j]));
    return out;
}

std::vector<IntervalPoset> enumerate_exceptional(int n) {
    std::vector<IntervalPoset> out;
    for (IntervalPoset& ip : enumerate_ips(n))
        if (is_exceptional(ip)) out.push_back(std::move(ip));
    return out;
}

} // namespace tamcy

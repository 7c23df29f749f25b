#include "tamcy/binary_tree.hpp"

#include <algorithm>
#include <functional>

namespace tamcy {

std::string tree_key(const BinaryTree& t) {
    std::function<void(int, std::string&)> emit = [&](int v, std::string& s) {
        if (v == 0) {
            s += "null";
            return;
        }
        s += '[';
        emit(t.left[v], s);
        s += ',';
        emit(t.right[v], s);
        s += ']';
    };
    std::string s;
    emit(t.root, s);
    return s;
}

namespace {

BinaryTree combine(const BinaryTree& l, const BinaryTree& r) {
    BinaryTree t;
    t.n = l.n + r.n + 1;
    t.left.assign(t.n + 1, 0);
    t.right.assign(t.n + 1, 0);
    const int root = l.n + 1;
    t.root = root;
    for (int v = 1; v <= l.n; ++v) {
        t.left[v] = l.left[v];
        t.right[v] = l.right[v];
    }
    t.left[root] = l.root;
    const int off = root;
    for (int v = 1; v <= r.n; ++v) {
        t.left[v + off] = r.left[v] ? r.left[v] + off : 0;
        t.right[v + off] = r.right[v] ? r.right[v] + off : 0;
    }
    t.right[root] = r.root ? r.root + off : 0;
    return t;
}

} // namespace

std::vector<BinaryTree> enumerate_trees(int n, bool include_empty) {
    if (n < 0 || n > 12)
        throw precondition_error("tree enumeration supports 0 <= n <= 12");
    if (n == 0) {
        if (!include_empty)
            throw precondition_error("empty tree requested without include_empty");
        BinaryTree t;
        t.left.assign(1, 0);
        t.right.assign(1, 0);
        return {t};
    }
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    BinaryTree empty;
    empty.left.assign(1, 0);
    empty.right.assign(1, 0);
    by_size[0] = {empty};
    for (int s = 1; s <= n; ++s)
        for (int l = 0; l < s; ++l)
            for (const BinaryTree& L : by_size[l])
                for (const BinaryTree& R : by_size[s - 1 - l])
                    by_size[s].push_back(combine(L, R));
    return std::move(by_size[n]);
}

std::vector<std::pair<int, int>> PairSet::pairs(int n) const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (contains(a, b)) out.emplace_back(a, b);
    return out;
}

TreeRelations tree_relations(const BinaryTree& t) {
    if (t.n < 1 || t.n > 16) throw precondition_error("tree relations need 1 <= n <= 16");
    TreeRelations r;
    r.n = t.n;
    // each subtree occupies a contiguous label range [lo, hi] around its root
    std::function<std::pair<int, int>(int)> walk = [&](int v) -> std::pair<int, int> {
        int lo = v, hi = v;
        if (t.left[v]) lo = walk(t.left[v]).first;
        if (t.right[v]) hi = walk(t.right[v]).second;
        for (int x = lo; x < v; ++x) r.inc.add(x, v);
        for (int x = v + 1; x <= hi; ++x) r.dec.add(v, x);
        return {lo, hi};
    };
    walk(t.root);
    return r;
}

bool tamari_leq(const BinaryTree& t1, const BinaryTree& t2) {
    if (t1.n != t2.n) throw precondition_error("comparing trees of different sizes");
    TreeRelations r1 = tree_relations(t1), r2 = tree_relations(t2);
    bool by_dec = r2.dec.subset_of(r1.dec);
    bool by_inc = r1.inc.subset_of(r2.inc);
    if (by_dec != by_inc) throw error("order characterizations disagree");
    return by_dec;
}

std::vector<BinaryTree> rotation_covers(const BinaryTree& t) {
    std::vector<BinaryTree> out;
    std::vector<int> parent(t.n + 1, 0);
    for (int v = 1; v <= t.n; ++v) {
        if (t.left[v]) parent[t.left[v]] = v;
        if (t.right[v]) parent[t.right[v]] = v;
    }
    for (int q = 1; q <= t.n; ++q) {
        int p = t.right[q];
        if (!p) continue;
        // left rotation at q: the in-order sequence is unchanged, so the
        // label arrays stay canonical after splicing
        BinaryTree u = t;
        u.right[q] = u.left[p];
        u.left[p] = q;
        if (t.root == q) {
            u.root = p;
        } else if (t.left[parent[q]] == q) {
            u.left[parent[q]] = p;
        } else {
            u.right[parent[q]] = p;
        }
        out.push_back(std::move(u));
    }
    return out;
}

int TamariLattice::index_of(const BinaryTree& t) const {
    return poset->index_of(tree_key(t));
}

TamariLattice tamari_lattice(int n) {
    if (n < 1 || n > 8) throw precondition_error("lattice construction supports 1 <= n <= 8");
    TamariLattice lat;
    lat.n = n;
    lat.trees = enumerate_trees(n);
    const int m = int(lat.trees.size());
    lat.rels.reserve(m);
    std::vector<std::string> names;
    names.reserve(m);
    for (const BinaryTree& t : lat.trees) {
        lat.rels.push_back(tree_relations(t));
        names.push_back(tree_key(t));
    }
    std::vector<std::pair<int, int>> leq_pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (lat.rels[j].dec.subset_of(lat.rels[i].dec)) leq_pairs.emplace_back(i, j);
    lat.poset = std::make_shared<const FinitePoset>(
        FinitePoset::from_leq(std::move(names), leq_pairs));

    // cross-checks: covers are exactly the left rotations, extremes are the combs
    std::vector<std::pair<int, int>> rot;
    for (int i = 0; i < m; ++i)
        for (const BinaryTree& u : rotation_covers(lat.trees[i]))
            rot.emplace_back(i, lat.index_of(u));
    std::sort(rot.begin(), rot.end());
    if (rot != lat.poset->covers()) throw error("rotation covers disagree with order covers");
    int mn = lat.poset->minimum(), mx = lat.poset->maximum();
    if (mn < 0 || mx < 0) throw error("lattice extremes missing");
    if (!lat.rels[mn].inc.empty() || !lat.rels[mx].dec.empty())
        throw error("lattice extremes are not the combs");
    return lat;
}

} // namespace tamcy

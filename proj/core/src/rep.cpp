#include "tamcy/rep.hpp"

#include <algorithm>

namespace tamcy {

RatMat Rep::cover_map(int x, int y) const {
    auto it = maps.find({x, y});
    if (it != maps.end()) return it->second;
    return RatMat(dim[y], dim[x]);
}

RatMat Rep::composite(int x, int y) const {
    if (x == y) return RatMat::identity(dim[x]);
    if (!poset->leq(x, y)) throw precondition_error("composite needs x <= y");
    for (int w : poset->covers_below(y))
        if (poset->leq(x, w)) return cover_map(w, y) * composite(x, w);
    throw error("no cover path found");
}

bool Rep::is_zero() const {
    return std::all_of(dim.begin(), dim.end(), [](int d) { return d == 0; });
}

void Rep::validate() const {
    const int m = poset->size();
    if (int(dim.size()) != m) throw validation_error("dimension vector has the wrong length");
    for (int d : dim)
        if (d < 0) throw validation_error("negative dimension");
    for (const auto& [cov, mat] : maps) {
        auto [x, y] = cov;
        bool is_cover = std::binary_search(poset->covers().begin(), poset->covers().end(), cov);
        if (!is_cover) throw validation_error("map attached to a non-cover pair");
        if (mat.rows() != dim[y] || mat.cols() != dim[x])
            throw validation_error("cover map has the wrong shape");
    }
    // The sweep below touches every pair (source, element) and is only worth
    // running on small posets; shape checks above always run.
    if (m > 50) return;
    // From each x, walk upward; any two paths to the same element must agree.
    std::vector<int> order = poset->linear_extension();
    for (int x = 0; x < m; ++x) {
        std::vector<RatMat> reach(m);
        std::vector<bool> seen(m, false);
        reach[x] = RatMat::identity(dim[x]);
        seen[x] = true;
        for (int u : order) {
            if (!seen[u]) continue;
            for (int v : poset->covers_above(u)) {
                RatMat candidate = cover_map(u, v) * reach[u];
                if (!seen[v]) {
                    reach[v] = candidate;
                    seen[v] = true;
                } else if (!(reach[v] == candidate)) {
                    throw validation_error("cover paths from " + poset->name(x) + " to " +
                                           poset->name(v) + " disagree");
                }
            }
        }
    }
}

Rep zero_rep(PosetPtr p) {
    Rep r;
    r.dim.assign(p->size(), 0);
    r.poset = std::move(p);
    return r;
}

namespace {

Rep thin_on(PosetPtr p, const std::vector<bool>& support) {
    Rep r;
    r.dim.assign(p->size(), 0);
    for (int i = 0; i < p->size(); ++i) r.dim[i] = support[i] ? 1 : 0;
    for (auto [x, y] : p->covers())
        if (support[x] && support[y]) r.maps.emplace(std::pair{x, y}, RatMat::identity(1));
    r.poset = std::move(p);
    return r;
}

} // namespace

Rep proj(PosetPtr p, int x) {
    std::vector<bool> support(p->size(), false);
    for (int v : p->up_set(x)) support[v] = true;
    return thin_on(std::move(p), support);
}

Rep inj(PosetPtr p, int x) {
    std::vector<bool> support(p->size(), false);
    for (int v : p->down_set(x)) support[v] = true;
    return thin_on(std::move(p), support);
}

Rep simple(PosetPtr p, int x) {
    std::vector<bool> support(p->size(), false);
    support[x] = true;
    return thin_on(std::move(p), support);
}

Rep direct_sum(const Rep& a, const Rep& b) {
    if (a.poset != b.poset) throw precondition_error("direct sum needs a shared poset");
    Rep r;
    r.poset = a.poset;
    r.dim.resize(a.poset->size());
    for (int i = 0; i < a.poset->size(); ++i) r.dim[i] = a.dim[i] + b.dim[i];
    for (auto [x, y] : a.poset->covers()) {
        if (r.dim[x] == 0 || r.dim[y] == 0) continue;
        RatMat ma = a.cover_map(x, y), mb = b.cover_map(x, y);
        RatMat m(r.dim[y], r.dim[x]);
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (int i = 0; i < mb.rows(); ++i)
            for (int j = 0; j < mb.cols(); ++j) m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
        if (!m.is_zero()) r.maps.emplace(std::pair{x, y}, std::move(m));
    }
    return r;
}

Rep radical(const Rep& m) {
    const FinitePoset& p = *m.poset;
    // basis of the radical at each element: span of incoming images
    std::vector<ColSpan> spans;
    spans.reserve(p.size());
    for (int z = 0; z < p.size(); ++z) {
        ColSpan s(m.dim[z]);
        for (int w : p.covers_below(z)) {
            if (m.dim[w] == 0) continue;
            RatMat f = m.cover_map(w, z);
            for (int j = 0; j < f.cols(); ++j) s.add(f.col(j));
        }
        spans.push_back(std::move(s));
    }
    Rep r;
    r.poset = m.poset;
    r.dim.resize(p.size());
    for (int z = 0; z < p.size(); ++z) r.dim[z] = spans[z].rank();
    for (auto [x, y] : p.covers()) {
        if (r.dim[x] == 0 || r.dim[y] == 0) continue;
        RatMat f = m.cover_map(x, y);
        RatMat g(r.dim[y], r.dim[x]);
        for (int j = 0; j < r.dim[x]; ++j) {
            std::vector<Rat> img = f.apply(spans[x].basis()[j]);
            auto coords = spans[y].coordinates(img);
            if (!coords) throw error("radical is not a submodule");
            g.set_col(j, *coords);
        }
        if (!g.is_zero()) r.maps.emplace(std::pair{x, y}, std::move(g));
    }
    r.validate();
    return r;
}

Rep interval_module(const TamariLattice& lat, const IntervalPoset& ip) {
    if (ip.n() != lat.n) throw precondition_error("interval size does not match lattice");
    PairSet rev_covers;
    for (auto [j, i] : hasse_split(ip).decreasing) rev_covers.add(i, j);
    std::vector<bool> support(lat.poset->size(), false);
    for (int t = 0; t < int(lat.trees.size()); ++t)
        if (ip.inc().subset_of(lat.rels[t].inc) && !lat.rels[t].inc.intersects(rev_covers))
            support[t] = true;
    Rep r = thin_on(lat.poset, support);
    r.validate();
    return r;
}

long hom_dim(const Rep& a, const Rep& b) {
    if (a.poset != b.poset) throw precondition_error("hom needs a shared poset");
    const FinitePoset& p = *a.poset;
    // Unknowns: entries of X_z in Hom(a_z, b_z), with X_z(r, c) flattened at
    // offset[z] + r * a.dim[z] + c.  One equation block per cover (x, y):
    // b.map(x,y) X_x - X_y a.map(x,y) = 0.
    std::vector<int> offset(p.size() + 1, 0);
    for (int z = 0; z < p.size(); ++z) offset[z + 1] = offset[z] + a.dim[z] * b.dim[z];
    const int unknowns = offset[p.size()];
    if (unknowns == 0) return 0;
    std::vector<std::vector<Rat>> rows;
    for (auto [x, y] : p.covers()) {
        if (a.dim[x] == 0 || b.dim[y] == 0) continue;
        RatMat fa = a.cover_map(x, y), fb = b.cover_map(x, y);
        for (int r = 0; r < b.dim[y]; ++r)
            for (int c = 0; c < a.dim[x]; ++c) {
                std::vector<Rat> row(unknowns);
                for (int k = 0; k < b.dim[x]; ++k)
                    row[offset[x] + k * a.dim[x] + c] += fb.at(r, k);
                for (int k = 0; k < a.dim[y]; ++k)
                    row[offset[y] + r * a.dim[y] + k] -= fa.at(k, c);
                rows.push_back(std::move(row));
            }
    }
    RatMat sys(int(rows.size()), unknowns);
    for (int i = 0; i < int(rows.size()); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(i, j) = rows[i][j];
    return unknowns - rank(sys);
}

bool iso_thin(const Rep& a, const Rep& b) {
    if (a.poset != b.poset) throw precondition_error("comparing modules over different posets");
    auto thin = [](const Rep& r) {
        return std::all_of(r.dim.begin(), r.dim.end(), [](int d) { return d <= 1; });
    };
    if (!thin(a) || !thin(b))
        throw precondition_error("modules are not thin; compare dimension vectors instead");
    if (a.dim != b.dim) return false;
    for (auto [x, y] : a.poset->covers()) {
        if (a.dim[x] != 1 || a.dim[y] != 1) continue;
        bool za = a.cover_map(x, y).at(0, 0) == 0;
        bool zb = b.cover_map(x, y).at(0, 0) == 0;
        if (za != zb) return false;
    }
    return true;
}

} // namespace tamcy

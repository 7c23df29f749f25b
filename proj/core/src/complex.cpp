#include "tamcy/complex.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "tamcy/errors.hpp"

namespace tamcy {

namespace {

bool summand_present(TermKind kind, const FinitePoset& p, int v, int z) {
    return kind == TermKind::Projective ? p.leq(v, z) : p.leq(z, v);
}

Rep sum_of(TermKind kind, PosetPtr p, const std::vector<int>& verts) {
    if (verts.empty()) return zero_rep(p);
    Rep acc = kind == TermKind::Projective ? proj(p, verts[0]) : inj(p, verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i)
        acc = direct_sum(acc, kind == TermKind::Projective ? proj(p, verts[i])
                                                           : inj(p, verts[i]));
    return acc;
}

} // namespace

void VertexComplex::validate() const {
    if (!poset) throw validation_error("complex without a poset");
    if (terms.empty()) throw validation_error("complex needs at least one degree");
    if (diffs.size() + 1 != terms.size())
        throw validation_error("complex has a differential count mismatch");
    const FinitePoset& p = *poset;
    for (const auto& layer : terms)
        for (int v : layer)
            if (v < 0 || v >= p.size())
                throw validation_error("complex summand vertex out of range");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        const RatMat& d = diffs[k];
        if (d.rows() != int(terms[k].size()) || d.cols() != int(terms[k + 1].size()))
            throw validation_error("complex differential shape mismatch");
        // A nonzero hom needs the target vertex below the source vertex, for
        // projective and injective summands alike.
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                if (d.at(i, j) != 0 && !p.leq(terms[k][i], terms[k + 1][j]))
                    throw validation_error("nonzero scalar between incomparable summands");
    }
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
        if (!(diffs[k] * diffs[k + 1]).is_zero())
            throw validation_error("complex differentials do not square to zero");
}

VertexComplex nakayama(const VertexComplex& x) {
    x.validate();
    if (x.kind != TermKind::Projective)
        throw precondition_error("nakayama applies to complexes of projectives");
    VertexComplex out = x;
    out.kind = TermKind::Injective;
    return out;
}

VertexComplex boolean_resolution(const TamariLattice& lat, const IntervalPoset& ip) {
    if (ip.n() != lat.n)
        throw precondition_error("interval-poset size does not match the lattice");
    // The increasing part of a closed relation set is itself closed.
    const IntervalPoset c(ip.n(), ip.inc().pairs(ip.n()));
    std::vector<std::pair<int, int>> j = hasse_split(ip).decreasing; // (from, to), from > to
    std::sort(j.begin(), j.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.second, x.first) < std::make_pair(y.second, y.first);
    });
    const int jn = int(j.size());

    VertexComplex out;
    out.poset = lat.poset;
    out.kind = TermKind::Projective;
    out.terms.resize(jn + 1);

    std::vector<std::map<std::vector<int>, int>> column(jn + 1);
    std::vector<std::vector<std::vector<int>>> layers(jn + 1);
    std::vector<int> sel;
    std::function<void(int)> build = [&](int start) {
        const int k = int(sel.size());
        column[k][sel] = int(layers[k].size());
        layers[k].push_back(sel);
        std::vector<std::pair<int, int>> reversed;
        for (int t : sel) reversed.push_back(j[t]);
        const IntervalPoset q = add_reversed(c, reversed);
        const int v = lat.index_of(ip_to_interval(q).first);
        if (v < 0) throw validation_error("resolution summand is not a lattice element");
        out.terms[k].push_back(v);
        for (int t = start; t < jn; ++t) {
            sel.push_back(t);
            build(t + 1);
            sel.pop_back();
        }
    };
    build(0);

    for (int k = 0; k < jn; ++k) {
        RatMat d(int(layers[k].size()), int(layers[k + 1].size()));
        for (int col = 0; col < int(layers[k + 1].size()); ++col) {
            const std::vector<int>& s = layers[k + 1][col];
            for (int pos = 0; pos < int(s.size()); ++pos) {
                std::vector<int> t = s;
                t.erase(t.begin() + pos);
                d.at(column[k].at(t), col) = (pos % 2 == 0) ? 1 : -1;
            }
        }
        out.diffs.push_back(std::move(d));
    }
    out.validate();
    return out;
}

VertexComplex min_proj_resolution(const Rep& m) {
    if (!m.poset) throw precondition_error("module without a poset");
    const FinitePoset& p = *m.poset;
    if (p.size() > 50)
        throw precondition_error("minimal resolutions are limited to 50-element posets");
    m.validate();

    VertexComplex out;
    out.poset = m.poset;
    out.kind = TermKind::Projective;
    if (m.is_zero()) {
        out.terms.push_back({});
        return out;
    }

    Rep cur = m;
    std::vector<RatMat> embed; // basis of cur inside the previous cover, per element
    std::vector<int> prev_verts;

    while (true) {
        if (int(out.terms.size()) > p.size() + 1)
            throw validation_error("projective resolution exceeded the chain-length bound");

        // Tops: the standard basis vectors that extend the radical span.
        std::vector<int> verts;
        std::vector<std::vector<Rat>> gens; // in cur coordinates, parallel to verts
        for (int z = 0; z < p.size(); ++z) {
            if (cur.dim[z] == 0) continue;
            ColSpan span(cur.dim[z]);
            for (int u : p.covers_below(z)) {
                const RatMat f = cur.cover_map(u, z);
                for (int col = 0; col < f.cols(); ++col) span.add(f.col(col));
            }
            for (int i = 0; i < cur.dim[z]; ++i) {
                std::vector<Rat> e(cur.dim[z]);
                e[i] = 1;
                if (span.add(e)) {
                    verts.push_back(z);
                    gens.push_back(std::move(e));
                }
            }
        }
        if (verts.empty()) throw validation_error("nonzero module with zero top");

        if (!out.terms.empty()) {
            RatMat d(int(prev_verts.size()), int(verts.size()));
            for (int col = 0; col < int(verts.size()); ++col) {
                const std::vector<Rat> v = embed[verts[col]].apply(gens[col]);
                int pos = 0;
                for (int i = 0; i < int(prev_verts.size()); ++i)
                    if (p.leq(prev_verts[i], verts[col])) d.at(i, col) = v[pos++];
            }
            out.diffs.push_back(std::move(d));
        }
        out.terms.push_back(verts);

        // The cover, the kernel bases, and the kernel's own cover maps.
        const Rep cover = sum_of(TermKind::Projective, m.poset, verts);
        std::vector<RatMat> ker(p.size());
        Rep next;
        next.poset = m.poset;
        next.dim.assign(p.size(), 0);
        bool nonzero = false;
        for (int w = 0; w < p.size(); ++w) {
            RatMat eps(cur.dim[w], cover.dim[w]);
            int pos = 0;
            for (int col = 0; col < int(verts.size()); ++col) {
                if (!p.leq(verts[col], w)) continue;
                eps.set_col(pos++, cur.composite(verts[col], w).apply(gens[col]));
            }
            if (rank(eps) != cur.dim[w])
                throw validation_error("projective cover fails to surject");
            ker[w] = kernel_basis(eps);
            next.dim[w] = ker[w].cols();
            if (next.dim[w] > 0) nonzero = true;
        }
        if (!nonzero) break;

        std::vector<ColSpan> spans;
        spans.reserve(p.size());
        for (int w = 0; w < p.size(); ++w) {
            spans.emplace_back(cover.dim[w]);
            for (int col = 0; col < ker[w].cols(); ++col) spans[w].add(ker[w].col(col));
        }
        for (auto [u, v] : p.covers()) {
            if (next.dim[u] == 0) continue;
            const RatMat step = cover.cover_map(u, v);
            RatMat f(next.dim[v], next.dim[u]);
            for (int col = 0; col < next.dim[u]; ++col) {
                auto coords = spans[v].coordinates(step.apply(ker[u].col(col)));
                if (!coords)
                    throw validation_error("kernel is not closed under the cover maps");
                f.set_col(col, *coords);
            }
            if (next.dim[v] > 0) next.maps.emplace(std::make_pair(u, v), std::move(f));
        }
        next.validate();
        cur = std::move(next);
        embed = std::move(ker);
        prev_verts = out.terms.back();
    }

    out.validate();
    return out;
}

VertexComplex serre_module(const Rep& m) { return nakayama(min_proj_resolution(m)); }

void RepComplex::validate() const {
    if (!poset) throw validation_error("complex without a poset");
    if (terms.empty()) throw validation_error("complex needs at least one degree");
    if (diffs.size() + 1 != terms.size())
        throw validation_error("complex has a differential count mismatch");
    const FinitePoset& p = *poset;
    for (const Rep& t : terms) {
        if (t.poset != poset) throw validation_error("complex term lives on a different poset");
        t.validate();
    }
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (int(diffs[k].size()) != p.size())
            throw validation_error("complex differential is missing elements");
        for (int z = 0; z < p.size(); ++z) {
            const RatMat& d = diffs[k][z];
            if (d.rows() != terms[k].dim[z] || d.cols() != terms[k + 1].dim[z])
                throw validation_error("complex differential shape mismatch");
        }
        for (auto [u, v] : p.covers()) {
            const RatMat lhs = terms[k].cover_map(u, v) * diffs[k][u];
            const RatMat rhs = diffs[k][v] * terms[k + 1].cover_map(u, v);
            if (!(lhs == rhs)) throw validation_error("complex differential is not natural");
        }
    }
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
        for (int z = 0; z < p.size(); ++z)
            if (!(diffs[k][z] * diffs[k + 1][z]).is_zero())
                throw validation_error("complex differentials do not square to zero");
}

RepComplex expand(const VertexComplex& x) {
    x.validate();
    const FinitePoset& p = *x.poset;
    RepComplex rc;
    rc.poset = x.poset;
    for (const auto& verts : x.terms) rc.terms.push_back(sum_of(x.kind, x.poset, verts));
    for (std::size_t k = 0; k + 1 < x.terms.size(); ++k) {
        const auto& tgt = x.terms[k];
        const auto& src = x.terms[k + 1];
        std::vector<RatMat> per(p.size());
        for (int z = 0; z < p.size(); ++z) {
            std::vector<int> rows, cols;
            for (int i = 0; i < int(tgt.size()); ++i)
                if (summand_present(x.kind, p, tgt[i], z)) rows.push_back(i);
            for (int s = 0; s < int(src.size()); ++s)
                if (summand_present(x.kind, p, src[s], z)) cols.push_back(s);
            // At z every canonical map contributing to a present (row, col)
            // pair restricts to the scalar itself.
            RatMat d(int(rows.size()), int(cols.size()));
            for (int r = 0; r < int(rows.size()); ++r)
                for (int s = 0; s < int(cols.size()); ++s)
                    d.at(r, s) = x.diffs[k].at(rows[r], cols[s]);
            per[z] = std::move(d);
        }
        rc.diffs.push_back(std::move(per));
    }
    rc.validate();
    return rc;
}

std::map<int, Rep> homology(const RepComplex& x) {
    x.validate();
    const FinitePoset& p = *x.poset;
    const int top = x.top_degree();
    std::map<int, Rep> out;
    for (int k = 0; k <= top; ++k) {
        const Rep& term = x.terms[k];
        // Per element: span the boundaries, then extend by cycles; the added
        // cycles are the quotient basis.
        std::vector<ColSpan> spans;
        spans.reserve(p.size());
        std::vector<int> im_rank(p.size(), 0), hdim(p.size(), 0);
        std::vector<std::vector<std::vector<Rat>>> quot(p.size());
        for (int z = 0; z < p.size(); ++z) {
            spans.emplace_back(term.dim[z]);
            if (term.dim[z] == 0) continue;
            if (k < top) {
                const RatMat& in = x.diffs[k][z];
                for (int col = 0; col < in.cols(); ++col)
                    if (spans[z].add(in.col(col))) ++im_rank[z];
            }
            std::vector<std::vector<Rat>> cycles;
            if (k >= 1) {
                const RatMat kb = kernel_basis(x.diffs[k - 1][z]);
                for (int col = 0; col < kb.cols(); ++col) cycles.push_back(kb.col(col));
            } else {
                for (int i = 0; i < term.dim[z]; ++i) {
                    std::vector<Rat> e(term.dim[z]);
                    e[i] = 1;
                    cycles.push_back(std::move(e));
                }
            }
            for (auto& c : cycles)
                if (spans[z].add(c)) {
                    quot[z].push_back(c);
                    ++hdim[z];
                }
        }
        long total = 0;
        for (int z = 0; z < p.size(); ++z) total += hdim[z];
        if (total == 0) continue;

        Rep h;
        h.poset = x.poset;
        h.dim = hdim;
        for (auto [u, v] : p.covers()) {
            if (hdim[u] == 0 || hdim[v] == 0) continue;
            const RatMat step = term.cover_map(u, v);
            RatMat f(hdim[v], hdim[u]);
            for (int col = 0; col < hdim[u]; ++col) {
                auto coords = spans[v].coordinates(step.apply(quot[u][col]));
                if (!coords)
                    throw validation_error("homology class escapes the chosen spans");
                for (int r = 0; r < hdim[v]; ++r) f.at(r, col) = (*coords)[im_rank[v] + r];
            }
            h.maps.emplace(std::make_pair(u, v), std::move(f));
        }
        h.validate();
        out.emplace(k, std::move(h));
    }
    return out;
}

SerreIterationReport serre_iterate(const Rep& m, int steps) {
    if (steps <= 0) throw precondition_error("step count must be positive");
    m.validate();
    SerreIterationReport report;
    report.steps_requested = steps;
    Rep cur = m;
    long shift = 0;
    for (int s = 0; s < steps; ++s) {
        std::map<int, Rep> h = homology(expand(serre_module(cur)));
        if (h.size() > 1) {
            report.halted = true;
            for (auto& [d, mod] : h) report.graded.emplace(int(d + shift), std::move(mod));
            break;
        }
        if (h.empty()) {
            cur = zero_rep(cur.poset);
            report.step_degrees.push_back(0);
        } else {
            const int d = h.begin()->first;
            cur = std::move(h.begin()->second);
            shift += d;
            report.step_degrees.push_back(d);
        }
        ++report.steps_done;
    }
    report.total_shift = shift;
    report.module = std::move(cur);
    return report;
}

} // namespace tamcy

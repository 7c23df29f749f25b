#include "tamcy/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace tamcy {

FinitePoset FinitePoset::from_leq(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& leq_pairs) {
    FinitePoset p;
    const int m = int(names.size());
    p.names_ = std::move(names);
    p.up_.assign(m, boost::dynamic_bitset<>(m));
    for (auto [a, b] : leq_pairs) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw validation_error("relation pair out of range");
        p.up_[a].set(b);
    }
    for (int i = 0; i < m; ++i)
        if (!p.up_[i].test(i))
            throw validation_error("relation is not reflexive at element " + p.names_[i]);
    for (int i = 0; i < m; ++i)
        for (int j = int(p.up_[i].find_first()); j >= 0; j = int(p.up_[i].find_next(j))) {
            if (i != j && p.up_[j].test(i))
                throw validation_error("antisymmetry violated by pair (" + p.names_[i] +
                                       ", " + p.names_[j] + ")");
            if (!p.up_[j].is_subset_of(p.up_[i])) {
                boost::dynamic_bitset<> missing = p.up_[j] - p.up_[i];
                int k = int(missing.find_first());
                throw validation_error("transitivity violated by triple (" + p.names_[i] +
                                       ", " + p.names_[j] + ", " + p.names_[k] + ")");
            }
        }
    p.finalize();
    return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<int, int>>& cover_pairs) {
    FinitePoset p;
    const int m = int(names.size());
    p.names_ = std::move(names);
    p.up_.assign(m, boost::dynamic_bitset<>(m));
    for (int i = 0; i < m; ++i) p.up_[i].set(i);
    for (auto [a, b] : cover_pairs) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw validation_error("cover pair out of range");
        p.up_[a].set(b);
    }
    // reflexive-transitive closure, then antisymmetry check
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m; ++i)
            for (int j = int(p.up_[i].find_first()); j >= 0; j = int(p.up_[i].find_next(j))) {
                boost::dynamic_bitset<> merged = p.up_[i] | p.up_[j];
                if (merged != p.up_[i]) {
                    p.up_[i] = std::move(merged);
                    changed = true;
                }
            }
    }
    for (int i = 0; i < m; ++i)
        for (int j = int(p.up_[i].find_first()); j >= 0; j = int(p.up_[i].find_next(j)))
            if (i != j && p.up_[j].test(i))
                throw validation_error("antisymmetry violated by pair (" + p.names_[i] +
                                       ", " + p.names_[j] + ")");
    p.finalize();
    return p;
}

void FinitePoset::finalize() {
    const int m = size();
    index_.reserve(m);
    for (int i = 0; i < m; ++i)
        if (!index_.emplace(names_[i], i).second)
            throw validation_error("duplicate element name " + names_[i]);
    down_.assign(m, boost::dynamic_bitset<>(m));
    for (int i = 0; i < m; ++i)
        for (int j = int(up_[i].find_first()); j >= 0; j = int(up_[i].find_next(j)))
            down_[j].set(i);
    covers_above_.assign(m, {});
    covers_below_.assign(m, {});
    for (int a = 0; a < m; ++a) {
        boost::dynamic_bitset<> strict_up = up_[a];
        strict_up.reset(a);
        for (int b = int(strict_up.find_first()); b >= 0; b = int(strict_up.find_next(b))) {
            boost::dynamic_bitset<> between = strict_up & down_[b];
            between.reset(b);
            if (between.none()) covers_.emplace_back(a, b);
        }
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto [a, b] : covers_) {
        covers_above_[a].push_back(b);
        covers_below_[b].push_back(a);
    }
}

int FinitePoset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> FinitePoset::intervals() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = int(up_[a].find_first()); b >= 0; b = int(up_[a].find_next(b)))
            out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FinitePoset::up_set(int x) const {
    std::vector<int> out;
    for (int j = int(up_[x].find_first()); j >= 0; j = int(up_[x].find_next(j)))
        out.push_back(j);
    return out;
}

std::vector<int> FinitePoset::down_set(int x) const {
    std::vector<int> out;
    for (int j = int(down_[x].find_first()); j >= 0; j = int(down_[x].find_next(j)))
        out.push_back(j);
    return out;
}

std::vector<int> FinitePoset::linear_extension() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return down_[a].count() < down_[b].count();
    });
    // |down(a)| < |down(b)| whenever a < b strictly, so this is a linear
    // extension; keep the cheap safety net anyway.
    std::vector<int> pos(size());
    for (int i = 0; i < size(); ++i) pos[order[i]] = i;
    for (auto [a, b] : covers_)
        if (pos[a] > pos[b]) throw error("linear extension failed");
    return order;
}

int FinitePoset::minimum() const {
    for (int i = 0; i < size(); ++i)
        if (int(up_[i].count()) == size()) return i;
    return -1;
}

int FinitePoset::maximum() const {
    for (int i = 0; i < size(); ++i)
        if (int(down_[i].count()) == size()) return i;
    return -1;
}

IntMatrix zeta_matrix(const FinitePoset& p) {
    const int m = p.size();
    IntMatrix z(m, m);
    for (int i = 0; i < m; ++i)
        for (int j : p.up_set(i)) z.at(i, j) = 1;
    return z;
}

IntMatrix mobius_matrix(const FinitePoset& p) {
    const int m = p.size();
    std::vector<int> order = p.linear_extension();
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) pos[order[i]] = i;

    // Permuted zeta is unit upper triangular; invert by back substitution.
    // Row-sparse representation keeps this near the number of comparable pairs.
    std::vector<std::vector<int>> above(m); // strictly larger, in permuted indices
    for (int i = 0; i < m; ++i) {
        for (int j : p.up_set(order[i]))
            if (j != order[i]) above[i].push_back(pos[j]);
        std::sort(above[i].begin(), above[i].end());
    }
    std::vector<std::vector<long long>> x(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) x[i][i] = 1;
    bool overflow = false;
    for (int j = 0; j < m && !overflow; ++j)
        for (int i = j - 1; i >= 0; --i) {
            long long acc = 0;
            for (int k : above[i]) {
                if (k > j) break;
                if (__builtin_add_overflow(acc, x[k][j], &acc)) { overflow = true; break; }
            }
            x[i][j] = -acc;
        }
    IntMatrix out(m, m);
    if (!overflow) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (x[i][j] != 0) out.at(order[i], order[j]) = x[i][j];
        return out;
    }
    // Arbitrary-precision fallback; same recurrence.
    std::vector<std::vector<Int>> xb(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) xb[i][i] = 1;
    for (int j = 0; j < m; ++j)
        for (int i = j - 1; i >= 0; --i) {
            Int acc = 0;
            for (int k : above[i]) {
                if (k > j) break;
                acc += xb[k][j];
            }
            xb[i][j] = -acc;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (xb[i][j] != 0) out.at(order[i], order[j]) = xb[i][j];
    return out;
}

IntMatrix coxeter_matrix(const FinitePoset& p) {
    const int m = p.size();
    IntMatrix mob = mobius_matrix(p);
    // C[i][j] = -sum_k zeta[i][k] * mob[j][k], iterating k over up(i).
    std::vector<std::vector<long long>> mb(m, std::vector<long long>(m));
    bool fits = true;
    for (int i = 0; i < m && fits; ++i)
        for (int j = 0; j < m; ++j) {
            const Int& v = mob.at(i, j);
            if (v > INT64_MAX || v < INT64_MIN) { fits = false; break; }
            mb[i][j] = v.convert_to<long long>();
        }
    IntMatrix c(m, m);
    if (fits) {
        bool overflow = false;
        for (int i = 0; i < m && !overflow; ++i) {
            std::vector<int> ups = p.up_set(i);
            for (int j = 0; j < m; ++j) {
                long long acc = 0;
                for (int k : ups)
                    if (__builtin_add_overflow(acc, mb[j][k], &acc)) { overflow = true; break; }
                if (overflow) break;
                if (acc != 0) c.at(i, j) = -acc;
            }
        }
        if (!overflow) return c;
        c = IntMatrix(m, m);
    }
    for (int i = 0; i < m; ++i) {
        std::vector<int> ups = p.up_set(i);
        for (int j = 0; j < m; ++j) {
            Int acc = 0;
            for (int k : ups) acc += mob.at(j, k);
            c.at(i, j) = -acc;
        }
    }
    return c;
}

} // namespace tamcy

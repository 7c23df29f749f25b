#include "tamcy/matrix.hpp"

#include <cstdint>

namespace tamcy {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_error("matrix product shape mismatch");
    IntMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += v * rhs.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

struct i64_overflow {};

struct I64Mat {
    int r = 0, c = 0;
    std::vector<long long> a;
    I64Mat(int r_, int c_) : r(r_), c(c_), a(std::size_t(r_) * c_) {}
    long long& at(int i, int j) { return a[std::size_t(i) * c + j]; }
    long long at(int i, int j) const { return a[std::size_t(i) * c + j]; }
};

I64Mat mul_checked(const I64Mat& x, const I64Mat& y) {
    I64Mat r(x.r, y.c);
    for (int i = 0; i < x.r; ++i)
        for (int k = 0; k < x.c; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            const long long* yr = &y.a[std::size_t(k) * y.c];
            long long* rr = &r.a[std::size_t(i) * r.c];
            for (int j = 0; j < y.c; ++j) {
                long long p;
                if (__builtin_mul_overflow(v, yr[j], &p) ||
                    __builtin_add_overflow(rr[j], p, &rr[j]))
                    throw i64_overflow{};
            }
        }
    return r;
}

bool is_identity(const I64Mat& m) {
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::optional<I64Mat> narrow(const IntMatrix& m) {
    I64Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
            r.at(i, j) = v.convert_to<long long>();
        }
    return r;
}

template <class M>
M power(M base, long e, M id, M (*mul)(const M&, const M&)) {
    M acc = id;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

IntMatrix mul_big(const IntMatrix& a, const IntMatrix& b) { return a * b; }

} // namespace

bool matrix_power_is_identity(const IntMatrix& m, long exponent) {
    if (m.rows() != m.cols()) throw precondition_error("power of a non-square matrix");
    if (exponent < 1) throw precondition_error("exponent must be >= 1");
    if (auto fast = narrow(m)) {
        I64Mat id(m.rows(), m.rows());
        for (int i = 0; i < m.rows(); ++i) id.at(i, i) = 1;
        try {
            return is_identity(power<I64Mat>(*fast, exponent, id, &mul_checked));
        } catch (const i64_overflow&) {
            // exact big-integer fallback below
        }
    }
    return power<IntMatrix>(m, exponent, IntMatrix::identity(m.rows()), &mul_big).is_identity();
}

bool column_signs_consistent(const IntMatrix& m) {
    for (int j = 0; j < m.cols(); ++j) {
        int sign = 0;
        for (int i = 0; i < m.rows(); ++i) {
            const Int& v = m.at(i, j);
            if (v == 0) continue;
            int s = v > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (sign != s) return false;
        }
    }
    return true;
}

bool entries_within_one(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) > 1 || m.at(i, j) < -1) return false;
    return true;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_error("matrix product shape mismatch");
    RatMat r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += v * rhs.at(k, j);
        }
    return r;
}

bool RatMat::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<Rat> RatMat::col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void RatMat::set_col(int j, const std::vector<Rat>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (int(v.size()) != cols_) throw precondition_error("matrix-vector shape mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        Rat inv = a.at(row, col);
        for (int j = 0; j < a.cols(); ++j) a.at(row, j) /= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(RatMat a) { return int(rref(a).size()); }

RatMat kernel_basis(const RatMat& a) {
    RatMat r = a;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMat k(a.cols(), int(free_cols.size()));
    for (int t = 0; t < int(free_cols.size()); ++t) {
        int f = free_cols[t];
        k.at(f, t) = 1;
        for (int i = 0; i < int(pivots.size()); ++i) k.at(pivots[i], t) = -r.at(i, f);
    }
    return k;
}

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
    if (int(b.size()) != a.rows()) throw precondition_error("solve shape mismatch");
    RatMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == a.cols()) return std::nullopt; // pivot in augmented column
    std::vector<Rat> x(a.cols());
    for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

bool ColSpan::add(const std::vector<Rat>& v) {
    if (int(v.size()) != dim_) throw precondition_error("span dimension mismatch");
    std::vector<Rat> w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& lead = w[pivot_[r]];
        if (lead == 0) continue;
        Rat f = lead;
        for (int j = 0; j < dim_; ++j) w[j] -= f * rows_[r][j];
    }
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) { p = j; break; }
    if (p < 0) return false;
    Rat inv = w[p];
    for (int j = 0; j < dim_; ++j) w[j] /= inv;
    rows_.push_back(std::move(w));
    pivot_.push_back(p);
    basis_.push_back(v);
    return true;
}

bool ColSpan::contains(const std::vector<Rat>& v) const {
    std::vector<Rat> w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& lead = w[pivot_[r]];
        if (lead == 0) continue;
        Rat f = lead;
        for (int j = 0; j < dim_; ++j) w[j] -= f * rows_[r][j];
    }
    for (int j = 0; j < dim_; ++j)
        if (w[j] != 0) return false;
    return true;
}

std::optional<std::vector<Rat>> ColSpan::coordinates(const std::vector<Rat>& v) const {
    RatMat m(dim_, int(basis_.size()));
    for (int j = 0; j < int(basis_.size()); ++j) m.set_col(j, basis_[j]);
    return solve(m, v);
}

} // namespace tamcy

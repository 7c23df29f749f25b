#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "tamcy/errors.hpp"

namespace tamcy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix over arbitrary-precision integers. Row major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix negated() const;
    bool is_identity() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// m^exponent == identity?  exponent >= 1.  Uses a checked machine-word fast
// path internally and falls back to arbitrary precision on overflow, so the
// answer is always exact.
bool matrix_power_is_identity(const IntMatrix& m, long exponent);

// True iff within each column all nonzero entries share a sign.
bool column_signs_consistent(const IntMatrix& m);

// True iff every entry lies in {-1, 0, 1}.
bool entries_within_one(const IntMatrix& m);

// Dense matrix over exact rationals, used by the representation engine.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const RatMat&) const = default;

    RatMat operator*(const RatMat& rhs) const;
    bool is_zero() const;

    std::vector<Rat> col(int j) const;
    void set_col(int j, const std::vector<Rat>& v);
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

int rank(RatMat a);

// Columns form a basis of ker(a).  Deterministic (free variables in index order).
RatMat kernel_basis(const RatMat& a);

// One solution of a x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

// Incremental column span with exact elimination; used to pick basis
// extensions deterministically.
class ColSpan {
public:
    explicit ColSpan(int dim) : dim_(dim) {}

    // Returns true iff v was independent of the current span (and is added).
    bool add(const std::vector<Rat>& v);
    bool contains(const std::vector<Rat>& v) const;
    int rank() const { return int(rows_.size()); }
    int dim() const { return dim_; }

    // The accepted vectors, in insertion order.
    const std::vector<std::vector<Rat>>& basis() const { return basis_; }

    // Coordinates of v in terms of basis(); nullopt if v is outside the span.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_;   // reduced rows
    std::vector<int> pivot_;               // pivot column of each reduced row
    std::vector<std::vector<Rat>> basis_;
};

} // namespace tamcy

#pragma once

#include <vector>

#include "latkit/numeric.hpp"

namespace latkit {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense integer matrix, row-major. Small and exact: every arithmetic
// operation is overflow-checked.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_rows(const std::vector<IntVec>& rows) {
        if (rows.empty()) return IntMat(0, 0);
        IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols())
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntVec column(int j) const {
        IntVec c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVec row(int i) const {
        IntVec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntVec apply(const IntVec& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector dimension mismatch");
        IntVec out(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols_; ++j)
                acc = checked_add(acc, checked_mul((*this)(i, j), v[j]));
            out[i] = acc;
        }
        return out;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        IntMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                Int aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j)
                    c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
            }
        return c;
    }

    friend IntMat operator+(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum dimension mismatch");
        IntMat c(a.rows_, a.cols_);
        for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = checked_add(a.a_[t], b.a_[t]);
        return c;
    }

    friend IntMat operator-(const IntMat& a, const IntMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference dimension mismatch");
        IntMat c(a.rows_, a.cols_);
        for (size_t t = 0; t < a.a_.size(); ++t) c.a_[t] = checked_sub(a.a_[t], b.a_[t]);
        return c;
    }

    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    const std::vector<Int>& flat() const { return a_; }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += f * row j
    void add_row(int i, int j, Int f) {
        for (int k = 0; k < cols_; ++k)
            (*this)(i, k) = checked_add((*this)(i, k), checked_mul(f, (*this)(j, k)));
    }
    // col i += f * col j
    void add_col(int i, int j, Int f) {
        for (int k = 0; k < rows_; ++k)
            (*this)(k, i) = checked_add((*this)(k, i), checked_mul(f, (*this)(k, j)));
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) = checked_neg((*this)(i, k));
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

using RatMat = std::vector<RatVec>;

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

// Exact inverse over the rationals; throws if singular.
RatMat rational_inverse(const IntMat& m);

// Apply an integer matrix to a rational vector.
RatVec apply_rational(const IntMat& m, const RatVec& v);

// Inertia (positive count, negative count) of a symmetric integer matrix,
// by exact congruence diagonalization over the rationals.
std::pair<int, int> symmetric_signature(const IntMat& m);

// Rank over the rationals.
int rational_rank(const IntMat& m);

IntVec add_vec(const IntVec& a, const IntVec& b);
IntVec sub_vec(const IntVec& a, const IntVec& b);
IntVec scale_vec(Int c, const IntVec& v);
Int gcd_vec(const IntVec& v);
bool is_zero_vec(const IntVec& v);

}  // namespace latkit

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hm/errors.hpp"

namespace hm {

/// Dense matrix over an exact field K. Row-major, value semantics.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const K& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        for (int i : rows)
            if (i < 0 || i >= rows_) throw std::out_of_range("row index out of range");
        for (int j : cols)
            if (j < 0 || j >= cols_) throw std::out_of_range("column index out of range");
        Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> out(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    template <class F>
    auto map(F f) const {
        using L = decltype(f(std::declval<const K&>()));
        Matrix<L> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    int rows_, cols_;
    std::vector<K> e_;
};

struct Elimination {
    int rank = 0;
    std::vector<int> pivot_rows; // original row indices, one per pivot
    std::vector<int> pivot_cols; // ascending
};

/// Fraction-free (Bareiss) elimination with deterministic first-nonzero
/// pivoting. Works over any exact field; divisions are exact by the Sylvester
/// identity, keeping intermediate entries as minors of the input.
template <class K>
Elimination bareiss_eliminate(Matrix<K> a) {
    const int rows = a.rows(), cols = a.cols();
    Elimination out;
    std::vector<int> rowperm(static_cast<size_t>(rows));
    std::iota(rowperm.begin(), rowperm.end(), 0);
    K prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            a.swap_rows(piv, r);
            std::swap(rowperm[static_cast<size_t>(piv)], rowperm[static_cast<size_t>(r)]);
        }
        const K pv = a(r, c);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) a(i, j) = (a(i, j) * pv - a(i, c) * a(r, j)) / prev;
            a(i, c) = K(0);
        }
        prev = pv;
        out.pivot_rows.push_back(rowperm[static_cast<size_t>(r)]);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

template <class K>
int rank(const Matrix<K>& m) {
    return bareiss_eliminate(m).rank;
}

/// Determinant by Bareiss; the last pivot is the determinant up to swap signs.
template <class K>
K det(Matrix<K> a) {
    const int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return K(1);
    K prev(1);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) return K(0);
        if (piv != c) {
            a.swap_rows(piv, c);
            sign = -sign;
        }
        const K pv = a(c, c);
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) a(i, j) = (a(i, j) * pv - a(i, c) * a(c, j)) / prev;
            a(i, c) = K(0);
        }
        prev = pv;
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

/// Determinant of the square submatrix picked by (rows, cols).
template <class K>
K minor_det(const Matrix<K>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor selection not square");
    return det(m.submatrix(rows, cols));
}

/// Reduced row echelon form; returns pivot column of each produced row.
template <class K>
std::vector<int> rref(Matrix<K>& a) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.swap_rows(piv, r);
        const K pv = a(r, c);
        for (int j = c; j < cols; ++j) a(r, j) = a(r, j) / pv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const K f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

/// Basis of the right null space; every returned vector is verified to satisfy
/// m v = 0 exactly.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
    Matrix<K> a = m;
    std::vector<int> pivots = rref(a);
    const int cols = m.cols();
    std::vector<int> pivot_of_col(static_cast<size_t>(cols), -1);
    for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[static_cast<size_t>(pivots[r])] = static_cast<int>(r);
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
        std::vector<K> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(c)] = K(1);
        for (int c2 = 0; c2 < cols; ++c2) {
            int pr = pivot_of_col[static_cast<size_t>(c2)];
            if (pr >= 0) v[static_cast<size_t>(c2)] = -a(pr, c);
        }
        for (const K& r : m.apply(v))
            if (!is_zero(r)) throw InternalError("kernel residual check failed");
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
int kernel_dimension(const Matrix<K>& m) {
    return m.cols() - rank(m);
}

/// Inverse via Gauss-Jordan; throws on singular input.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Matrix<K> a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = K(1);
    }
    if (static_cast<int>(rref(a).size()) != n) throw std::invalid_argument("singular matrix");
    Matrix<K> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

/// Adjugate. Rank n: det * inverse; rank n-1: rank-one product of kernel
/// vectors scaled by one cofactor; rank < n-1: zero.
template <class K>
Matrix<K> adjugate(const Matrix<K>& s) {
    const int n = s.rows();
    if (n != s.cols()) throw std::invalid_argument("adjugate of non-square matrix");
    if (n == 1) {
        Matrix<K> out(1, 1);
        out(0, 0) = K(1);
        return out;
    }
    const int r = rank(s);
    Matrix<K> out(n, n);
    if (r < n - 1) return out;
    if (r == n) {
        const K d = det(s);
        Matrix<K> inv = inverse(s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out(i, j) = d * inv(i, j);
        return out;
    }
    auto kr = kernel_basis(s).at(0);
    auto kl = kernel_basis(s.transpose()).at(0);
    int u0 = -1, v0 = -1;
    for (int i = 0; i < n; ++i)
        if (!is_zero(kl[static_cast<size_t>(i)])) {
            u0 = i;
            break;
        }
    for (int j = 0; j < n; ++j)
        if (!is_zero(kr[static_cast<size_t>(j)])) {
            v0 = j;
            break;
        }
    std::vector<int> rsel, csel;
    for (int i = 0; i < n; ++i)
        if (i != u0) rsel.push_back(i);
    for (int j = 0; j < n; ++j)
        if (j != v0) csel.push_back(j);
    K cof = det(s.submatrix(rsel, csel));
    if ((u0 + v0) % 2 != 0) cof = -cof;
    const K alpha = cof / (kr[static_cast<size_t>(v0)] * kl[static_cast<size_t>(u0)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = alpha * kr[static_cast<size_t>(i)] * kl[static_cast<size_t>(j)];
    return out;
}

/// Matrix family with entries affine-linear in parameters:
/// M(p) = constant + sum_t p[t] * coeff[t].
template <class K>
struct LinearMatrixFamily {
    Matrix<K> constant;
    std::vector<Matrix<K>> coeff;

    Matrix<K> eval(const std::vector<K>& p) const {
        Matrix<K> m = constant;
        for (size_t t = 0; t < coeff.size(); ++t) {
            if (is_zero(p[t])) continue;
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m(i, j) += p[t] * coeff[t](i, j);
        }
        return m;
    }
};

/// Gradient of the (rows, cols) minor of a parameter-linear family at a point,
/// by the adjugate trace formula d det(S) = tr(adj(S) dS).
template <class K>
std::vector<K> minor_gradient(const LinearMatrixFamily<K>& family, const std::vector<int>& rows,
                              const std::vector<int>& cols, const std::vector<K>& point) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor selection not square");
    Matrix<K> s = family.eval(point).submatrix(rows, cols);
    Matrix<K> adj = adjugate(s);
    const int n = s.rows();
    std::vector<K> grad(family.coeff.size());
    for (size_t t = 0; t < family.coeff.size(); ++t) {
        Matrix<K> st = family.coeff[t].submatrix(rows, cols);
        K tr(0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (!is_zero(adj(u, v)) && !is_zero(st(v, u))) tr += adj(u, v) * st(v, u);
        grad[t] = tr;
    }
    return grad;
}

} // namespace hm

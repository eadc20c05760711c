#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hm/matrix.hpp"
#include "hm/poly.hpp"

namespace hm {

/// Homogeneous trivariate form of fixed degree d in (m0, m1, m2), dense over
/// the monomials m0^i m1^j m2^k with i+j+k = d.
template <class K>
class TriForm {
public:
    TriForm() : TriForm(0) {}
    explicit TriForm(int degree)
        : d_(degree), c_(static_cast<size_t>((degree + 1) * (degree + 2) / 2)) {}

    static TriForm linear(const std::array<K, 3>& v) {
        TriForm f(1);
        f.at(0, 0) = v[0]; // m0
        f.at(1, 0) = v[1]; // m1
        f.at(0, 1) = v[2]; // m2
        return f;
    }
    static TriForm constant(K v) {
        TriForm f(0);
        f.at(0, 0) = std::move(v);
        return f;
    }

    int degree() const { return d_; }
    // coefficient of m0^(d-j-k) m1^j m2^k
    K& at(int j, int k) { return c_[index(j, k)]; }
    const K& at(int j, int k) const { return c_[index(j, k)]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    K eval(const K& m0, const K& m1, const K& m2) const {
        std::vector<K> p0(static_cast<size_t>(d_) + 1), p1 = p0, p2 = p0;
        p0[0] = p1[0] = p2[0] = K(1);
        for (int i = 1; i <= d_; ++i) {
            p0[static_cast<size_t>(i)] = p0[static_cast<size_t>(i - 1)] * m0;
            p1[static_cast<size_t>(i)] = p1[static_cast<size_t>(i - 1)] * m1;
            p2[static_cast<size_t>(i)] = p2[static_cast<size_t>(i - 1)] * m2;
        }
        K out(0);
        for (int j = 0; j <= d_; ++j)
            for (int k = 0; j + k <= d_; ++k) {
                const K& c = at(j, k);
                if (scalar_is_zero(c)) continue;
                out += c * p0[static_cast<size_t>(d_ - j - k)] * p1[static_cast<size_t>(j)] * p2[static_cast<size_t>(k)];
            }
        return out;
    }

    friend TriForm operator+(const TriForm& a, const TriForm& b) {
        if (a.d_ != b.d_) throw std::invalid_argument("triform degree mismatch");
        TriForm out(a.d_);
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }
    friend TriForm operator*(const TriForm& a, const TriForm& b) {
        TriForm out(a.d_ + b.d_);
        for (int j = 0; j <= a.d_; ++j)
            for (int k = 0; j + k <= a.d_; ++k) {
                if (scalar_is_zero(a.at(j, k))) continue;
                for (int j2 = 0; j2 <= b.d_; ++j2)
                    for (int k2 = 0; j2 + k2 <= b.d_; ++k2) {
                        if (scalar_is_zero(b.at(j2, k2))) continue;
                        out.at(j + j2, k + k2) += a.at(j, k) * b.at(j2, k2);
                    }
            }
        return out;
    }
    TriForm scaled(const K& f) const {
        TriForm out(d_);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * f;
        return out;
    }
    TriForm operator-() const { return scaled(K(-1)); }
    friend bool operator==(const TriForm& a, const TriForm& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

    /// Substitute m_i = sum_j T[i][j] m'_j.
    TriForm substituted(const std::array<std::array<K, 3>, 3>& t) const {
        std::array<TriForm, 3> lin = {TriForm::linear({t[0][0], t[0][1], t[0][2]}),
                                      TriForm::linear({t[1][0], t[1][1], t[1][2]}),
                                      TriForm::linear({t[2][0], t[2][1], t[2][2]})};
        TriForm out(d_);
        for (int j = 0; j <= d_; ++j)
            for (int k = 0; j + k <= d_; ++k) {
                if (scalar_is_zero(at(j, k))) continue;
                TriForm term = TriForm::constant(at(j, k));
                for (int rep = 0; rep < d_ - j - k; ++rep) term = term * lin[0];
                for (int rep = 0; rep < j; ++rep) term = term * lin[1];
                for (int rep = 0; rep < k; ++rep) term = term * lin[2];
                out = out + term;
            }
        return out;
    }

    /// Coefficient of m2^k as a binary form of degree d-k in (m0, m1).
    BinaryForm<K> m2_coefficient(int k) const {
        std::vector<K> c(static_cast<size_t>(d_ - k) + 1);
        for (int j = 0; j + k <= d_; ++j) c[static_cast<size_t>(j)] = at(j, k);
        return BinaryForm<K>(std::move(c));
    }

    /// Proportionality test: b = lambda * a for some scalar lambda != 0.
    static bool proportional(const TriForm& a, const TriForm& b) {
        if (a.d_ != b.d_ || a.is_zero() || b.is_zero()) return false;
        size_t i0 = 0;
        while (i0 < a.c_.size() && scalar_is_zero(a.c_[i0])) ++i0;
        if (i0 == a.c_.size() || scalar_is_zero(b.c_[i0])) return false;
        const K lambda = b.c_[i0] / a.c_[i0];
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (b.c_[i] != a.c_[i] * lambda) return false;
        return true;
    }

    /// Exact division by a linear form, if possible (solves L*X = this).
    std::optional<TriForm> divided_by_linear(const TriForm& l) const {
        if (l.degree() != 1 || l.is_zero() || d_ < 1) return std::nullopt;
        TriForm x(d_ - 1);
        const int nunk = static_cast<int>(x.c_.size());
        const int neq = static_cast<int>(c_.size());
        Matrix<K> sys(neq, nunk + 1);
        // L*X coefficient at (j,k) collects X(j',k') against L parts
        int eq = 0;
        for (int j = 0; j <= d_; ++j)
            for (int k = 0; j + k <= d_; ++k, ++eq) {
                // m0 part of L: contributes X(j,k) when j<=d-1-k etc.
                if (j + k <= d_ - 1) sys(eq, static_cast<int>(x.index(j, k))) += l.at(0, 0);
                if (j >= 1 && (j - 1) + k <= d_ - 1) sys(eq, static_cast<int>(x.index(j - 1, k))) += l.at(1, 0);
                if (k >= 1 && j + (k - 1) <= d_ - 1) sys(eq, static_cast<int>(x.index(j, k - 1))) += l.at(0, 1);
                sys(eq, nunk) = at(j, k);
            }
        // solve least-structured: rref on [A | b]
        std::vector<int> piv = rref(sys);
        for (int i = 0; i < neq; ++i) {
            bool all0 = true;
            for (int j = 0; j < nunk; ++j)
                if (!scalar_is_zero(sys(i, j))) {
                    all0 = false;
                    break;
                }
            if (all0 && !scalar_is_zero(sys(i, nunk))) return std::nullopt; // inconsistent
        }
        // back-substitute from rref (pivot columns give values directly)
        int r = 0;
        std::vector<K> sol(static_cast<size_t>(nunk));
        for (int c = 0; c < nunk && r < neq; ++c) {
            if (r < static_cast<int>(piv.size()) && piv[static_cast<size_t>(r)] == c) {
                sol[static_cast<size_t>(c)] = sys(r, nunk);
                ++r;
            }
        }
        TriForm out(d_ - 1);
        out.c_ = std::move(sol);
        // verify (free variables were set to zero; any consistent solution works
        // only if the division is actually exact, so check)
        if (!(l * out == *this)) return std::nullopt;
        return out;
    }

private:
    size_t index(int j, int k) const {
        // rows by j: row j has d-j+1 entries (k = 0..d-j)
        int off = j * (2 * (d_ + 1) - j + 1) / 2;
        return static_cast<size_t>(off + k);
    }
    int d_;
    std::vector<K> c_;
};

/// Determinant of a small matrix of trivariate forms by cofactor expansion.
/// Each column must carry a uniform declared degree (zero entries included),
/// so the result is homogeneous of the column-degree sum.
template <class K>
TriForm<K> tri_det(const std::vector<std::vector<TriForm<K>>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    int result_deg = 0;
    for (int j = 0; j < n; ++j) result_deg += m[0][static_cast<size_t>(j)].degree();
    TriForm<K> out(result_deg);
    for (int j = 0; j < n; ++j) {
        if (m[0][static_cast<size_t>(j)].is_zero()) continue;
        std::vector<std::vector<TriForm<K>>> sub;
        sub.reserve(static_cast<size_t>(n) - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<TriForm<K>> row;
            row.reserve(static_cast<size_t>(n) - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(k)]);
            sub.push_back(std::move(row));
        }
        TriForm<K> term = m[0][static_cast<size_t>(j)] * tri_det(sub);
        out = out + (j % 2 == 0 ? term : -term);
    }
    return out;
}

/// Resultant of two trivariate forms eliminating m2, with the Sylvester
/// structure fixed at the full homogeneous degrees. Returned as a binary form
/// of degree deg(f)*deg(g) in (m0, m1); identically zero iff the forms share
/// a component through the m2 direction.
template <class K>
BinaryForm<K> tri_resultant_m2(const TriForm<K>& f, const TriForm<K>& g) {
    const int df = f.degree(), dg = g.degree();
    const int bound = df * dg;
    std::vector<BinaryForm<K>> fc, gc;
    for (int k = 0; k <= df; ++k) fc.push_back(f.m2_coefficient(k));
    for (int k = 0; k <= dg; ++k) gc.push_back(g.m2_coefficient(k));
    const int n = df + dg;
    std::vector<K> xs, ys;
    for (int v = 0; v <= bound; ++v) {
        K y(static_cast<long>(v));
        Matrix<K> s(n, n);
        for (int i = 0; i < dg; ++i)
            for (int k = 0; k <= df; ++k) s(i, i + df - k) = fc[static_cast<size_t>(k)].eval(K(1), y);
        for (int i = 0; i < df; ++i)
            for (int k = 0; k <= dg; ++k) s(dg + i, i + dg - k) = gc[static_cast<size_t>(k)].eval(K(1), y);
        xs.push_back(y);
        ys.push_back(det(s));
    }
    return BinaryForm<K>::from_poly(UniPoly<K>::interpolate(xs, ys), bound);
}

} // namespace hm

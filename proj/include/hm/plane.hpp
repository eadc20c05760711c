#pragma once

#include <array>
#include <string>

#include "hm/exterior.hpp"
#include "hm/matrix.hpp"

namespace hm {

/// A plane in P^4 given dually by two independent covectors x*, y*, with the
/// derived 2-form omega = x* ^ y* and its Pluecker point.
template <class K>
struct PlaneSpec {
    std::array<K, kDim> x, y;
    ExteriorForm<K> omega;
    std::array<K, 10> plucker;

    PlaneSpec(std::array<K, kDim> xc, std::array<K, kDim> yc)
        : x(std::move(xc)), y(std::move(yc)), omega(2, Variance::Covectors) {
        omega = wedge(ExteriorForm<K>::covector(x), ExteriorForm<K>::covector(y));
        if (omega.is_zero()) throw ValidationError("plane covectors are linearly dependent");
        for (int i = 0; i < 10; ++i) plucker[static_cast<size_t>(i)] = omega[i];
    }

    /// Reconstructs defining covectors from a decomposable Pluecker point.
    /// The point is validated against the five quadrics first; the recovered
    /// pair is rescaled so that x* ^ y* reproduces the input exactly.
    static PlaneSpec from_plucker(const std::array<K, 10>& p) {
        ExteriorForm<K> w(2, Variance::Covectors);
        for (int i = 0; i < 10; ++i) w[i] = p[static_cast<size_t>(i)];
        if (w.is_zero()) throw ValidationError("zero Pluecker point");
        auto check = decomposable_test(w);
        if (!check.decomposable) {
            std::string msg = "Pluecker point is not decomposable; quadric values:";
            for (const auto& q : check.quadrics) msg += " " + to_string(q);
            throw ValidationError(msg);
        }
        // The antisymmetric matrix W of omega has rank 2 and its column space
        // is spanned by the two covectors.
        Matrix<K> wm(kDim, kDim);
        const auto& m2 = ext::masks(2);
        for (size_t t = 0; t < m2.size(); ++t) {
            int i = -1, j = -1;
            for (int b = 0; b < kDim; ++b)
                if (m2[t] & (1u << b)) (i < 0 ? i : j) = b;
            wm(i, j) = w[static_cast<int>(t)];
            wm(j, i) = -w[static_cast<int>(t)];
        }
        // two independent columns of W: the pivot columns of the elimination
        Elimination el = bareiss_eliminate(wm);
        if (el.rank != 2) throw InternalError("decomposable point with rank != 2");
        std::array<K, kDim> xc{}, yc{};
        int c0 = el.pivot_cols[0], c1 = el.pivot_cols[1];
        for (int b = 0; b < kDim; ++b) {
            xc[static_cast<size_t>(b)] = wm(b, c0);
            yc[static_cast<size_t>(b)] = wm(b, c1);
        }
        PlaneSpec pl(xc, yc);
        // rescale so that the derived point equals the input exactly
        K lambda(0);
        for (int i = 0; i < 10; ++i)
            if (!is_zero(p[static_cast<size_t>(i)])) {
                lambda = pl.plucker[static_cast<size_t>(i)] / p[static_cast<size_t>(i)];
                break;
            }
        if (is_zero(lambda)) throw InternalError("factored plane lost its Pluecker point");
        K inv = K(1) / lambda;
        for (auto& v : xc) v = v * inv;
        return PlaneSpec(xc, yc);
    }

    /// Same projective plane: the derived points agree up to a scalar.
    bool same_plane(const PlaneSpec& o) const {
        K lambda(0);
        for (int i = 0; i < 10; ++i) {
            const K &a = plucker[static_cast<size_t>(i)], &b = o.plucker[static_cast<size_t>(i)];
            if (is_zero(a) != is_zero(b)) return false;
            if (!is_zero(a) && is_zero(lambda)) lambda = b / a;
        }
        if (is_zero(lambda)) return false;
        for (int i = 0; i < 10; ++i)
            if (o.plucker[static_cast<size_t>(i)] != plucker[static_cast<size_t>(i)] * lambda) return false;
        return true;
    }

    template <class F>
    auto map(F f) const {
        using L = decltype(f(std::declval<const K&>()));
        std::array<L, kDim> xc, yc;
        for (int i = 0; i < kDim; ++i) {
            xc[static_cast<size_t>(i)] = f(x[static_cast<size_t>(i)]);
            yc[static_cast<size_t>(i)] = f(y[static_cast<size_t>(i)]);
        }
        return PlaneSpec<L>(xc, yc);
    }
};

/// A line in P^4 as the common zero locus of three independent covectors.
template <class K>
struct LineSpec {
    std::array<std::array<K, kDim>, 3> cov;

    explicit LineSpec(std::array<std::array<K, kDim>, 3> covectors) : cov(std::move(covectors)) {
        if (rank(annihilator_matrix()) != 3) throw ValidationError("line covectors are not independent");
    }

    Matrix<K> annihilator_matrix() const {
        Matrix<K> m(3, kDim);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < kDim; ++j) m(i, j) = cov[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return m;
    }

    /// Equality as subspaces of V*.
    bool same_line(const LineSpec& o) const {
        Matrix<K> stacked(6, kDim);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < kDim; ++j) {
                stacked(i, j) = cov[static_cast<size_t>(i)][static_cast<size_t>(j)];
                stacked(3 + i, j) = o.cov[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
        return rank(stacked) == 3;
    }

    template <class F>
    auto map(F f) const {
        using L = decltype(f(std::declval<const K&>()));
        std::array<std::array<L, kDim>, 3> c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < kDim; ++j) c[static_cast<size_t>(i)][static_cast<size_t>(j)] = f(cov[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        return LineSpec<L>(c);
    }
};

/// P contains l iff ann(P) is a subspace of ann(l).
template <class K>
bool plane_contains_line(const PlaneSpec<K>& plane, const LineSpec<K>& line) {
    Matrix<K> stacked(kDim, kDim);
    for (int j = 0; j < kDim; ++j) {
        stacked(0, j) = plane.x[static_cast<size_t>(j)];
        stacked(1, j) = plane.y[static_cast<size_t>(j)];
        for (int i = 0; i < 3; ++i) stacked(2 + i, j) = line.cov[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return rank(stacked) == 3;
}

} // namespace hm

#pragma once

#include <array>
#include <vector>

#include "hm/cyclotomic.hpp"
#include "hm/matrix.hpp"
#include "hm/plane.hpp"

namespace hm {

/// Element tau^a sigma^b zeta^c of the Heisenberg group H5 (order 125), acting
/// on V by sigma: e_i -> e_{i+1} and tau: e_i -> zeta^i e_i, with the center
/// acting by scalars.
struct GroupElement {
    int a = 0, b = 0, c = 0;

    static GroupElement identity() { return {0, 0, 0}; }
    static GroupElement sigma() { return {0, 1, 0}; }
    static GroupElement tau() { return {1, 0, 0}; }
    static GroupElement center() { return {0, 0, 1}; }
};

/// 5x5 matrix over Q(zeta_5): zeta^c tau^a sigma^b.
inline Matrix<Cyclotomic> group_matrix(const GroupElement& g) {
    Matrix<Cyclotomic> m(kDim, kDim);
    for (int i = 0; i < kDim; ++i) {
        int dst = ((i + g.b) % 5 + 5) % 5;
        m(dst, i) = Cyclotomic::zeta(g.c + g.a * dst);
    }
    return m;
}

/// Covectors transform by the inverse transpose.
inline std::array<Cyclotomic, kDim> act_on_covector(const Matrix<Cyclotomic>& inv_transpose,
                                                    const std::array<Cyclotomic, kDim>& cov) {
    std::array<Cyclotomic, kDim> out{};
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out[static_cast<size_t>(i)] += inv_transpose(i, j) * cov[static_cast<size_t>(j)];
    return out;
}

inline Matrix<Cyclotomic> inverse_transpose(const GroupElement& g) {
    return inverse(group_matrix(g)).transpose();
}

inline LineSpec<Cyclotomic> act_on_line(const GroupElement& g, const LineSpec<Cyclotomic>& line) {
    Matrix<Cyclotomic> it = inverse_transpose(g);
    std::array<std::array<Cyclotomic, kDim>, 3> cov;
    for (int i = 0; i < 3; ++i) cov[static_cast<size_t>(i)] = act_on_covector(it, line.cov[static_cast<size_t>(i)]);
    return LineSpec<Cyclotomic>(cov);
}

inline PlaneSpec<Cyclotomic> act_on_plane(const GroupElement& g, const PlaneSpec<Cyclotomic>& plane) {
    Matrix<Cyclotomic> it = inverse_transpose(g);
    return PlaneSpec<Cyclotomic>(act_on_covector(it, plane.x), act_on_covector(it, plane.y));
}

/// Dimension of the trivial-summand space of S^i(Lambda^2 V) as an H5 module:
/// (1/125) sum over the group of the trace on S^i, with the symmetric-power
/// traces produced from power sums by the Newton recursion
/// i h_i = sum_{j=1..i} p_j h_{i-j}. Exact; a non-integer result is a bug.
long trivial_summand_dim(int i);

/// Orbit of a line under <sigma, tau>, deduplicated as subspaces.
std::vector<LineSpec<Cyclotomic>> line_orbit(const LineSpec<Cyclotomic>& start);

} // namespace hm

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hm/cyclotomic.hpp"
#include "hm/matrix.hpp"
#include "hm/monad.hpp"
#include "hm/plane.hpp"
#include "hm/rational.hpp"
#include "hm/resolution.hpp"

namespace hm {

/// The restriction of the monad matrix to a plane: rows r = 0,1, columns
/// i = 0..4, entry <a_ri, omega>. In Pluecker coordinates this is
///   ( p23   p34  -p04   p01   p12 )
///   ( p14  -p02  -p13  -p24   p03 ).
template <class K>
Matrix<K> restricted_2x5(const PlaneSpec<K>& plane) {
    Matrix<K> m(2, kDim);
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < kDim; ++i) m(r, i) = full_pair(monad_form<K>(r, i), plane.omega);
    return m;
}

template <class K>
bool is_jumping_plane(const PlaneSpec<K>& plane) {
    return rank(restricted_2x5(plane)) <= 1;
}

namespace detail {

/// The ten 20x50 coefficient matrices of the parameter-linear family
/// M(p) = sum_b p_b M_base[b]: row (r, t) is the image of the t-th 3-covector
/// basis element placed in monad row r; column block i holds the coefficients
/// of contract(a_ri, phi_t) ^ omega on the 3-covector basis.
inline const std::array<Matrix<Rational>, 10>& m_base() {
    static const std::array<Matrix<Rational>, 10> tables = [] {
        std::array<Matrix<Rational>, 10> out;
        const auto& m2 = ext::masks(2);
        const auto& m3 = ext::masks(3);
        for (size_t b = 0; b < 10; ++b) {
            Matrix<Rational> mb(20, 50);
            ExteriorForm<Rational> omega = ExteriorForm<Rational>::basis(2, Variance::Covectors, m2[b]);
            for (int r = 0; r < 2; ++r)
                for (size_t t = 0; t < m3.size(); ++t) {
                    ExteriorForm<Rational> phi =
                        ExteriorForm<Rational>::basis(3, Variance::Covectors, m3[t]);
                    for (int i = 0; i < kDim; ++i) {
                        ExteriorForm<Rational> res = wedge(contract(monad_form<Rational>(r, i), phi), omega);
                        for (int u = 0; u < 10; ++u)
                            mb(r * 10 + static_cast<int>(t), i * 10 + u) = res[u];
                    }
                }
            out[b] = std::move(mb);
        }
        return out;
    }();
    return tables;
}

} // namespace detail

/// The 20x50 matrix M whose rank classifies the plane's restricted bundle.
template <class K>
Matrix<K> build_M(const std::array<K, 10>& plucker) {
    Matrix<K> m(20, 50);
    for (int b = 0; b < 10; ++b) {
        const K& p = plucker[static_cast<size_t>(b)];
        if (is_zero(p)) continue;
        const Matrix<Rational>& base = detail::m_base()[static_cast<size_t>(b)];
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 50; ++j)
                if (!base(i, j).is_zero()) m(i, j) += p * K(base(i, j));
    }
    return m;
}

template <class K>
Matrix<K> build_M(const PlaneSpec<K>& plane) {
    return build_M(plane.plucker);
}

/// The same family in parameter-linear form, for minor gradients.
template <class K>
LinearMatrixFamily<K> m_family() {
    LinearMatrixFamily<K> fam;
    fam.constant = Matrix<K>(20, 50);
    fam.coeff.reserve(10);
    for (int b = 0; b < 10; ++b)
        fam.coeff.push_back(detail::m_base()[static_cast<size_t>(b)].map([](const Rational& v) { return K(v); }));
    return fam;
}

struct RankClass {
    int rank_m;
    int h0_twist1; // 15 - rank
    std::vector<ResolutionPair> candidates;
};

/// Candidate resolutions determined by the rank of M.
inline RankClass rank_class(int rank_m) {
    RankClass out;
    out.rank_m = rank_m;
    out.h0_twist1 = 15 - rank_m;
    switch (rank_m) {
        case 15: out.candidates = {pair_generic()}; break;
        case 14: out.candidates = {pair_4_122(), pair_34_1223()}; break;
        case 13: out.candidates = {pair_5_114()}; break;
        case 12: out.candidates = {pair_5_033(), pair_45_0334()}; break;
        default:
            throw InternalError("rank of M outside [12,15]: " + std::to_string(rank_m));
    }
    return out;
}

/// The 5x6 order matrix of a line: rows i = 0..4, columns (r, s) for the two
/// monad rows against a basis {psi_1, psi_2, psi_3} of Lambda^2(ann l); entry
/// <a_ri, psi_s>. Its kernel dimension equals h^0 of the restricted bundle on
/// the line, i.e. jumping order + 1.
template <class K>
Matrix<K> line_order_matrix(const LineSpec<K>& line) {
    std::array<ExteriorForm<K>, 3> u = {ExteriorForm<K>::covector(line.cov[0]),
                                        ExteriorForm<K>::covector(line.cov[1]),
                                        ExteriorForm<K>::covector(line.cov[2])};
    std::array<ExteriorForm<K>, 3> psi = {wedge(u[0], u[1]), wedge(u[0], u[2]), wedge(u[1], u[2])};
    Matrix<K> m(kDim, 6);
    for (int i = 0; i < kDim; ++i)
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 3; ++s) m(i, r * 3 + s) = full_pair(monad_form<K>(r, i), psi[static_cast<size_t>(s)]);
    return m;
}

/// Jumping order of a line; orders above 3 contradict the classification and
/// signal a bug.
template <class K>
int jumping_order(const LineSpec<K>& line) {
    const int order = kernel_dimension(line_order_matrix(line)) - 1;
    if (order < 0 || order > 3) throw InternalError("jumping order outside [0,3]: " + std::to_string(order));
    return order;
}

/// The 25 triple-jumping lines
/// L_{k,j} = {z_k = z_{k+2} + zeta^j z_{k+3} = z_{k+1} + zeta^{3j} z_{k+4} = 0}.
inline std::vector<LineSpec<Cyclotomic>> hm_lines() {
    std::vector<LineSpec<Cyclotomic>> out;
    out.reserve(25);
    for (int k = 0; k < 5; ++k)
        for (int j = 0; j < 5; ++j) {
            std::array<std::array<Cyclotomic, kDim>, 3> cov{};
            cov[0][static_cast<size_t>(k)] = Cyclotomic(1);
            cov[1][static_cast<size_t>((k + 2) % 5)] = Cyclotomic(1);
            cov[1][static_cast<size_t>((k + 3) % 5)] = Cyclotomic::zeta(j);
            cov[2][static_cast<size_t>((k + 1) % 5)] = Cyclotomic(1);
            cov[2][static_cast<size_t>((k + 4) % 5)] = Cyclotomic::zeta(3 * j);
            out.emplace_back(cov);
        }
    return out;
}

inline LineSpec<Cyclotomic> hm_line(int k, int j) {
    return hm_lines()[static_cast<size_t>(5 * ((k % 5 + 5) % 5) + ((j % 5 + 5) % 5))];
}

} // namespace hm

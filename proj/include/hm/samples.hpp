#pragma once

#include <array>

#include "hm/plane.hpp"
#include "hm/rng.hpp"
#include "hm/strata.hpp"

namespace hm {

/// Seeded random plane from two random integer covectors (decomposable by
/// construction). Dependent draws are rare and retried.
inline PlaneSpec<Rational> random_plane(Rng& rng, long max_abs = 9) {
    while (true) {
        std::array<Rational, kDim> x, y;
        for (int j = 0; j < kDim; ++j) {
            x[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
            y[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
        }
        try {
            return PlaneSpec<Rational>(x, y);
        } catch (const ValidationError&) {
        }
    }
}

inline LineSpec<Rational> random_line(Rng& rng, long max_abs = 9) {
    while (true) {
        std::array<std::array<Rational, kDim>, 3> cov;
        for (auto& c : cov)
            for (int j = 0; j < kDim; ++j) c[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
        try {
            return LineSpec<Rational>(cov);
        } catch (const ValidationError&) {
        }
    }
}

inline PencilSpec<Rational> random_pencil(Rng& rng, long max_abs = 6) {
    while (true) {
        std::array<Rational, kDim> x, y, z;
        for (int j = 0; j < kDim; ++j) {
            x[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
            y[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
            z[static_cast<size_t>(j)] = Rational(rng.range(-max_abs, max_abs));
        }
        try {
            return PencilSpec<Rational>(x, y, z);
        } catch (const ValidationError&) {
        }
    }
}

// Marked planes of the local-dimension proposition, in the lexicographic
// Pluecker ordering (confirmed by the rank values 12/13/14 they produce).
inline PlaneSpec<Rational> plane_pi() {
    return PlaneSpec<Rational>({Rational(1), 0, 0, 0, 0}, {Rational(0), 1, 0, 0, 0});
}
inline PlaneSpec<Rational> plane_rho() {
    return PlaneSpec<Rational>({Rational(1), 0, 0, 0, 0}, {Rational(0), 1, 1, 1, 1});
}
inline PlaneSpec<Rational> plane_sigma() {
    return PlaneSpec<Rational>::from_plucker({Rational(1), 1, 0, 0, 1, 0, 0, 0, 0, 0});
}
inline PlaneSpec<Rational> plane_pi_tilde() {
    return PlaneSpec<Rational>({Rational(1), 0, 0, 0, 0}, {Rational(0), 1, 1, 1, 0});
}

/// Rank-12 plane without a triple-jumping line: a member of the pencil of
/// jumping planes through the coordinate line {z0 = z1 = z2 = 0}.
inline PlaneSpec<Rational> plane_rank12_nonconic() {
    return PlaneSpec<Rational>({Rational(1), 0, 2, 0, 0}, {Rational(0), 1, 0, 0, 0});
}

/// The coordinate line {z0 = z1 = z2 = 0}, a double jumping line whose
/// incidence locus degenerates to a line plus an external point.
inline LineSpec<Rational> line_z012() {
    return LineSpec<Rational>(std::array<std::array<Rational, kDim>, 3>{
        std::array<Rational, kDim>{Rational(1), 0, 0, 0, 0},
        std::array<Rational, kDim>{Rational(0), 1, 0, 0, 0},
        std::array<Rational, kDim>{Rational(0), 0, 1, 0, 0}});
}

/// A double jumping line with the generic incidence pattern (3 points).
inline LineSpec<Rational> line_order2_generic() {
    return LineSpec<Rational>(std::array<std::array<Rational, kDim>, 3>{
        std::array<Rational, kDim>{Rational(1), 0, 1, 0, 0},
        std::array<Rational, kDim>{Rational(0), 1, 0, 0, 0},
        std::array<Rational, kDim>{Rational(0), 0, 0, 1, -1}});
}

/// Rational points of the conic of jumping planes through L_{0,0}: the chart
/// {a = -m1, b = m2, c = -m0} carries the conic m0^2 + m1 m2 = 0,
/// parametrized by (m0 : m1 : m2) = (uv : u^2 : -v^2).
inline std::array<Rational, 3> l00_conic_point(const Rational& u, const Rational& v) {
    return {u * v, u * u, -(v * v)};
}

} // namespace hm

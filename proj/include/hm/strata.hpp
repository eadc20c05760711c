#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "hm/inplane.hpp"
#include "hm/plane.hpp"
#include "hm/poly.hpp"
#include "hm/restriction.hpp"
#include "hm/rng.hpp"

namespace hm {

namespace detail {

/// Gradients of the five Pluecker quadrics at a point, rows of a 5 x 10 matrix.
template <class K>
Matrix<K> quadric_jacobian(const std::array<K, 10>& p) {
    Matrix<K> j(kDim, 10);
    const auto& m2 = ext::masks(2);
    const auto& m4 = ext::masks(4);
    for (size_t t = 0; t < m4.size(); ++t) {
        for (size_t i = 0; i < m2.size(); ++i)
            for (size_t u = i + 1; u < m2.size(); ++u) {
                if ((m2[i] & m2[u]) != 0 || (m2[i] | m2[u]) != m4[t]) continue;
                const int sign = ext::merge_sign(m2[i], m2[u]);
                K si = sign > 0 ? p[u] : -p[u];
                K su = sign > 0 ? p[i] : -p[i];
                j(static_cast<int>(t), static_cast<int>(i)) += si;
                j(static_cast<int>(t), static_cast<int>(u)) += su;
            }
    }
    return j;
}

} // namespace detail

/// Projective tangent-space dimension of the rank-<=r stratum at a plane of
/// exact rank r: locate a nonzero r x r minor (by elimination pivots), border
/// it by one extra row and column in all ways, take gradients of those
/// bordered minors via the adjugate trace formula together with the five
/// quadric gradients, and return 9 - rank(Jacobian).
/// anchor_variant permutes the row order used by the pivot search, so the
/// invariance of the result under the anchor choice can be tested.
template <class K>
int tangent_dimension(const PlaneSpec<K>& plane, int target_rank, int anchor_variant = 0) {
    Matrix<K> m = build_M(plane);
    Matrix<K> probe = m;
    std::vector<int> roworder(20);
    for (int i = 0; i < 20; ++i) roworder[static_cast<size_t>(i)] = i;
    if (anchor_variant % 2 == 1) std::reverse(roworder.begin(), roworder.end());
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 50; ++j) probe(i, j) = m(roworder[static_cast<size_t>(i)], j);

    Elimination el = bareiss_eliminate(probe);
    if (el.rank != target_rank)
        throw ValidationError("plane has rank " + std::to_string(el.rank) + ", expected " +
                              std::to_string(target_rank));
    std::vector<int> anchor_rows;
    anchor_rows.reserve(el.pivot_rows.size());
    for (int i : el.pivot_rows) anchor_rows.push_back(roworder[static_cast<size_t>(i)]);
    std::sort(anchor_rows.begin(), anchor_rows.end());
    std::vector<int> anchor_cols = el.pivot_cols;
    if (is_zero(det(m.submatrix(anchor_rows, anchor_cols))))
        throw InternalError("anchor minor unexpectedly singular");

    const auto& base = detail::m_base();
    std::vector<std::vector<K>> jac;
    std::vector<int> rows_out, cols_out;
    for (int i = 0; i < 20; ++i)
        if (std::find(anchor_rows.begin(), anchor_rows.end(), i) == anchor_rows.end()) rows_out.push_back(i);
    for (int j = 0; j < 50; ++j)
        if (std::find(anchor_cols.begin(), anchor_cols.end(), j) == anchor_cols.end()) cols_out.push_back(j);

    for (int i : rows_out) {
        std::vector<int> rsel = anchor_rows;
        rsel.push_back(i);
        for (int j : cols_out) {
            std::vector<int> csel = anchor_cols;
            csel.push_back(j);
            Matrix<K> s = m.submatrix(rsel, csel);
            Matrix<K> adj = adjugate(s);
            std::vector<K> grad(10);
            bool nonzero = false;
            for (int b = 0; b < 10; ++b) {
                K tr(0);
                const Matrix<Rational>& mb = base[static_cast<size_t>(b)];
                const int n = static_cast<int>(rsel.size());
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const Rational& dv = mb(rsel[static_cast<size_t>(v)], csel[static_cast<size_t>(u)]);
                        if (dv.is_zero() || is_zero(adj(u, v))) continue;
                        tr += adj(u, v) * K(dv);
                    }
                if (!is_zero(tr)) nonzero = true;
                grad[static_cast<size_t>(b)] = tr;
            }
            if (nonzero) jac.push_back(std::move(grad));
        }
    }
    Matrix<K> quad = detail::quadric_jacobian(plane.plucker);
    Matrix<K> j(static_cast<int>(jac.size()) + kDim, 10);
    for (size_t i = 0; i < jac.size(); ++i)
        for (int b = 0; b < 10; ++b) j(static_cast<int>(i), b) = jac[i][static_cast<size_t>(b)];
    for (int q = 0; q < kDim; ++q)
        for (int b = 0; b < 10; ++b) j(static_cast<int>(jac.size()) + q, b) = quad(q, b);
    return 9 - rank(j);
}

/// A pencil of planes omega(s,t) = x* ^ (s y* + t z*) through the line
/// {x* = y* = z* = 0}... more precisely through the base locus of the family;
/// every member is decomposable, so the pencil is a line in G(2,4).
template <class K>
struct PencilSpec {
    std::array<K, kDim> x, y, z;

    PencilSpec(std::array<K, kDim> xc, std::array<K, kDim> yc, std::array<K, kDim> zc)
        : x(std::move(xc)), y(std::move(yc)), z(std::move(zc)) {
        Matrix<K> m(3, kDim);
        for (int j = 0; j < kDim; ++j) {
            m(0, j) = x[static_cast<size_t>(j)];
            m(1, j) = y[static_cast<size_t>(j)];
            m(2, j) = z[static_cast<size_t>(j)];
        }
        if (rank(m) != 3) throw ValidationError("pencil covectors are not independent");
    }

    PlaneSpec<K> member(const K& s, const K& t) const {
        std::array<K, kDim> w{};
        for (int j = 0; j < kDim; ++j)
            w[static_cast<size_t>(j)] = s * y[static_cast<size_t>(j)] + t * z[static_cast<size_t>(j)];
        return PlaneSpec<K>(x, w);
    }
};

enum class PencilStatus { Ok, Degenerate };

struct PencilCertificate {
    PencilStatus status = PencilStatus::Degenerate;
    int degree = -1;
    BinaryForm<Rational> certificate; // normalized: top nonzero coefficient 1
    int minors_used = 0;
    int zero_minors = 0;
};

/// Degree certificate of the rank-<=14 hypersurface along a pencil: the
/// entries of M(s,t) are homogeneous-linear in (s,t); 15x15 minors are
/// computed by evaluation-interpolation and their gcd is iterated over random
/// minors until stable for 3 consecutive draws. Pencils inside the lower
/// strata make every sampled minor vanish and are reported degenerate.
///
/// Minor selection is structured: each of the five 10-column blocks of M has
/// rank at most 3, so a nonzero 15x15 minor must take exactly 3 columns per
/// block. Unstructured 15-of-50 picks are almost always singular.
inline PencilCertificate pencil_degree(const PencilSpec<Rational>& pencil, Rng rng) {
    Matrix<Rational> m1 = build_M(plucker_from_covectors(pencil.x, pencil.y));
    Matrix<Rational> m2 = build_M(plucker_from_covectors(pencil.x, pencil.z));
    PencilCertificate out;

    // Random elements of the degree-15 part of the minor ideal: by
    // Cauchy-Binet, det(U M(s,t) V) for random integer U (15x20) and V
    // (50x15) is a random mixture of all 15x15 minors, and mixtures share
    // only the honest common divisor. Literal random minors of this M are
    // almost always singular (each 10-column block has rank 3) and
    // pivot-selected ones drag stray factors along for many draws.
    std::optional<BinaryForm<Rational>> g;
    int stable = 0;
    int degeneracy_evidence = 0;
    for (int draw = 0; draw < 40 && stable < 3; ++draw) {
        Matrix<Rational> u(15, 20), v(50, 15);
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 20; ++j) u(i, j) = Rational(rng.range(-3, 3));
        for (int i = 0; i < 50; ++i)
            for (int j = 0; j < 15; ++j) v(i, j) = Rational(rng.range(-3, 3));
        Matrix<Rational> a1 = u * m1 * v;
        Matrix<Rational> a2 = u * m2 * v;
        std::vector<std::vector<BinaryForm<Rational>>> sub(
            15, std::vector<BinaryForm<Rational>>(15, BinaryForm<Rational>()));
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    BinaryForm<Rational>(std::vector<Rational>{a1(i, j), a2(i, j)});
        BinaryForm<Rational> d = interp_det(sub);
        if (d.is_zero()) {
            out.zero_minors++;
            // distinguish an unlucky mixture from a pencil inside the lower
            // strata: probe the exact rank at a fresh parameter value
            Matrix<Rational> probe(20, 50);
            const Rational t0(rng.range(61, 120));
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 50; ++j) probe(i, j) = m1(i, j) + t0 * m2(i, j);
            if (rank(probe) < 15) {
                if (++degeneracy_evidence >= 3) {
                    out.status = PencilStatus::Degenerate;
                    return out;
                }
            }
            continue;
        }
        out.minors_used++;
        if (!g) {
            g = d;
            stable = 0;
        } else {
            BinaryForm<Rational> g2 = binary_gcd(*g, d);
            if (g2.degree() == g->degree())
                ++stable;
            else
                stable = 0;
            g = g2;
        }
    }
    if (!g || stable < 3) {
        out.status = PencilStatus::Degenerate;
        return out;
    }
    // normalize: unit top nonzero coefficient
    BinaryForm<Rational> cert = *g;
    for (int k = cert.degree(); k >= 0; --k)
        if (!cert.coeff(k).is_zero()) {
            cert = cert.scaled(cert.coeff(k).inverse());
            break;
        }
    out.status = PencilStatus::Ok;
    out.certificate = cert;
    out.degree = cert.degree();
    return out;
}

enum class IncidenceKind { Conic, FinitePoints, LinePlusPoint, Other };

inline const char* incidence_kind_name(IncidenceKind k) {
    switch (k) {
        case IncidenceKind::Conic: return "conic";
        case IncidenceKind::FinitePoints: return "finite-points";
        case IncidenceKind::LinePlusPoint: return "line-plus-point";
        case IncidenceKind::Other: return "other";
    }
    return "?";
}

/// Chart of the planes containing a fixed line: (m0:m1:m2) maps to
/// omega(m) = m0 u1^u2 - m1 u0^u2 + m2 u0^u1 for the annihilator basis
/// (u0, u1, u2); the map to Pluecker coordinates is linear.
template <class K>
struct IncidenceChart {
    LineSpec<K> line;
    std::array<ExteriorForm<K>, 3> basis2; // u1^u2, -(u0^u2), u0^u1

    explicit IncidenceChart(const LineSpec<K>& l)
        : line(l),
          basis2{wedge(ExteriorForm<K>::covector(l.cov[1]), ExteriorForm<K>::covector(l.cov[2])),
                 -wedge(ExteriorForm<K>::covector(l.cov[0]), ExteriorForm<K>::covector(l.cov[2])),
                 wedge(ExteriorForm<K>::covector(l.cov[0]), ExteriorForm<K>::covector(l.cov[1]))} {}

    ExteriorForm<K> omega_at(const std::array<K, 3>& m) const {
        ExteriorForm<K> w(2, Variance::Covectors);
        for (int s = 0; s < 3; ++s) w = w + basis2[static_cast<size_t>(s)].scaled(m[static_cast<size_t>(s)]);
        return w;
    }

    std::array<K, 10> plucker_at(const std::array<K, 3>& m) const {
        ExteriorForm<K> w = omega_at(m);
        std::array<K, 10> p;
        for (int i = 0; i < 10; ++i) p[static_cast<size_t>(i)] = w[i];
        return p;
    }

    PlaneSpec<K> plane_at(const std::array<K, 3>& m) const {
        return PlaneSpec<K>::from_plucker(plucker_at(m));
    }

    /// The 3-dimensional span of the chart image inside K^10 (for
    /// distinguishing incidence planes of different lines).
    Matrix<K> span() const {
        Matrix<K> s(3, 10);
        for (int r = 0; r < 3; ++r)
            for (int i = 0; i < 10; ++i) s(r, i) = basis2[static_cast<size_t>(r)][i];
        return s;
    }
};

template <class K>
struct IncidenceReport {
    IncidenceKind kind = IncidenceKind::Other;
    std::string note;
    std::vector<TriForm<K>> quadrics; // nonzero restricted 2x2 minors
    // conic case
    std::optional<TriForm<K>> conic;
    int gram_rank = 0;
    // finite case
    int count = 0;
    std::vector<std::pair<std::array<K, 3>, int>> points;
    // line-plus-point case
    std::optional<std::array<K, 3>> line_coeffs; // L(m) = l0 m0 + l1 m1 + l2 m2
    std::optional<std::array<K, 3>> extra_point;
};

/// Classification of the jumping-plane locus inside the incidence chart of a
/// line: the ten 2x2 minors of the restricted matrix become quadrics in m.
template <class K>
IncidenceReport<K> incidence_analysis(const LineSpec<K>& line, Rng rng) {
    IncidenceChart<K> chart(line);
    IncidenceReport<K> out;

    // entries of the restricted 2x5 as linear forms in m
    std::array<std::array<TriForm<K>, kDim>, 2> ent{};
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < kDim; ++i) {
            std::array<K, 3> c;
            for (int s = 0; s < 3; ++s)
                c[static_cast<size_t>(s)] = full_pair(monad_form<K>(r, i), chart.basis2[static_cast<size_t>(s)]);
            ent[static_cast<size_t>(r)][static_cast<size_t>(i)] = TriForm<K>::linear(c);
        }
    for (int c1 = 0; c1 < kDim; ++c1)
        for (int c2 = c1 + 1; c2 < kDim; ++c2) {
            TriForm<K> q = ent[0][static_cast<size_t>(c1)] * ent[1][static_cast<size_t>(c2)] +
                           (-(ent[0][static_cast<size_t>(c2)] * ent[1][static_cast<size_t>(c1)]));
            if (!q.is_zero()) out.quadrics.push_back(std::move(q));
        }

    if (out.quadrics.empty()) {
        out.kind = IncidenceKind::Other;
        out.note = "all restricted quadrics vanish: every plane through the line is jumping";
        return out;
    }

    // conic case: all nonzero quadrics proportional
    bool all_prop = true;
    for (size_t i = 1; i < out.quadrics.size(); ++i)
        if (!TriForm<K>::proportional(out.quadrics[0], out.quadrics[i])) {
            all_prop = false;
            break;
        }
    if (all_prop) {
        const TriForm<K>& q = out.quadrics[0];
        Matrix<K> gram(3, 3);
        const K half = K(1) / K(2);
        gram(0, 0) = q.at(0, 0);
        gram(1, 1) = q.at(2, 0);
        gram(2, 2) = q.at(0, 2);
        gram(0, 1) = gram(1, 0) = q.at(1, 0) * half;
        gram(0, 2) = gram(2, 0) = q.at(0, 1) * half;
        gram(1, 2) = gram(2, 1) = q.at(1, 1) * half;
        out.gram_rank = rank(gram);
        out.conic = q;
        if (out.gram_rank == 3) {
            out.kind = IncidenceKind::Conic;
        } else {
            out.kind = IncidenceKind::Other;
            out.note = "single quadric of Gram rank " + std::to_string(out.gram_rank);
        }
        return out;
    }

    TriSystem<K> sys = solve_triform_system(out.quadrics, rng.fork());
    if (sys.status == TriSystem<K>::Status::Finite || sys.status == TriSystem<K>::Status::Empty) {
        out.kind = IncidenceKind::FinitePoints;
        out.count = sys.count;
        out.points = sys.points;
        return out;
    }
    if (sys.status != TriSystem<K>::Status::PositiveDimensional) {
        out.kind = IncidenceKind::Other;
        out.note = "system solver inconclusive";
        return out;
    }

    // positive-dimensional: hunt for a common linear factor of all quadrics
    // by sampling the locus on random lines
    std::vector<std::array<K, 3>> samples;
    for (int probe = 0; probe < 8 && samples.size() < 3; ++probe) {
        std::array<K, 3> a = {K(rng.range(-5, 5)), K(rng.range(-5, 5)), K(rng.range(-5, 5))};
        std::array<K, 3> b = {K(rng.range(-5, 5)), K(rng.range(-5, 5)), K(rng.range(-5, 5))};
        // restrict each quadric to the line u a + v b: binary quadratic
        UniPoly<K> common;
        bool first = true;
        for (const auto& q : out.quadrics) {
            K qa = q.eval(a[0], a[1], a[2]);
            K qb = q.eval(b[0], b[1], b[2]);
            std::array<K, 3> ab = {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
            K cross = q.eval(ab[0], ab[1], ab[2]) - qa - qb;
            UniPoly<K> restr(std::vector<K>{qa, cross, qb}); // in v/u
            if (restr.is_zero()) continue;
            common = first ? restr : poly_gcd(common, restr);
            first = false;
            if (common.degree() == 0) break;
        }
        if (first || common.degree() < 1) continue;
        for (const auto& [root, mult] : roots_in_field(common)) {
            (void)mult;
            std::array<K, 3> pt;
            for (int i = 0; i < 3; ++i) pt[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + root * b[static_cast<size_t>(i)];
            bool on_locus = true;
            for (const auto& q : out.quadrics)
                if (!is_zero(q.eval(pt[0], pt[1], pt[2]))) {
                    on_locus = false;
                    break;
                }
            if (!on_locus) continue;
            auto normd = detail::normalize_projective(pt);
            bool dup = false;
            for (const auto& s : samples)
                if (s == normd) dup = true;
            if (!dup) samples.push_back(normd);
        }
    }
    if (samples.size() >= 2) {
        // line through the first two samples: L = kernel of the 2x3 matrix
        Matrix<K> two(2, 3);
        for (int i = 0; i < 3; ++i) {
            two(0, i) = samples[0][static_cast<size_t>(i)];
            two(1, i) = samples[1][static_cast<size_t>(i)];
        }
        auto ker = kernel_basis(two);
        if (ker.size() == 1) {
            TriForm<K> lf = TriForm<K>::linear({ker[0][0], ker[0][1], ker[0][2]});
            std::vector<TriForm<K>> cofactors;
            bool divides_all = true;
            for (const auto& q : out.quadrics) {
                auto quot = q.divided_by_linear(lf);
                if (!quot) {
                    divides_all = false;
                    break;
                }
                cofactors.push_back(std::move(*quot));
            }
            if (divides_all) {
                // residual point: common zero of the linear cofactors
                Matrix<K> cof(static_cast<int>(cofactors.size()), 3);
                for (size_t i = 0; i < cofactors.size(); ++i) {
                    cof(static_cast<int>(i), 0) = cofactors[i].at(0, 0);
                    cof(static_cast<int>(i), 1) = cofactors[i].at(1, 0);
                    cof(static_cast<int>(i), 2) = cofactors[i].at(0, 1);
                }
                auto cker = kernel_basis(cof);
                if (cker.size() == 1) {
                    out.kind = IncidenceKind::LinePlusPoint;
                    out.line_coeffs = {ker[0][0], ker[0][1], ker[0][2]};
                    out.extra_point =
                        detail::normalize_projective(std::array<K, 3>{cker[0][0], cker[0][1], cker[0][2]});
                    return out;
                }
            }
        }
    }
    out.kind = IncidenceKind::Other;
    out.note = "positive-dimensional locus without a clean line-plus-point split";
    return out;
}

/// Incidence analysis of each of the 25 triple-jumping lines; all must come
/// back as smooth conics.
inline std::vector<IncidenceReport<Cyclotomic>> hm_conics(Rng rng) {
    std::vector<IncidenceReport<Cyclotomic>> out;
    out.reserve(25);
    for (const auto& line : hm_lines()) out.push_back(incidence_analysis(line, rng.fork()));
    return out;
}

} // namespace hm

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hm/plane.hpp"
#include "hm/restriction.hpp"
#include "hm/rng.hpp"
#include "hm/roots.hpp"
#include "hm/triform.hpp"

namespace hm {

/// Outcome of solving a system of homogeneous trivariate forms on P^2 by the
/// resultant protocol: random same-degree combinations of the generators,
/// pairwise resultants after a seeded generic coordinate change, and a
/// stabilized gcd of the eliminants.
template <class K>
struct TriSystem {
    enum class Status {
        AllZero,             // every generator vanishes identically
        Empty,               // no solutions
        Finite,              // 0-dimensional locus
        PositiveDimensional, // resultants of random ideal elements vanish identically
        Inconclusive         // protocol failed to stabilize
    };
    Status status = Status::Inconclusive;
    int count = 0; // degree of the stabilized eliminant (with multiplicity)
    std::vector<std::pair<std::array<K, 3>, int>> points; // base-field points, multiplicity
};

namespace detail {

template <class K>
std::array<K, 3> normalize_projective(std::array<K, 3> p) {
    for (const auto& v : p)
        if (!is_zero(v)) {
            K inv = K(1) / v;
            for (auto& w : p) w = w * inv;
            return p;
        }
    return p;
}

template <class K>
TriForm<K> random_padding(Rng& rng) {
    while (true) {
        std::array<K, 3> c = {K(rng.range(-3, 3)), K(rng.range(-3, 3)), K(rng.range(-3, 3))};
        if (!is_zero(c[0]) || !is_zero(c[1]) || !is_zero(c[2])) return TriForm<K>::linear(c);
    }
}

/// Random element of the ideal, padded to a uniform degree by random linear
/// factors so that mixed-degree generator sets stay homogeneous.
template <class K>
TriForm<K> random_combo(const std::vector<TriForm<K>>& forms, int target_deg, Rng& rng) {
    TriForm<K> out(target_deg);
    for (const auto& f : forms) {
        long c = rng.range(-5, 5);
        if (c == 0) continue;
        TriForm<K> term = f.scaled(K(c));
        while (term.degree() < target_deg) term = term * random_padding<K>(rng);
        out = out + term;
    }
    return out;
}

} // namespace detail

template <class K>
TriSystem<K> solve_triform_system(const std::vector<TriForm<K>>& forms_in, Rng rng) {
    TriSystem<K> out;
    std::vector<TriForm<K>> forms;
    for (const auto& f : forms_in)
        if (!f.is_zero()) forms.push_back(f);
    if (forms.empty()) {
        out.status = TriSystem<K>::Status::AllZero;
        return out;
    }
    int dmax = 0;
    for (const auto& f : forms) dmax = std::max(dmax, f.degree());

    for (int attempt = 0; attempt < 4; ++attempt) {
        // seeded generic coordinate change m = T m'
        std::array<std::array<K, 3>, 3> t;
        while (true) {
            long d00 = rng.range(-3, 3), d01 = rng.range(-3, 3), d02 = rng.range(-3, 3);
            long d10 = rng.range(-3, 3), d11 = rng.range(-3, 3), d12 = rng.range(-3, 3);
            long d20 = rng.range(-3, 3), d21 = rng.range(-3, 3), d22 = rng.range(-3, 3);
            long det3 = d00 * (d11 * d22 - d12 * d21) - d01 * (d10 * d22 - d12 * d20) +
                        d02 * (d10 * d21 - d11 * d20);
            if (det3 == 0) continue;
            t = {std::array<K, 3>{K(d00), K(d01), K(d02)}, std::array<K, 3>{K(d10), K(d11), K(d12)},
                 std::array<K, 3>{K(d20), K(d21), K(d22)}};
            break;
        }
        std::vector<TriForm<K>> tf;
        tf.reserve(forms.size());
        for (const auto& f : forms) tf.push_back(f.substituted(t));

        auto draw_combo = [&]() -> std::optional<TriForm<K>> {
            for (int tries = 0; tries < 12; ++tries) {
                TriForm<K> u = detail::random_combo(tf, dmax, rng);
                if (u.is_zero()) continue;
                if (is_zero(u.at(0, dmax))) continue; // full m2-degree required
                return u;
            }
            return std::nullopt;
        };

        std::optional<BinaryForm<K>> g;
        int stable = 0, zero_streak = 0;
        bool gave_up = false;
        for (int draw = 0; draw < 20 && stable < 3; ++draw) {
            auto u = draw_combo();
            auto v = draw_combo();
            if (!u || !v) {
                gave_up = true;
                break;
            }
            BinaryForm<K> r = tri_resultant_m2(*u, *v);
            if (r.is_zero()) {
                if (++zero_streak >= 3) {
                    out.status = TriSystem<K>::Status::PositiveDimensional;
                    return out;
                }
                continue;
            }
            zero_streak = 0;
            if (!g) {
                g = r;
                stable = 0;
            } else {
                BinaryForm<K> g2 = binary_gcd(*g, r);
                if (g2.degree() == g->degree())
                    ++stable;
                else
                    stable = 0;
                g = g2;
            }
        }
        if (gave_up || !g || stable < 3) continue; // retry with a fresh transform

        if (g->degree() == 0) {
            out.status = TriSystem<K>::Status::Empty;
            out.count = 0;
            return out;
        }
        out.status = TriSystem<K>::Status::Finite;
        out.count = g->degree();

        // lift the base-field roots of the eliminant through the fibers
        for (const auto& [root, mult] : binary_roots_in_field(*g)) {
            const K& alpha = root.first;
            const K& beta = root.second;
            UniPoly<K> fiber;
            bool first = true;
            for (const auto& f : tf) {
                std::vector<K> c(static_cast<size_t>(f.degree()) + 1);
                for (int k = 0; k <= f.degree(); ++k)
                    c[static_cast<size_t>(k)] = f.m2_coefficient(k).eval(alpha, beta);
                UniPoly<K> p(std::move(c));
                if (p.is_zero()) continue;
                fiber = first ? p : poly_gcd(fiber, p);
                first = false;
                if (fiber.degree() == 0) break;
            }
            if (first || fiber.degree() <= 0) continue;
            for (const auto& [gamma, gmult] : roots_in_field(fiber)) {
                (void)gmult;
                std::array<K, 3> mp = {alpha, beta, gamma};
                // back to the original coordinates and verify on the raw system
                std::array<K, 3> m{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        m[static_cast<size_t>(i)] += t[static_cast<size_t>(i)][static_cast<size_t>(j)] * mp[static_cast<size_t>(j)];
                bool ok = true;
                for (const auto& f : forms)
                    if (!is_zero(f.eval(m[0], m[1], m[2]))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto normd = detail::normalize_projective(m);
                bool dup = false;
                for (const auto& [q, qm] : out.points)
                    if (q == normd) {
                        dup = true;
                        break;
                    }
                if (!dup) out.points.emplace_back(normd, mult);
            }
        }
        return out;
    }
    out.status = TriSystem<K>::Status::Inconclusive;
    return out;
}

enum class LocusStatus { Empty, Finite, PositiveDimensional, AllLines, Inconclusive };

inline const char* locus_status_name(LocusStatus s) {
    switch (s) {
        case LocusStatus::Empty: return "empty";
        case LocusStatus::Finite: return "finite";
        case LocusStatus::PositiveDimensional: return "positive-dimensional";
        case LocusStatus::AllLines: return "all-lines";
        case LocusStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

template <class K>
struct InPlaneWitness {
    std::array<K, 3> dual_point; // (m0:m1:m2) in the plane of lines
    LineSpec<K> line;
    int order;
    int multiplicity;
};

template <class K>
struct InPlaneSearch {
    LocusStatus status = LocusStatus::Inconclusive;
    int count = 0; // total with multiplicity, degree of the 0-dim locus
    std::vector<InPlaneWitness<K>> witnesses;
    std::array<std::array<K, kDim>, 3> complement{}; // the chart basis used
};

/// Lines of jumping order >= min_order inside a plane. Lines are charted by
/// the dual plane: ann(l) = span(x*, y*, m0 w0* + m1 w1* + m2 w2*) for a
/// deterministic complement basis (w0*, w1*, w2*). Order >= q cuts the locus
/// where the 5x6 order matrix drops to rank <= 5 - q, i.e. where all
/// (6-q)-minors vanish.
template <class K>
InPlaneSearch<K> find_jumping_lines_in_plane(const PlaneSpec<K>& plane, int min_order, Rng rng) {
    if (min_order < 1 || min_order > 3) throw ValidationError("min_order must be 1, 2 or 3");
    InPlaneSearch<K> out;

    // complement basis: first standard covectors independent from x*, y*
    std::vector<std::array<K, kDim>> comp;
    for (int cand = 0; cand < kDim && comp.size() < 3; ++cand) {
        Matrix<K> probe(3 + static_cast<int>(comp.size()), kDim);
        for (int j = 0; j < kDim; ++j) {
            probe(0, j) = plane.x[static_cast<size_t>(j)];
            probe(1, j) = plane.y[static_cast<size_t>(j)];
            for (size_t s = 0; s < comp.size(); ++s) probe(2 + static_cast<int>(s), j) = comp[s][static_cast<size_t>(j)];
            probe(2 + static_cast<int>(comp.size()), j) = K(cand == j ? 1 : 0);
        }
        if (rank(probe) == 3 + static_cast<int>(comp.size())) {
            std::array<K, kDim> w{};
            w[static_cast<size_t>(cand)] = K(1);
            comp.push_back(w);
        }
    }
    if (comp.size() != 3) throw InternalError("complement basis construction failed");
    for (int i = 0; i < 3; ++i) out.complement[static_cast<size_t>(i)] = comp[static_cast<size_t>(i)];

    // 5x6 parametric order matrix: columns (r,0) constant, (r,1) = <a, x^w(m)>,
    // (r,2) = <a, y^w(m)>, each linear in m.
    ExteriorForm<K> xf = ExteriorForm<K>::covector(plane.x);
    ExteriorForm<K> yf = ExteriorForm<K>::covector(plane.y);
    std::array<ExteriorForm<K>, 3> wf = {ExteriorForm<K>::covector(comp[0]),
                                         ExteriorForm<K>::covector(comp[1]),
                                         ExteriorForm<K>::covector(comp[2])};
    ExteriorForm<K> xy = wedge(xf, yf);
    std::vector<std::vector<TriForm<K>>> entries(kDim, std::vector<TriForm<K>>(6, TriForm<K>(0)));
    for (int i = 0; i < kDim; ++i)
        for (int r = 0; r < 2; ++r) {
            ExteriorForm<K> a = monad_form<K>(r, i);
            entries[static_cast<size_t>(i)][static_cast<size_t>(r * 3)] = TriForm<K>::constant(full_pair(a, xy));
            std::array<K, 3> cx{}, cy{};
            for (int s = 0; s < 3; ++s) {
                cx[static_cast<size_t>(s)] = full_pair(a, wedge(xf, wf[static_cast<size_t>(s)]));
                cy[static_cast<size_t>(s)] = full_pair(a, wedge(yf, wf[static_cast<size_t>(s)]));
            }
            entries[static_cast<size_t>(i)][static_cast<size_t>(r * 3 + 1)] = TriForm<K>::linear(cx);
            entries[static_cast<size_t>(i)][static_cast<size_t>(r * 3 + 2)] = TriForm<K>::linear(cy);
        }

    // all (6-q) x (6-q) minors
    const int size = 6 - min_order;
    std::vector<TriForm<K>> minors;
    auto choose = [](int n, int k) {
        std::vector<std::vector<int>> sets;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == k) {
                sets.push_back(cur);
                return;
            }
            for (int i = start; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return sets;
    };
    for (const auto& rows : choose(kDim, size))
        for (const auto& cols : choose(6, size)) {
            std::vector<std::vector<TriForm<K>>> sub;
            sub.reserve(rows.size());
            for (int i : rows) {
                std::vector<TriForm<K>> row;
                row.reserve(cols.size());
                for (int j : cols) row.push_back(entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                sub.push_back(std::move(row));
            }
            TriForm<K> d = tri_det(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        }

    if (minors.empty()) {
        out.status = LocusStatus::AllLines;
        return out;
    }

    TriSystem<K> sys = solve_triform_system(minors, rng);
    switch (sys.status) {
        case TriSystem<K>::Status::AllZero: out.status = LocusStatus::AllLines; break;
        case TriSystem<K>::Status::Empty: out.status = LocusStatus::Empty; break;
        case TriSystem<K>::Status::Finite: out.status = LocusStatus::Finite; break;
        case TriSystem<K>::Status::PositiveDimensional:
            out.status = LocusStatus::PositiveDimensional;
            break;
        case TriSystem<K>::Status::Inconclusive: out.status = LocusStatus::Inconclusive; break;
    }
    out.count = sys.count;

    for (const auto& [m, mult] : sys.points) {
        std::array<K, kDim> w{};
        for (int s = 0; s < 3; ++s)
            for (int j = 0; j < kDim; ++j)
                w[static_cast<size_t>(j)] += m[static_cast<size_t>(s)] * comp[static_cast<size_t>(s)][static_cast<size_t>(j)];
        LineSpec<K> line(std::array<std::array<K, kDim>, 3>{plane.x, plane.y, w});
        const int order = jumping_order(line);
        if (order < min_order) throw InternalError("in-plane witness fails its order bound");
        out.witnesses.push_back(InPlaneWitness<K>{m, line, order, mult});
    }
    return out;
}

} // namespace hm

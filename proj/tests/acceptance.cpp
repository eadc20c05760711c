// Acceptance suite: runs every criterion of the certification contract and
// prints one [PASS]/[FAIL] line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hm/classify.hpp"
#include "hm/heisenberg.hpp"
#include "hm/inplane.hpp"
#include "hm/primefield.hpp"
#include "hm/roots.hpp"
#include "hm/samples.hpp"
#include "hm/strata.hpp"

using namespace hm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void run(int id, const std::string& name, double budget_seconds,
         const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_seconds;
    bool ok = out.pass && in_budget;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.2fs / budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), secs, budget_seconds, out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    std::fflush(stdout);
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// shared corpora, built once
struct Corpus {
    std::vector<PlaneSpec<Rational>> random_planes;  // 200, seeded
    std::vector<PlaneSpec<Rational>> conic_planes;   // rational points on the L00 conic
    std::vector<PlaneSpec<Rational>> curated;
    LineSpec<Rational> l00q;

    Corpus()
        : l00q(std::array<std::array<Rational, kDim>, 3>{
              std::array<Rational, kDim>{Rational(1), 0, 0, 0, 0},
              std::array<Rational, kDim>{Rational(0), 0, 1, 1, 0},
              std::array<Rational, kDim>{Rational(0), 1, 0, 0, 1}}) {
        Rng rng(424201);
        for (int i = 0; i < 200; ++i) random_planes.push_back(random_plane(rng));
        IncidenceChart<Rational> chart(l00q);
        for (long u = -3; u <= 3; ++u)
            for (long v = 1; v <= 3; ++v)
                conic_planes.push_back(chart.plane_at(l00_conic_point(Rational(u), Rational(v))));
        curated = {plane_pi(), plane_rho(), plane_sigma(), plane_pi_tilde(), plane_rank12_nonconic()};
    }
};

const Corpus& corpus() {
    static Corpus c;
    return c;
}

// ---------- criterion bodies ----------

Outcome c1_pairs() {
    auto pairs = enumerate_pairs();
    std::vector<ResolutionPair> expected = {pair_5_033(), pair_45_0334(),  pair_5_114(),
                                            pair_4_122(), pair_34_1223(), pair_generic()};
    std::sort(expected.begin(), expected.end());
    if (pairs != expected) return fail("pair list mismatch");
    return {};
}

Outcome c2_tables() {
    const std::vector<std::pair<ResolutionPair, std::vector<long>>> rows = {
        {pair_45_0334(), {1, 3, 6, 12}}, {pair_5_033(), {1, 3, 6, 12}},
        {pair_5_114(), {0, 2, 6, 12}},   {pair_34_1223(), {0, 1, 5, 12}},
        {pair_4_122(), {0, 1, 5, 12}},   {pair_generic(), {0, 0, 5, 12}}};
    for (const auto& [p, want] : rows)
        if (p.cohomology_table(3) != want) return fail("table mismatch at " + p.label());
    if (pair_5_033().cohomology_table(3) != pair_45_0334().cohomology_table(3))
        return fail("unstable couple tables differ");
    if (pair_4_122().cohomology_table(3) != pair_34_1223().cohomology_table(3))
        return fail("stable couple tables differ");
    return {};
}

Outcome c3_ranks() {
    if (rank(build_M(plane_pi())) != 12) return fail("rank at pi != 12");
    if (rank(build_M(plane_rho())) != 13) return fail("rank at rho != 13");
    if (rank(build_M(plane_sigma())) != 14) return fail("rank at sigma != 14");
    Rng rng(31415);
    for (int i = 0; i < 100; ++i)
        if (rank(build_M(random_plane(rng))) != 15)
            return fail("seeded random plane missed rank 15 at index " + std::to_string(i));
    return {};
}

Outcome c4_equivalence() {
    int idx = 0;
    for (const auto& plane : corpus().random_planes) {
        if (is_jumping_plane(plane) != (rank(build_M(plane)) == 12))
            return fail("equivalence broken on random plane " + std::to_string(idx));
        ++idx;
    }
    for (const auto& plane : corpus().conic_planes) {
        if (!is_jumping_plane(plane) || rank(build_M(plane)) != 12)
            return fail("conic sample not a rank-12 jumping plane");
    }
    return {};
}

Outcome c5_h0() {
    auto check_plane = [](const PlaneSpec<Rational>& plane) -> bool {
        int r = rank(build_M(plane));
        RankClass rc = rank_class(r);
        if (rc.h0_twist1 != 15 - r || rc.h0_twist1 < 0 || rc.h0_twist1 > 3) return false;
        for (const auto& cand : rc.candidates)
            if (cand.cohomology_table(1)[1] != rc.h0_twist1) return false;
        return true;
    };
    for (const auto& plane : corpus().curated)
        if (!check_plane(plane)) return fail("curated plane h0 mismatch");
    for (const auto& plane : corpus().conic_planes)
        if (!check_plane(plane)) return fail("conic plane h0 mismatch");
    for (const auto& plane : corpus().random_planes)
        if (!check_plane(plane)) return fail("random plane h0 mismatch");
    return {};
}

Outcome c6_hm_lines() {
    auto lines = hm_lines();
    if (lines.size() != 25) return fail("expected 25 lines");
    for (const auto& line : lines)
        if (jumping_order(line) != 3) return fail("an explicit line is not of order 3");
    auto orbit = line_orbit(hm_line(0, 0));
    if (orbit.size() != 25) return fail("orbit size " + std::to_string(orbit.size()));
    for (const auto& o : orbit) {
        bool found = false;
        for (const auto& l : lines) found = found || o.same_line(l);
        if (!found) return fail("orbit member not among the explicit equations");
    }
    return {};
}

Outcome c7_l00_incidence() {
    Rng rng(2718);
    IncidenceReport<Rational> rep = incidence_analysis(corpus().l00q, rng.fork());
    if (rep.kind != IncidenceKind::Conic) return fail("kind != conic");
    if (rep.gram_rank != 3) return fail("conic not smooth (gram rank != 3)");
    IncidenceChart<Rational> chart(corpus().l00q);
    for (const auto& plane : corpus().conic_planes)
        if (rank(build_M(plane)) != 12) return fail("conic point not rank 12");
    int off = 0;
    for (long m0 = -2; m0 <= 2 && off < 10; ++m0)
        for (long m1 = -1; m1 <= 1 && off < 10; ++m1) {
            std::array<Rational, 3> m = {Rational(m0), Rational(m1), Rational(1)};
            if (rep.conic->eval(m[0], m[1], m[2]).is_zero()) continue;
            if (rank(build_M(chart.plane_at(m))) != 13) return fail("off-conic point not rank 13");
            ++off;
        }
    if (off < 10) return fail("not enough off-conic samples");
    return {};
}

Outcome c8_tangent() {
    if (tangent_dimension(plane_pi(), 12) != 2) return fail("dim at pi != 2");
    if (tangent_dimension(plane_rho(), 13) != 2) return fail("dim at rho != 2");
    if (tangent_dimension(plane_sigma(), 14) != 5) return fail("dim at sigma != 5");
    return {};
}

Outcome c9_pencils() {
    Rng rng(1618);
    int certified = 0, reported_degenerate = 0, attempts = 0;
    while (certified < 5 && attempts < 12) {
        ++attempts;
        PencilCertificate cert = pencil_degree(random_pencil(rng), rng.fork());
        if (cert.status == PencilStatus::Degenerate) {
            ++reported_degenerate; // reported, not counted
            continue;
        }
        if (cert.degree != 5)
            return fail("generic pencil certified degree " + std::to_string(cert.degree));
        ++certified;
    }
    if (certified < 5) return fail("could not certify 5 generic pencils");
    // a pencil inside the jumping stratum must be reported degenerate
    PencilSpec<Rational> inside({Rational(0), 1, 0, 0, 0}, {Rational(-1), 0, 0, 0, 0},
                                {Rational(0), 0, -1, 0, 0});
    if (pencil_degree(inside, rng.fork()).status != PencilStatus::Degenerate)
        return fail("degenerate pencil not reported");
    return {true, "5 certified, " + std::to_string(reported_degenerate) + " degenerate reported"};
}

Outcome c10_invariants() {
    for (int i = 1; i <= 4; ++i)
        if (trivial_summand_dim(i) != 0) return fail("S^" + std::to_string(i) + " has invariants");
    long d5 = trivial_summand_dim(5); // integrality and nonnegativity enforced inside
    if (d5 <= 0) return fail("S^5 invariants not positive");
    return {true, "dims (0,0,0,0," + std::to_string(d5) + ")"};
}

Outcome c11_equivariance() {
    Rng rng(9273);
    auto random_g = [&rng] {
        return GroupElement{static_cast<int>(rng.below(5)), static_cast<int>(rng.below(5)),
                            static_cast<int>(rng.below(5))};
    };
    auto promote_plane = [](const PlaneSpec<Rational>& p) {
        return p.map([](const Rational& v) { return Cyclotomic(v); });
    };
    auto promote_line = [](const LineSpec<Rational>& l) {
        return l.map([](const Rational& v) { return Cyclotomic(v); });
    };
    for (int i = 0; i < 20; ++i) {
        PlaneSpec<Rational> plane = (i < 3) ? corpus().curated[static_cast<size_t>(i)]
                                            : random_plane(rng, 4);
        GroupElement g = random_g();
        PlaneSpec<Cyclotomic> moved = act_on_plane(g, promote_plane(plane));
        if (rank(build_M(moved)) != rank(build_M(plane)))
            return fail("rank not invariant at sample " + std::to_string(i));
        if (is_jumping_plane(moved) != is_jumping_plane(plane))
            return fail("jumping flag not invariant at sample " + std::to_string(i));
    }
    for (int i = 0; i < 10; ++i) {
        LineSpec<Rational> line = (i == 0) ? line_z012() : random_line(rng, 4);
        GroupElement g = random_g();
        if (jumping_order(act_on_line(g, promote_line(line))) != jumping_order(line))
            return fail("line order not invariant at sample " + std::to_string(i));
    }
    return {};
}

Outcome c12_census() {
    Rng rng(5150);
    // (a) a seeded generic rank-15 plane has order-1 count 6 with multiplicity
    PlaneSpec<Rational> generic = random_plane(rng);
    if (rank(build_M(generic)) != 15) return fail("seeded plane not rank 15");
    InPlaneSearch<Rational> s1 = find_jumping_lines_in_plane(generic, 1, rng.fork());
    if (s1.status != LocusStatus::Finite || s1.count != 6)
        return fail("generic order-1 census: status " + std::string(locus_status_name(s1.status)) +
                    ", count " + std::to_string(s1.count));
    // (b) pi-tilde classifies as (4)(1,2,2) with max in-plane order 1
    StratumReport<Rational> rep = classify_resolution(plane_pi_tilde(), rng.fork());
    if (!rep.resolved || !(*rep.resolved == pair_4_122())) return fail("pi-tilde resolution wrong");
    InPlaneSearch<Rational> s2 = find_jumping_lines_in_plane(plane_pi_tilde(), 2, rng.fork());
    if (s2.status != LocusStatus::Empty) return fail("pi-tilde has an order-2 line");
    InPlaneSearch<Rational> s1b = find_jumping_lines_in_plane(plane_pi_tilde(), 1, rng.fork());
    if (s1b.status != LocusStatus::Finite || s1b.count != 6 || s1b.witnesses.empty())
        return fail("pi-tilde order-1 census broken");
    for (const auto& w : s1b.witnesses)
        if (w.order != 1) return fail("pi-tilde witness of order != 1");
    // (c) a rank-12 non-conic plane exhibits an order-2 line
    PlaneSpec<Rational> nc = plane_rank12_nonconic();
    if (rank(build_M(nc)) != 12) return fail("curated plane not rank 12");
    StratumReport<Rational> ncrep = classify_resolution(nc, rng.fork());
    if (!ncrep.resolved || !(*ncrep.resolved == pair_5_033()))
        return fail("curated plane is not a (5)(0,3,3) plane");
    InPlaneSearch<Rational> s3 = find_jumping_lines_in_plane(nc, 2, rng.fork());
    if (s3.status != LocusStatus::Finite || s3.count <= 0 || s3.witnesses.empty())
        return fail("no order-2 line found in the rank-12 plane");
    for (const auto& w : s3.witnesses)
        if (w.order < 2) return fail("witness below order 2");
    return {};
}

Outcome c13_order2_incidence() {
    Rng rng(6174);
    PlaneSpec<Rational> nc = plane_rank12_nonconic();
    InPlaneSearch<Rational> s = find_jumping_lines_in_plane(nc, 2, rng.fork());
    if (s.witnesses.empty()) return fail("no discovered order-2 line to analyze");
    int finite_pattern = 0, degenerate_pattern = 0;
    for (const auto& w : s.witnesses) {
        IncidenceReport<Rational> rep = incidence_analysis(w.line, rng.fork());
        IncidenceChart<Rational> chart(w.line);
        if (rep.kind == IncidenceKind::FinitePoints) {
            if (rep.count != 3) return fail("finite incidence count != 3");
            if (rep.points.empty()) return fail("no incidence points recovered");
            for (const auto& [m, mult] : rep.points) {
                (void)mult;
                if (!is_jumping_plane(chart.plane_at(m))) return fail("incidence point not jumping");
            }
            ++finite_pattern;
        } else if (rep.kind == IncidenceKind::LinePlusPoint) {
            if (!rep.line_coeffs || !rep.extra_point) return fail("degeneration without data");
            if (!is_jumping_plane(chart.plane_at(*rep.extra_point)))
                return fail("external point not jumping");
            ++degenerate_pattern;
        } else {
            return fail(std::string("mislabeled incidence: ") + incidence_kind_name(rep.kind));
        }
    }
    return {true, std::to_string(finite_pattern) + " three-point, " +
                      std::to_string(degenerate_pattern) + " line-plus-point"};
}

// ---------- criterion 14: the property suite ----------

struct Property {
    std::string name;
    bool pass;
};

std::vector<Property> property_suite() {
    std::vector<Property> out;
    auto prop = [&out](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception&) {
            ok = false;
        }
        out.push_back({name, ok});
        std::fprintf(stderr, "  property: %-58s %s\n", name.c_str(), ok ? "ok" : "FAILED");
    };

    prop("scalar field axioms, 1000 trials x 3 fields", [] {
        Rng rng(1001);
        for (int i = 0; i < 1000; ++i) {
            Rational a = rng.rational(20, 7), b = rng.rational(20, 7), c = rng.rational(20, 7);
            if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return false;
            if (!a.is_zero() && !(a * a.inverse()).is_one()) return false;
            Cyclotomic x(rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4));
            Cyclotomic y(rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4));
            Cyclotomic z(rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4));
            if ((x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z) return false;
            if (!x.is_zero() && x * x.inverse() != Cyclotomic(1)) return false;
            Fp u(rng.below(kDefaultCheckPrime), kDefaultCheckPrime);
            Fp v(rng.below(kDefaultCheckPrime), kDefaultCheckPrime);
            Fp w(rng.below(kDefaultCheckPrime), kDefaultCheckPrime);
            if ((u * v) * w != u * (v * w) || u * (v + w) != u * v + u * w) return false;
        }
        return true;
    });

    prop("prime-field embedding is a ring homomorphism, 1000 trials", [] {
        Rng rng(1002);
        Fp zeta = primitive_fifth_root(kDefaultCheckPrime);
        for (int i = 0; i < 1000; ++i) {
            Rational a = rng.rational(30, 11), b = rng.rational(30, 11);
            if (embed_to_prime_field(a * b, kDefaultCheckPrime) !=
                embed_to_prime_field(a, kDefaultCheckPrime) * embed_to_prime_field(b, kDefaultCheckPrime))
                return false;
            Cyclotomic x(rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3));
            Cyclotomic y(rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3));
            if (embed_to_prime_field(x + y, zeta) !=
                embed_to_prime_field(x, zeta) + embed_to_prime_field(y, zeta))
                return false;
        }
        return true;
    });

    prop("cyclotomic canonical form: x - x = 0, 1000 trials", [] {
        Rng rng(1003);
        for (int i = 0; i < 1000; ++i) {
            Cyclotomic x(rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4));
            if (!(x - x).is_zero()) return false;
        }
        return true;
    });

    prop("wedge graded anticommutativity, 1000 trials", [] {
        Rng rng(1004);
        for (int i = 0; i < 1000; ++i) {
            int p = static_cast<int>(rng.below(3)) + 1;
            int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(kDim - p))) + 1;
            ExteriorForm<Rational> a(p, Variance::Covectors), b(q, Variance::Covectors);
            for (int t = 0; t < kBinom[static_cast<size_t>(p)]; ++t) a[t] = Rational(rng.range(-6, 6));
            for (int t = 0; t < kBinom[static_cast<size_t>(q)]; ++t) b[t] = Rational(rng.range(-6, 6));
            if (wedge(a, b) != wedge(b, a).scaled(Rational((p * q) % 2 == 0 ? 1 : -1))) return false;
        }
        return true;
    });

    prop("derived Pluecker points are decomposable, 1000 trials", [] {
        Rng rng(1005);
        for (int i = 0; i < 1000; ++i) {
            PlaneSpec<Rational> plane = random_plane(rng);
            if (!decomposable_test(plane.omega).decomposable) return false;
        }
        return true;
    });

    prop("contraction and pairing are bilinear, 1000 trials", [] {
        Rng rng(1006);
        for (int i = 0; i < 1000; ++i) {
            ExteriorForm<Rational> a(2, Variance::Vectors);
            ExteriorForm<Rational> f(3, Variance::Covectors), g(3, Variance::Covectors);
            for (int t = 0; t < 10; ++t) {
                a[t] = Rational(rng.range(-5, 5));
                f[t] = Rational(rng.range(-5, 5));
                g[t] = Rational(rng.range(-5, 5));
            }
            if (contract(a, f + g) != contract(a, f) + contract(a, g)) return false;
            ExteriorForm<Rational> p(2, Variance::Covectors), q(2, Variance::Covectors);
            for (int t = 0; t < 10; ++t) {
                p[t] = Rational(rng.range(-5, 5));
                q[t] = Rational(rng.range(-5, 5));
            }
            if (full_pair(a, p + q) != full_pair(a, p) + full_pair(a, q)) return false;
        }
        return true;
    });

    prop("monad forms are decomposable and shift cyclically", [] {
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < 5; ++i)
                if (!decomposable_test(monad_form<Rational>(r, i)).decomposable) return false;
        return true;
    });

    prop("rank invariances and kernel dimension, 1000 trials", [] {
        Rng rng(1007);
        for (int i = 0; i < 1000; ++i) {
            int rows = static_cast<int>(rng.below(5)) + 2, cols = static_cast<int>(rng.below(6)) + 2;
            Matrix<Rational> m(rows, cols);
            for (int a = 0; a < rows; ++a)
                for (int b = 0; b < cols; ++b) m(a, b) = Rational(rng.range(-8, 8));
            int r = rank(m);
            if (rank(m.transpose()) != r) return false;
            Matrix<Rational> p = m;
            p.swap_rows(0, rows - 1);
            if (rank(p) != r) return false;
            Matrix<Rational> s = m;
            Rational f = rng.nonzero_int(5);
            for (int b = 0; b < cols; ++b) s(0, b) *= f;
            if (rank(s) != r) return false;
            if (static_cast<int>(kernel_basis(m).size()) + r != cols) return false;
        }
        return true;
    });

    prop("Bareiss determinant equals cofactor expansion, 1000 trials", [] {
        Rng rng(1008);
        std::function<Rational(const Matrix<Rational>&)> cof = [&](const Matrix<Rational>& m) {
            int n = m.rows();
            if (n == 1) return m(0, 0);
            Rational out;
            std::vector<int> rows;
            for (int i = 1; i < n; ++i) rows.push_back(i);
            for (int j = 0; j < n; ++j) {
                std::vector<int> cols;
                for (int k = 0; k < n; ++k)
                    if (k != j) cols.push_back(k);
                Rational term = m(0, j) * cof(m.submatrix(rows, cols));
                out += (j % 2 == 0) ? term : -term;
            }
            return out;
        };
        for (int i = 0; i < 1000; ++i) {
            int n = static_cast<int>(rng.below(5)) + 1;
            Matrix<Rational> m(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) m(a, b) = Rational(rng.range(-6, 6));
            if (det(m) != cof(m)) return false;
        }
        return true;
    });

    prop("interp_det well-posedness at fresh points, 1000 trials", [] {
        Rng rng(1009);
        for (int i = 0; i < 1000; ++i) {
            std::vector<std::vector<BinaryForm<Rational>>> m(
                3, std::vector<BinaryForm<Rational>>(3, BinaryForm<Rational>()));
            for (auto& row : m)
                for (auto& e : row)
                    e = BinaryForm<Rational>(
                        std::vector<Rational>{Rational(rng.range(-6, 6)), Rational(rng.range(-6, 6))});
            BinaryForm<Rational> d = interp_det(m);
            for (long t = 20; t < 22; ++t) {
                Matrix<Rational> num(3, 3);
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b)
                        num(a, b) = m[static_cast<size_t>(a)][static_cast<size_t>(b)].eval(Rational(1), Rational(t));
                if (d.eval(Rational(1), Rational(t)) != det(num)) return false;
            }
        }
        return true;
    });

    prop("gcd degree invariances, 1000 trials", [] {
        Rng rng(1010);
        for (int i = 0; i < 1000; ++i) {
            auto mk = [&rng](int deg) {
                std::vector<Rational> c(static_cast<size_t>(deg) + 1);
                for (auto& v : c) v = Rational(rng.range(-6, 6));
                if (c.back().is_zero()) c.back() = Rational(1);
                return UniPoly<Rational>(std::move(c));
            };
            UniPoly<Rational> a = mk(4), b = mk(3);
            UniPoly<Rational> g = poly_gcd(a, b);
            if (poly_gcd(b, a) != g) return false;
            if (poly_gcd(a.scaled(Rational(-3, 7)), b) != g) return false;
        }
        return true;
    });

    prop("squarefree part of distinct linear products, 1000 trials", [] {
        Rng rng(1011);
        for (int i = 0; i < 1000; ++i) {
            std::vector<long> roots;
            UniPoly<Rational> prod = UniPoly<Rational>::constant(Rational(1));
            UniPoly<Rational> expect = prod;
            for (int k = 0; k < 3; ++k) {
                long r = rng.range(-6, 6);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                roots.push_back(r);
                UniPoly<Rational> lin({Rational(-r), Rational(1)});
                int mult = static_cast<int>(rng.below(3)) + 1;
                for (int e = 0; e < mult; ++e) prod = prod * lin;
                expect = expect * lin;
            }
            if (squarefree_part(prod) != expect.monic()) return false;
        }
        return true;
    });

    prop("resultant root-set symmetry, 300 trials", [] {
        Rng rng(1012);
        for (int i = 0; i < 300; ++i) {
            std::vector<std::vector<Rational>> fg(3, std::vector<Rational>(3)), gg = fg;
            for (auto& row : fg)
                for (auto& v : row) v = Rational(rng.range(-4, 4));
            for (auto& row : gg)
                for (auto& v : row) v = Rational(rng.range(-4, 4));
            BiPoly<Rational> f(std::move(fg)), g(std::move(gg));
            if (f.is_zero() || g.is_zero()) continue;
            auto r1 = resultant(f, g, 'y');
            auto r2 = resultant(g, f, 'y');
            if (r1.identically_zero != r2.identically_zero) return false;
            if (!r1.identically_zero && r1.value != r2.value && r1.value != -r2.value) return false;
        }
        return true;
    });

    prop("six pairs, bound stability, conditions and couples re-verify", [] {
        auto pairs = enumerate_pairs();
        if (pairs.size() != 6 || enumerate_pairs(2) != pairs) return false;
        for (const auto& p : pairs)
            if (!p.valid()) return false;
        return pair_5_033().cohomology_table(3) == pair_45_0334().cohomology_table(3) &&
               pair_4_122().cohomology_table(3) == pair_34_1223().cohomology_table(3);
    });

    prop("rank in {12..15} and jumping iff rank 12, 500 samples + curated", [] {
        Rng rng(1013);
        for (int i = 0; i < 500; ++i) {
            PlaneSpec<Rational> plane = random_plane(rng);
            int r = rank(build_M(plane));
            if (r < 12 || r > 15) return false;
            if (is_jumping_plane(plane) != (r == 12)) return false;
        }
        for (const auto& plane : corpus().curated) {
            int r = rank(build_M(plane));
            if (r < 12 || r > 15) return false;
            if (is_jumping_plane(plane) != (r == 12)) return false;
        }
        for (const auto& plane : corpus().conic_planes)
            if (rank(build_M(plane)) != 12 || !is_jumping_plane(plane)) return false;
        return true;
    });

    prop("rank of M invariant under plane basis change, 100 trials", [] {
        Rng rng(1014);
        for (int i = 0; i < 100; ++i) {
            PlaneSpec<Rational> plane = random_plane(rng);
            long a = 0, b = 0, c = 0, d = 0;
            while (a * d - b * c == 0) {
                a = rng.range(-4, 4);
                b = rng.range(-4, 4);
                c = rng.range(-4, 4);
                d = rng.range(-4, 4);
            }
            std::array<Rational, kDim> nx, ny;
            for (int j = 0; j < kDim; ++j) {
                nx[static_cast<size_t>(j)] =
                    Rational(a) * plane.x[static_cast<size_t>(j)] + Rational(b) * plane.y[static_cast<size_t>(j)];
                ny[static_cast<size_t>(j)] =
                    Rational(c) * plane.x[static_cast<size_t>(j)] + Rational(d) * plane.y[static_cast<size_t>(j)];
            }
            if (rank(build_M(PlaneSpec<Rational>(nx, ny))) != rank(build_M(plane))) return false;
        }
        return true;
    });

    prop("heisenberg equivariance of rank and order on samples", [] {
        Rng rng(1015);
        auto rg = [&rng] {
            return GroupElement{static_cast<int>(rng.below(5)), static_cast<int>(rng.below(5)),
                                static_cast<int>(rng.below(5))};
        };
        for (int i = 0; i < 20; ++i) {
            PlaneSpec<Rational> plane = random_plane(rng, 3);
            PlaneSpec<Cyclotomic> pc = plane.map([](const Rational& v) { return Cyclotomic(v); });
            GroupElement g = rg();
            if (rank(build_M(act_on_plane(g, pc))) != rank(build_M(plane))) return false;
        }
        for (int i = 0; i < 10; ++i) {
            LineSpec<Rational> line = random_line(rng, 3);
            LineSpec<Cyclotomic> lc = line.map([](const Rational& v) { return Cyclotomic(v); });
            if (jumping_order(act_on_line(rg(), lc)) != jumping_order(line)) return false;
        }
        return true;
    });

    prop("rank-12 planes carry jumping lines", [] {
        Rng rng(1016);
        IncidenceChart<Rational> chart(corpus().l00q);
        std::vector<PlaneSpec<Rational>> planes = {
            plane_pi(), plane_rank12_nonconic(),
            chart.plane_at(l00_conic_point(Rational(1), Rational(1))),
            chart.plane_at(l00_conic_point(Rational(2), Rational(1)))};
        for (const auto& plane : planes) {
            InPlaneSearch<Rational> s = find_jumping_lines_in_plane(plane, 1, rng.fork());
            bool nonempty = (s.status == LocusStatus::Finite && s.count > 0) ||
                            s.status == LocusStatus::PositiveDimensional ||
                            s.status == LocusStatus::AllLines;
            if (!nonempty) return false;
        }
        return true;
    });

    prop("tangent dimension anchor invariance", [] {
        return tangent_dimension(plane_pi(), 12, 0) == tangent_dimension(plane_pi(), 12, 1) &&
               tangent_dimension(plane_rho(), 13, 0) == tangent_dimension(plane_rho(), 13, 1) &&
               tangent_dimension(plane_sigma(), 14, 0) == tangent_dimension(plane_sigma(), 14, 1);
    });

    prop("pencil certificate divides extra sampled minors", [] {
        Rng rng(1017);
        PencilSpec<Rational> pencil = random_pencil(rng);
        PencilCertificate cert = pencil_degree(pencil, rng.fork());
        if (cert.status != PencilStatus::Ok) return false;
        Matrix<Rational> m1 = build_M(plucker_from_covectors(pencil.x, pencil.y));
        Matrix<Rational> m2 = build_M(plucker_from_covectors(pencil.x, pencil.z));
        int sampled = 0;
        for (int extra = 0; extra < 15 && sampled < 5; ++extra) {
            const long t0 = rng.range(-40, 40);
            std::vector<int> roworder(20), colorder(50);
            for (int i = 0; i < 20; ++i) roworder[static_cast<size_t>(i)] = i;
            for (int i = 0; i < 50; ++i) colorder[static_cast<size_t>(i)] = i;
            for (int i = 0; i < 19; ++i) {
                int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(20 - i)));
                std::swap(roworder[static_cast<size_t>(i)], roworder[static_cast<size_t>(j)]);
            }
            for (int i = 0; i < 49; ++i) {
                int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(50 - i)));
                std::swap(colorder[static_cast<size_t>(i)], colorder[static_cast<size_t>(j)]);
            }
            Matrix<Rational> probe(20, 50);
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 50; ++j)
                    probe(i, j) = m1(roworder[static_cast<size_t>(i)], colorder[static_cast<size_t>(j)]) +
                                  Rational(t0) * m2(roworder[static_cast<size_t>(i)], colorder[static_cast<size_t>(j)]);
            Elimination el = bareiss_eliminate(probe);
            if (el.rank < 15) continue;
            std::vector<int> rows, cols;
            for (int i : el.pivot_rows) rows.push_back(roworder[static_cast<size_t>(i)]);
            for (int ci : el.pivot_cols) cols.push_back(colorder[static_cast<size_t>(ci)]);
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            std::vector<std::vector<BinaryForm<Rational>>> sub(
                15, std::vector<BinaryForm<Rational>>(15, BinaryForm<Rational>()));
            for (int i = 0; i < 15; ++i)
                for (int j = 0; j < 15; ++j)
                    sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = BinaryForm<Rational>(
                        std::vector<Rational>{m1(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]),
                                              m2(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)])});
            BinaryForm<Rational> minor = interp_det(sub);
            if (minor.is_zero()) continue;
            ++sampled;
            if (binary_gcd(cert.certificate, minor).degree() != cert.certificate.degree()) return false;
        }
        return sampled == 5;
    });

    prop("conic points jumping iff on the conic (L00 chart)", [] {
        Rng rng(1018);
        IncidenceReport<Rational> rep = incidence_analysis(corpus().l00q, rng.fork());
        if (rep.kind != IncidenceKind::Conic) return false;
        IncidenceChart<Rational> chart(corpus().l00q);
        for (long m0 = -3; m0 <= 3; ++m0)
            for (long m1 = -2; m1 <= 2; ++m1)
                for (long m2 = 1; m2 <= 2; ++m2) {
                    std::array<Rational, 3> m = {Rational(m0), Rational(m1), Rational(m2)};
                    bool on_conic = rep.conic->eval(m[0], m[1], m[2]).is_zero();
                    if (is_jumping_plane(chart.plane_at(m)) != on_conic) return false;
                }
        return true;
    });

    prop("25 smooth conics with pairwise distinct spans", [] {
        Rng rng(1019);
        auto reports = hm_conics(rng.fork());
        if (reports.size() != 25) return false;
        for (const auto& rep : reports)
            if (rep.kind != IncidenceKind::Conic || rep.gram_rank != 3) return false;
        auto lines = hm_lines();
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j) {
                IncidenceChart<Cyclotomic> ci(lines[i]), cj(lines[j]);
                Matrix<Cyclotomic> stacked(6, 10);
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 10; ++c) {
                        stacked(r, c) = ci.span()(r, c);
                        stacked(3 + r, c) = cj.span()(r, c);
                    }
                if (rank(stacked) <= 3) return false;
            }
        return true;
    });

    prop("heisenberg relation, orbit 25, stabilizer 5", [] {
        Matrix<Cyclotomic> t = group_matrix(GroupElement::tau());
        Matrix<Cyclotomic> s = group_matrix(GroupElement::sigma());
        if (!(t * s * inverse(t) * inverse(s) == group_matrix(GroupElement::center()))) return false;
        auto orbit = line_orbit(hm_line(0, 0));
        if (orbit.size() != 25) return false;
        int stab = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c)
                    if (act_on_line(GroupElement{a, b, c}, hm_line(0, 0)).same_line(hm_line(0, 0)))
                        ++stab;
        return stab == 5;
    });

    prop("trivial summands vanish away from multiples of 5 (i = 1..9)", [] {
        for (int i = 1; i <= 9; ++i) {
            long d = trivial_summand_dim(i); // integrality checked inside
            if (i % 5 != 0 && d != 0) return false;
            if (i % 5 == 0 && d <= 0) return false;
        }
        return true;
    });

    return out;
}

Outcome c14_properties() {
    auto props = property_suite();
    int failed = 0;
    std::string names;
    for (const auto& p : props)
        if (!p.pass) {
            ++failed;
            names += (names.empty() ? "" : "; ") + p.name;
        }
    if (failed) return fail(std::to_string(failed) + " properties failed: " + names);
    return {true, std::to_string(props.size()) + " properties"};
}

} // namespace

int main() {
    std::printf("acceptance suite: exact classification toolkit\n");
    run(1, "pair enumeration returns exactly the six pairs", 1.0, c1_pairs);
    run(2, "cohomology tables match with coinciding couples", 1.0, c2_tables);
    run(3, "rank of M: 12/13/14 at marked points, 15 at 100 random planes", 30.0, c3_ranks);
    run(4, "jumping iff rank 12 on 200 random + conic samples", 120.0, c4_equivalence);
    run(5, "15 - rank equals the classified h0(E(1)) on the corpus", 120.0, c5_h0);
    run(6, "25 HM lines: orbit matches equations, all of order 3", 30.0, c6_hm_lines);
    run(7, "incidence of L00: smooth conic, rank 12 on / 13 off", 60.0, c7_l00_incidence);
    run(8, "tangent dimensions (2, 2, 5) at (pi, rho, sigma)", 300.0, c8_tangent);
    run(9, "five generic pencils certify degree 5; degenerate reported", 300.0, c9_pencils);
    run(10, "invariant dimensions 0 for i = 1..4, positive at i = 5", 60.0, c10_invariants);
    run(11, "equivariance of rank, jumping flag and line order", 600.0, c11_equivariance);
    run(12, "in-plane jumping census (generic 6; pi-tilde; rank-12 witness)", 360.0, c12_census);
    run(13, "incidence of discovered order-2 lines: 3 points or line+point", 120.0, c13_order2_incidence);
    run(14, "module property suite at fixed seeds", 600.0, c14_properties);
    if (g_failures == 0)
        std::printf("all 14 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

#include "doctest.h"

#include "hm/roots.hpp"
#include "hm/rng.hpp"
#include "hm/samples.hpp"
#include "hm/strata.hpp"

using namespace hm;

namespace {

LineSpec<Rational> l00_rational() {
    return LineSpec<Rational>(std::array<std::array<Rational, kDim>, 3>{
        std::array<Rational, kDim>{Rational(1), 0, 0, 0, 0},
        std::array<Rational, kDim>{Rational(0), 0, 1, 1, 0},
        std::array<Rational, kDim>{Rational(0), 1, 0, 0, 1}});
}

} // namespace

TEST_CASE("tangent dimensions at the marked points") {
    CHECK(tangent_dimension(plane_pi(), 12) == 2);
    CHECK(tangent_dimension(plane_rho(), 13) == 2);
    CHECK(tangent_dimension(plane_sigma(), 14) == 5);
}

TEST_CASE("tangent dimension is anchor independent") {
    for (int variant = 0; variant < 2; ++variant) {
        CHECK(tangent_dimension(plane_pi(), 12, variant) == 2);
        CHECK(tangent_dimension(plane_rho(), 13, variant) == 2);
        CHECK(tangent_dimension(plane_sigma(), 14, variant) == 5);
    }
}

TEST_CASE("tangent dimension checks its rank precondition") {
    CHECK_THROWS_AS(tangent_dimension(plane_pi(), 13), ValidationError);
    CHECK_THROWS_AS(tangent_dimension(plane_sigma(), 15), ValidationError);
}

TEST_CASE("pencil certificates have degree five") {
    Rng rng(81);
    for (int trial = 0; trial < 2; ++trial) {
        PencilSpec<Rational> pencil = random_pencil(rng);
        PencilCertificate cert = pencil_degree(pencil, rng.fork());
        REQUIRE(cert.status == PencilStatus::Ok);
        CHECK(cert.degree == 5);
        CHECK(cert.minors_used >= 4);
    }
}

TEST_CASE("the certificate divides extra sampled minors") {
    Rng rng(82);
    PencilSpec<Rational> pencil = random_pencil(rng);
    PencilCertificate cert = pencil_degree(pencil, rng.fork());
    REQUIRE(cert.status == PencilStatus::Ok);
    Matrix<Rational> m1 = build_M(plucker_from_covectors(pencil.x, pencil.y));
    Matrix<Rational> m2 = build_M(plucker_from_covectors(pencil.x, pencil.z));
    int sampled = 0;
    for (int extra = 0; extra < 12 && sampled < 5; ++extra) {
        // pivot-selected literal minor at a random probe
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
        for (int c : el.pivot_cols) cols.push_back(colorder[static_cast<size_t>(c)]);
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        std::vector<std::vector<BinaryForm<Rational>>> sub(15, std::vector<BinaryForm<Rational>>(15, BinaryForm<Rational>()));
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                sub[static_cast<size_t>(i)][static_cast<size_t>(j)] = BinaryForm<Rational>(
                    std::vector<Rational>{m1(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]),
                                          m2(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)])});
        BinaryForm<Rational> minor = interp_det(sub);
        if (minor.is_zero()) continue;
        ++sampled;
        BinaryForm<Rational> g = binary_gcd(cert.certificate, minor);
        CHECK(g.degree() == cert.certificate.degree()); // cert | minor
    }
    CHECK(sampled == 5);
}

TEST_CASE("pencils inside the jumping stratum are reported degenerate") {
    // members (s e0* + t e2*) ^ e1* all lie in the rank-12 stratum
    PencilSpec<Rational> pencil({Rational(0), 1, 0, 0, 0}, {Rational(-1), 0, 0, 0, 0},
                                {Rational(0), 0, -1, 0, 0});
    Rng rng(83);
    PencilCertificate cert = pencil_degree(pencil, rng.fork());
    CHECK(cert.status == PencilStatus::Degenerate);
}

TEST_CASE("planes inside a fixed hyperplane form a degenerate family") {
    // every member of e0* ^ (s y* + t z*) is a plane of the hyperplane z0 = 0;
    // the whole family sits in the rank-<=14 locus and must be reported, not
    // assigned a fake degree
    PencilSpec<Rational> inside({Rational(1), 0, 0, 0, 0}, {Rational(0), 1, 1, 1, 0},
                                {Rational(0), 0, 0, 0, 1});
    Rng rng(89);
    CHECK(pencil_degree(inside, rng.fork()).status == PencilStatus::Degenerate);
    for (long t = 0; t <= 3; ++t)
        CHECK(rank(build_M(inside.member(Rational(1), Rational(t)))) <= 14);
}

TEST_CASE("certificate roots land in the deeper strata") {
    // transverse pencil through pi-tilde: omega(1,0) has rank 14, so
    // (s:t) = (1:0) is a root of the certificate
    PencilSpec<Rational> pencil({Rational(0), 1, 1, 1, 0}, {Rational(1), 0, 0, 0, 0},
                                {Rational(0), 1, 0, 0, -1});
    Rng rng(84);
    PencilCertificate cert = pencil_degree(pencil, rng.fork());
    REQUIRE(cert.status == PencilStatus::Ok);
    CHECK(cert.degree == 5);
    auto roots = binary_roots_in_field(cert.certificate);
    REQUIRE_FALSE(roots.empty());
    bool saw_pitilde = false;
    for (const auto& [st, mult] : roots) {
        (void)mult;
        const auto& [s, t] = st;
        PlaneSpec<Rational> member = pencil.member(s, t);
        CHECK(rank(build_M(member)) <= 14); // substitute-and-check
        if (t.is_zero()) saw_pitilde = true;
    }
    CHECK(saw_pitilde);
}

TEST_CASE("incidence of L00 is the smooth conic in the derived chart") {
    Rng rng(85);
    IncidenceReport<Rational> rep = incidence_analysis(l00_rational(), rng.fork());
    REQUIRE(rep.kind == IncidenceKind::Conic);
    CHECK(rep.gram_rank == 3);

    // chart relations: p14 = p23 = 0, p01 = p04, p02 = p03, p13 = p12 = -p24 = -p34
    IncidenceChart<Rational> chart(l00_rational());
    auto pidx = [](int i, int j) {
        static const int tab[5][5] = {{-1, 0, 1, 2, 3},
                                      {0, -1, 4, 5, 6},
                                      {1, 4, -1, 7, 8},
                                      {2, 5, 7, -1, 9},
                                      {3, 6, 8, 9, -1}};
        return tab[i][j];
    };
    for (int s = 0; s < 3; ++s) {
        const auto& b = chart.basis2[static_cast<size_t>(s)];
        CHECK(b[pidx(1, 4)].is_zero());
        CHECK(b[pidx(2, 3)].is_zero());
        CHECK(b[pidx(0, 1)] == b[pidx(0, 4)]);
        CHECK(b[pidx(0, 2)] == b[pidx(0, 3)]);
        CHECK(b[pidx(1, 3)] == b[pidx(1, 2)]);
        CHECK(b[pidx(1, 3)] == -b[pidx(2, 4)]);
        CHECK(b[pidx(1, 3)] == -b[pidx(3, 4)]);
    }
    // with a = p01, b = p02, c = p13 linear in m, the conic is ab - c^2
    REQUIRE(rep.conic.has_value());
    TriForm<Rational> a(1), bq(1), c(1);
    for (int s = 0; s < 3; ++s) {
        std::array<Rational, 3> ca{}, cb{}, cc{};
        ca[static_cast<size_t>(s)] = chart.basis2[static_cast<size_t>(s)][pidx(0, 1)];
        cb[static_cast<size_t>(s)] = chart.basis2[static_cast<size_t>(s)][pidx(0, 2)];
        cc[static_cast<size_t>(s)] = chart.basis2[static_cast<size_t>(s)][pidx(1, 3)];
        a = a + TriForm<Rational>::linear(ca);
        bq = bq + TriForm<Rational>::linear(cb);
        c = c + TriForm<Rational>::linear(cc);
    }
    TriForm<Rational> ab_cc = a * bq + (-(c * c));
    CHECK(TriForm<Rational>::proportional(*rep.conic, ab_cc));

    // points on the conic are jumping planes, points off it are not
    for (long u = -2; u <= 2; ++u)
        for (long v = 1; v <= 2; ++v) {
            auto m = l00_conic_point(Rational(u), Rational(v));
            CHECK(rep.conic->eval(m[0], m[1], m[2]).is_zero());
            CHECK(is_jumping_plane(chart.plane_at(m)));
            CHECK(rank(build_M(chart.plane_at(m))) == 12);
        }
    int off_checked = 0;
    for (long m0 = -2; m0 <= 2 && off_checked < 6; ++m0)
        for (long m1 = -1; m1 <= 1 && off_checked < 6; ++m1) {
            std::array<Rational, 3> m = {Rational(m0), Rational(m1), Rational(1)};
            if (rep.conic->eval(m[0], m[1], m[2]).is_zero()) continue;
            CHECK_FALSE(is_jumping_plane(chart.plane_at(m)));
            CHECK(rank(build_M(chart.plane_at(m))) == 13);
            ++off_checked;
        }
    CHECK(off_checked == 6);
}

TEST_CASE("incidence of a generic double line: three points") {
    Rng rng(86);
    LineSpec<Rational> line = line_order2_generic();
    REQUIRE(jumping_order(line) == 2);
    IncidenceReport<Rational> rep = incidence_analysis(line, rng.fork());
    REQUIRE(rep.kind == IncidenceKind::FinitePoints);
    CHECK(rep.count == 3);
    CHECK_FALSE(rep.points.empty());
    IncidenceChart<Rational> chart(line);
    for (const auto& [m, mult] : rep.points) {
        (void)mult;
        PlaneSpec<Rational> plane = chart.plane_at(m);
        CHECK(is_jumping_plane(plane));
        CHECK(rank(build_M(plane)) == 12);
    }
}

TEST_CASE("incidence of the coordinate double line degenerates to line plus point") {
    Rng rng(87);
    LineSpec<Rational> line = line_z012();
    REQUIRE(jumping_order(line) == 2);
    IncidenceReport<Rational> rep = incidence_analysis(line, rng.fork());
    REQUIRE(rep.kind == IncidenceKind::LinePlusPoint);
    REQUIRE(rep.line_coeffs.has_value());
    REQUIRE(rep.extra_point.has_value());
    IncidenceChart<Rational> chart(line);
    // the whole line consists of jumping planes
    const auto& lc = *rep.line_coeffs;
    int on_line = 0;
    for (long u = -3; u <= 3; ++u)
        for (long v = -3; v <= 3; ++v) {
            if (u == 0 && v == 0) continue;
            // solve lc . m = 0 within a small grid
            std::array<Rational, 3> m{};
            if (!lc[0].is_zero()) {
                m = {-(lc[1] * Rational(u) + lc[2] * Rational(v)) / lc[0], Rational(u), Rational(v)};
            } else if (!lc[1].is_zero()) {
                m = {Rational(u), -(lc[2] * Rational(v)) / lc[1], Rational(v)};
            } else {
                m = {Rational(u), Rational(v), Rational(0)};
            }
            if (m[0].is_zero() && m[1].is_zero() && m[2].is_zero()) continue;
            CHECK(is_jumping_plane(chart.plane_at(m)));
            ++on_line;
            if (on_line > 8) break;
        }
    CHECK(on_line >= 8);
    // the residual point is jumping and lies off the line
    const auto& ep = *rep.extra_point;
    CHECK(is_jumping_plane(chart.plane_at(ep)));
    Rational pairing = lc[0] * ep[0] + lc[1] * ep[1] + lc[2] * ep[2];
    CHECK_FALSE(pairing.is_zero()); // external
}

TEST_CASE("all 25 incidence loci are smooth conics with distinct spans") {
    Rng rng(88);
    auto reports = hm_conics(rng.fork());
    REQUIRE(reports.size() == 25);
    for (const auto& rep : reports) {
        CHECK(rep.kind == IncidenceKind::Conic);
        CHECK(rep.gram_rank == 3);
    }
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
            CHECK(rank(stacked) > 3); // distinct incidence planes in P^9
        }
}

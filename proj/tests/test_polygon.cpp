#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bendix/duality.hpp"
#include "bendix/polygon.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/rng.hpp"

using namespace bendix;

namespace {

Edge basis_edge(double r, int dim, int axis) {
    ComplexVector w = ComplexVector::Zero(dim);
    w(axis) = 1.0;
    return Edge(r, w);
}

// su(2) embedding of a planar vector plus the trace shift that makes the
// edge rank-one positive semidefinite.
Edge planar_edge(double x1, double x2) {
    const double r = std::hypot(x1, x2);
    const ComplexMatrix e = duality::hat(Eigen::Vector3d(x1, x2, 0.0)) +
                            0.5 * r * ComplexMatrix::Identity(2, 2);
    return Edge(r, linalg::eig_hermitian(e).vectors.col(0));
}

}  // namespace

TEST_CASE("strong triangle inequalities") {
    CHECK(polygon::check_triangle_inequalities(
              SideLengths(1, std::vector<double>{1, 1, 1}))
              .satisfied);
    const auto bad = polygon::check_triangle_inequalities(
        SideLengths(1, std::vector<double>{3, 1, 1}));
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.violated == std::vector<int>{1});
    CHECK(polygon::check_triangle_inequalities(
              SideLengths(2, std::vector<double>(6, 1.0)))
              .satisfied);
}

TEST_CASE("closure defect of an equilateral planar triangle") {
    const double s32 = std::sqrt(3.0) / 2.0;
    Polygon p(1, {planar_edge(1, 0), planar_edge(-0.5, s32),
                  planar_edge(-0.5, -s32)});
    CHECK(polygon::closure_defect(p) <= 1e-12);
    CHECK(polygon::is_closed(p));
}

TEST_CASE("a single edge is never closed") {
    Rng rng(2);
    Polygon p(1, {Edge(1.5, rng.unit_vector(2))});
    // e - (r/2) I has eigenvalues +-r/2
    CHECK(polygon::closure_defect(p) ==
          doctest::Approx(1.5 / std::sqrt(2)).epsilon(1e-12));
}

TEST_CASE("sampled polygons close to tolerance") {
    const SideLengths s(2, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05, 0.95});
    const Polygon p = reconstruction::sample_polygon(s, 19);
    CHECK(polygon::closure_defect(p) <= 1e-9 * p.lambda());
}

TEST_CASE("walls of the unit square side lengths") {
    const SideLengths s(1, std::vector<Rational>{1, 1, 1, 1});
    const auto walls = polygon::enumerate_walls(s, 0.0);
    CHECK(walls.size() == 3);
    const bool has_12_34 =
        std::any_of(walls.begin(), walls.end(), [](const WallId& w) {
            return w.I == std::vector<int>{1, 2} &&
                   w.J == std::vector<int>{3, 4} && w.k == 1;
        });
    CHECK(has_12_34);
    for (const WallId& w : walls) {
        CHECK(w.rho_I == doctest::Approx(2.0));
        CHECK(w.lambda_I == doctest::Approx(w.lambda_J));
    }
}

TEST_CASE("the equilateral triangle lies on no wall") {
    const SideLengths s(1, std::vector<Rational>{1, 1, 1});
    CHECK(polygon::enumerate_walls(s, 0.0).empty());
    CHECK_FALSE(polygon::is_on_wall(s));
}

TEST_CASE("wall enumeration against a brute-force oracle") {
    // m=2, r=(2,1,1,1,1): check every partition and both k values by hand
    const SideLengths s(2, std::vector<Rational>{2, 1, 1, 1, 1});
    const auto walls = polygon::enumerate_walls(s, 0.0);

    std::size_t oracle_count = 0;
    const int n = 5;
    const double r[5] = {2, 1, 1, 1, 1};
    for (std::uint32_t bits = 0; bits + 1 < (1u << (n - 1)); ++bits) {
        double rho_I = r[0], rho_J = 0;
        for (int i = 2; i <= n; ++i) {
            if (bits & (1u << (i - 2)))
                rho_I += r[i - 1];
            else
                rho_J += r[i - 1];
        }
        for (int k = 1; k <= 2; ++k)
            if (k * rho_I == (2 - k + 1) * rho_J) ++oracle_count;
    }
    CHECK(walls.size() == oracle_count);
    CHECK(oracle_count > 0);
    for (const WallId& w : walls)
        CHECK(w.k * w.rho_I == doctest::Approx((s.m - w.k + 1) * w.rho_J));
}

TEST_CASE("wall membership is permutation invariant") {
    std::vector<Rational> base{1, 2, 3};
    std::sort(base.begin(), base.end());
    do {
        CHECK(polygon::is_on_wall(SideLengths(1, base)));
    } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("float and exact wall tests agree on rational input") {
    const std::vector<std::vector<double>> cases = {
        {1, 1, 1, 1}, {1, 2, 3}, {1, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 2}};
    for (const auto& rs : cases) {
        std::vector<Rational> exact;
        for (double v : rs) exact.emplace_back(static_cast<long long>(v));
        for (int m : {1, 2}) {
            const SideLengths fl(m, rs);
            const SideLengths ex(m, exact);
            CHECK(polygon::enumerate_walls(fl, 1e-12 * fl.rho()).size() ==
                  polygon::enumerate_walls(ex, 0.0).size());
        }
    }
}

TEST_CASE("a perturbation off the wall is detected") {
    const SideLengths s(1, std::vector<double>{1, 1, 1, 1 + 1e-3});
    CHECK_FALSE(polygon::is_on_wall(s));
    // the tolerance parameter is an absolute bound on |k rho_I - (m-k+1) rho_J|
    CHECK(polygon::enumerate_walls(s, 1e-3).size() == 3);
    CHECK(polygon::enumerate_walls(s, 1e-4).empty());
}

TEST_CASE("wall enumeration refuses huge n") {
    CHECK_THROWS_AS(
        polygon::enumerate_walls(SideLengths(1, std::vector<double>(21, 1.0)),
                                 1e-9),
        SizeLimit);
}

TEST_CASE("centralizer of a block-decomposed polygon") {
    // two closed digons in orthogonal coordinate lines
    Polygon p(1, {basis_edge(1, 2, 0), basis_edge(1, 2, 0), basis_edge(1, 2, 1),
                  basis_edge(1, 2, 1)});
    CHECK(polygon::is_closed(p));
    CHECK(polygon::centralizer_dimension(p) >= 1);
}

TEST_CASE("centralizer vanishes off the walls") {
    const SideLengths s(1, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05});
    const Polygon p = reconstruction::sample_polygon(s, 23);
    CHECK(polygon::centralizer_dimension(p) == 0);

    // triangle: nullspace dimension cross-checked with an entrywise
    // parameterization and full-pivot rank
    const SideLengths t(1, std::vector<double>{1.0, 1.1, 0.9});
    const Polygon tri = reconstruction::sample_polygon(t, 5);
    CHECK(polygon::centralizer_dimension(tri) == 0);
    const auto edges = tri.edge_matrices();
    Eigen::MatrixXd op(edges.size() * 8, 3);
    std::vector<ComplexMatrix> params;  // X = [[a, b+ic],[b-ic, -a]]
    ComplexMatrix xa(2, 2), xb(2, 2), xc(2, 2);
    xa << 1, 0, 0, -1;
    xb << 0, 1, 1, 0;
    xc << 0, Complex(0, 1), Complex(0, -1), 0;
    params = {xa, xb, xc};
    for (int c = 0; c < 3; ++c) {
        int row = 0;
        for (const auto& e : edges) {
            const ComplexMatrix comm = params[c] * e - e * params[c];
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    op(row++, c) = comm(i, j).real();
                    op(row++, c) = comm(i, j).imag();
                }
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(op);
    lu.setThreshold(1e-8);
    CHECK(3 - lu.rank() == 0);
}

TEST_CASE("centralizer dimension is conjugation invariant") {
    Rng rng(31);
    Polygon p(1, {basis_edge(1, 2, 0), basis_edge(1, 2, 0), basis_edge(1, 2, 1),
                  basis_edge(1, 2, 1)});
    const int base = polygon::centralizer_dimension(p);
    const ComplexMatrix u = rng.haar_unitary(2);
    Polygon q = p;
    for (Edge& e : q.edges) e = Edge(e.r, u * e.w);
    CHECK(polygon::centralizer_dimension(q) == base);
}

TEST_CASE("moduli dimension formula") {
    CHECK(polygon::moduli_dimension(6, 2) == 8);
    CHECK(polygon::moduli_dimension(4, 1) == 2);
    CHECK(polygon::moduli_dimension(5, 1) == 4);
}

TEST_CASE("semistability of three distinct points on the line") {
    Rng rng(41);
    std::vector<ComplexVector> pts{rng.unit_vector(2), rng.unit_vector(2),
                                   rng.unit_vector(2)};
    const SideLengths s(1, std::vector<double>{1, 1, 1});
    // max single-point mass 1 <= rho/2 = 1.5
    CHECK(polygon::check_semistable(pts, s).semistable);
}

TEST_CASE("a doubled heavy point destroys semistability") {
    Rng rng(43);
    const ComplexVector a = rng.unit_vector(2);
    const ComplexVector b = rng.unit_vector(2);
    const std::vector<ComplexVector> pts{a, a, b};
    const SideLengths s(1, std::vector<double>{2, 1, 1});
    const auto verdict = polygon::check_semistable(pts, s);
    CHECK_FALSE(verdict.semistable);
    CHECK(verdict.mass == doctest::Approx(3.0));
    CHECK(verdict.bound == doctest::Approx(2.0));
}

TEST_CASE("general position plus admissible weights gives semistability") {
    Rng rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        const int m = 1 + static_cast<int>(rng.raw() % 2);
        const int n = m + 3 + static_cast<int>(rng.raw() % 3);
        std::vector<ComplexVector> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rng.unit_vector(m + 1));
        REQUIRE(polygon::is_general_position(pts, m));
        std::vector<double> r(n);
        for (double& v : r) v = rng.uniform(0.8, 1.2);
        const SideLengths s(m, r);
        REQUIRE(polygon::strictly_admissible(s));
        CHECK(polygon::check_semistable(pts, s).semistable);
    }
}

TEST_CASE("general position detection") {
    Rng rng(53);
    std::vector<ComplexVector> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(rng.unit_vector(3));
    CHECK(polygon::is_general_position(pts, 2));

    std::vector<ComplexVector> doubled{pts[0], pts[0], pts[1]};
    CHECK_FALSE(polygon::is_general_position(doubled, 2));

    // standard basis plus the all-ones vector, n = m + 2
    const int m = 2;
    std::vector<ComplexVector> frame;
    for (int i = 0; i <= m; ++i) {
        ComplexVector v = ComplexVector::Zero(m + 1);
        v(i) = 1;
        frame.push_back(v);
    }
    frame.push_back(ComplexVector::Ones(m + 1) / std::sqrt(m + 1.0));
    CHECK(polygon::is_general_position(frame, m));
}

TEST_CASE("closed polygons satisfy the triangle inequalities") {
    // necessity of the inequalities, on sampled closed polygons
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const SideLengths s(2,
                            std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05, 0.95});
        const Polygon p = reconstruction::sample_polygon(s, seed);
        REQUIRE(polygon::is_closed(p));
        CHECK(polygon::check_triangle_inequalities(p.side_lengths()).satisfied);
    }
}

TEST_CASE("side length constructors reject degenerate input") {
    CHECK_THROWS_AS(SideLengths(1, std::vector<double>{1, 1}), DomainError);
    CHECK_THROWS_AS(SideLengths(1, std::vector<double>{1, -1, 1}), DomainError);
    CHECK_THROWS_AS(SideLengths(0, std::vector<double>{1, 1, 1}), DomainError);
}

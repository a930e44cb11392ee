#include <doctest.h>

#include <cmath>

#include "bendix/polygon.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/rng.hpp"
#include "bendix/spectral.hpp"

using namespace bendix;

namespace {

GtsPattern square_pattern() {
    GtsPattern g;
    g.n = 4;
    g.m = 1;
    g.rows.resize(4, RealVector::Zero(2));
    g.rows[0] << 1.0, 0.0;
    g.rows[1] << 1.5, 0.5;
    g.rows[2] << 2.0, 1.0;
    g.rows[3] << 2.0, 2.0;
    return g;
}

}  // namespace

TEST_CASE("diagonals of a closed polygon") {
    const SideLengths s(2, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05, 0.95});
    const Polygon p = reconstruction::sample_polygon(s, 3);
    const auto diag = spectral::diagonals(p);
    REQUIRE(diag.size() == 6);
    const double lambda = p.lambda();

    CHECK((diag.back() - lambda * ComplexMatrix::Identity(3, 3)).norm() <=
          1e-9 * lambda);

    const Spectrum s0 = linalg::eig_hermitian(diag[0]);
    CHECK(s0.values(0) == doctest::Approx(p.edges[0].r).epsilon(1e-12));
    CHECK(std::abs(s0.values(1)) < 1e-12);
    CHECK(std::abs(s0.values(2)) < 1e-12);

    const Spectrum s4 = linalg::eig_hermitian(diag[4]);
    CHECK(s4.values(0) == doctest::Approx(lambda).epsilon(1e-10));
    CHECK(s4.values(1) == doctest::Approx(lambda).epsilon(1e-10));
    CHECK(s4.values(2) ==
          doctest::Approx(lambda - p.edges[5].r).epsilon(1e-10));
}

TEST_CASE("the rigid (1,1,2) triangle pattern") {
    GtsPattern g;
    g.n = 3;
    g.m = 1;
    g.rows.resize(3, RealVector::Zero(2));
    g.rows[0] << 1.0, 0.0;
    g.rows[1] << 2.0, 0.0;
    g.rows[2] << 2.0, 2.0;
    const Polygon p = reconstruction::reconstruct(g);
    CHECK(polygon::closure_defect(p) <= 1e-10);
    const GtsPattern back = spectral::action_values(p);
    for (int i = 0; i < 3; ++i)
        CHECK((back.rows[i] - g.rows[i]).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("action values of the planar square") {
    const Polygon p = reconstruction::reconstruct(square_pattern());
    const GtsPattern g = spectral::action_values(p);
    CHECK(g.rows[1](0) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(g.rows[1](1) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(g.rows[2](0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(g.rows[2](1) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("row sums are prefix sums of the side lengths") {
    const SideLengths s(1, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05});
    const Polygon p = reconstruction::sample_polygon(s, 9);
    const GtsPattern g = spectral::action_values(p);
    double prefix = 0;
    for (int i = 0; i < g.n; ++i) {
        prefix += s.r[i];
        CHECK(g.row_sum(i) == doctest::Approx(prefix).epsilon(1e-9));
    }
}

TEST_CASE("extracted patterns satisfy every pattern invariant") {
    struct Case {
        int m;
        std::vector<double> r;
    };
    const std::vector<Case> grid = {
        {1, {1.0, 1.1, 0.9, 1.2, 1.05}},
        {2, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95}},
        {3, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95, 1.15, 0.85}},
    };
    for (const Case& c : grid)
        for (std::uint64_t seed : {4ull, 8ull}) {
            const Polygon p =
                reconstruction::sample_polygon(SideLengths(c.m, c.r), seed);
            CHECK_NOTHROW(
                spectral::validate_pattern(spectral::action_values(p)));
        }
}

TEST_CASE("action_values refuses open chains") {
    Rng rng(5);
    Polygon open(1, {Edge(1, rng.unit_vector(2)), Edge(1, rng.unit_vector(2)),
                     Edge(1, rng.unit_vector(2))});
    CHECK_THROWS_AS(spectral::action_values(open), ClosureViolation);
}

TEST_CASE("determinant ratio of a rank-one update") {
    RealVector lambda(2), weights(2);
    lambda << 1, 0;
    weights << 0.5, 0.5;

    CHECK(spectral::wa_char_ratio(lambda, RealVector::Zero(2), 0.0, {2, 0})
              .real() == doctest::Approx(1.0));

    const Complex at2 = spectral::wa_char_ratio(lambda, weights, 1.0, {2, 0});
    CHECK(at2.real() == doctest::Approx(0.25).epsilon(1e-12));

    // direct determinant oracle: L = A + w (x) w* for w = (1,1)/sqrt(2)
    ComplexMatrix l(2, 2);
    l << 1.5, 0.5, 0.5, 0.5;
    const Spectrum sl = linalg::eig_hermitian(l);
    const double oracle = (2 - sl.values(0)) * (2 - sl.values(1)) /
                          ((2.0 - 1.0) * (2.0 - 0.0));
    CHECK(at2.real() == doctest::Approx(oracle).epsilon(1e-12));

    const Complex far = spectral::wa_char_ratio(lambda, weights, 1.0, {1e9, 0});
    CHECK(far.real() == doctest::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS(spectral::wa_char_ratio(lambda, weights, 1.0, {1.0, 0.0}),
                    PoleEvaluation);
}

TEST_CASE("weights recovered from the two spectra") {
    RealVector lambda(2), nu(2);
    lambda << 1, 0;
    nu << 1.7071067811865475, 0.2928932188134525;
    const RealVector w = spectral::wa_weights(lambda, nu, 1.0);
    CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a coincident eigenvalue pair gives weight zero") {
    RealVector lambda(2), nu(2);
    lambda << 1, 0;
    nu << 2, 0;
    const RealVector w = spectral::wa_weights(lambda, nu, 1.0);
    CHECK(w(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w(1) == doctest::Approx(0.0));
}

TEST_CASE("weight sum is the trace increment over r") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 2 + static_cast<int>(rng.raw() % 3);
        ComplexMatrix a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                a(i, j) = Complex(rng.normal(), rng.normal());
        a = linalg::hermitize(a);
        const double r = rng.uniform(0.5, 2.0);
        const ComplexVector w = rng.unit_vector(dim);
        const ComplexMatrix l = a + r * (w * w.adjoint());

        const Spectrum sa = linalg::eig_hermitian(a);
        const Spectrum sl = linalg::eig_hermitian(l);
        if (!spectral::check_interlacing(sa.values, sl.values, true, 1e-12))
            continue;
        bool simple = true;
        for (int j = 1; j <= dim; ++j) simple &= sa.simple(j, 1e-6);
        if (!simple) continue;

        const RealVector weights =
            spectral::wa_weights(sa.values, sl.values, r);
        CHECK(std::abs(weights.sum() - 1.0) < 1e-9);
        // eigenvector overlap oracle
        for (int j = 0; j < dim; ++j) {
            const double overlap = std::norm(w.dot(sa.vectors.col(j)));
            CHECK(weights(j) == doctest::Approx(overlap).epsilon(1e-8));
        }
    }
}

TEST_CASE("wa_weights rejects bad input") {
    RealVector repeated(2), nu(2), lambda(2), bad_nu(2);
    repeated << 1, 1;
    nu << 2, 1;
    lambda << 1, 0;
    bad_nu << 0.5, 0.4;
    CHECK_THROWS_AS(spectral::wa_weights(repeated, nu, 1.0), RepeatedEigenvalue);
    CHECK_THROWS_AS(spectral::wa_weights(lambda, bad_nu, 1.0),
                    InterlacingViolation);
}

TEST_CASE("interlacing test and its sign flip") {
    RealVector lambda(2), good(2), bad(2);
    lambda << 1, 0;
    good << 1.7, 0.3;
    bad << 0.5, 0.4;
    CHECK(spectral::check_interlacing(lambda, good, true));
    CHECK_FALSE(spectral::check_interlacing(lambda, bad, true));
    // for r < 0 the roles swap
    CHECK(spectral::check_interlacing(good, lambda, false));
    CHECK_FALSE(spectral::check_interlacing(lambda, good, false));
}

TEST_CASE("polytope dimension formula") {
    CHECK(spectral::polytope_dimension(6, 2) == 4);
    CHECK(spectral::polytope_dimension(4, 1) == 1);
    CHECK(spectral::polytope_dimension(5, 1) == 2);
}

TEST_CASE("action index set") {
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(spectral::action_index_set(5, 1) == Pairs{{1, 1}, {2, 1}});
    CHECK(spectral::action_index_set(4, 1) == Pairs{{1, 1}});
    CHECK(spectral::action_index_set(6, 2) ==
          Pairs{{1, 1}, {2, 1}, {2, 2}, {3, 2}});
    CHECK(spectral::action_index_set(5, 2) == Pairs{{1, 1}, {2, 2}});
    for (int m = 1; m <= 3; ++m)
        for (int n = m + 2; n <= m + 7; ++n)
            CHECK(static_cast<int>(spectral::action_index_set(n, m).size()) ==
                  spectral::polytope_dimension(n, m));
}

TEST_CASE("exact polytope membership") {
    const std::vector<Rational> r{1, 1, 1, 1};
    const spectral::Polytope poly(4, 1, r);

    using Row = std::vector<Rational>;
    std::vector<Row> inside{{1, 0}, {Rational(3, 2), Rational(1, 2)}, {2, 1},
                            {2, 2}};
    CHECK(poly.contains(inside));

    std::vector<Row> vertex{{1, 0}, {2, 0}, {2, 1}, {2, 2}};
    CHECK(poly.contains(vertex));

    std::vector<Row> broken{{1, 0}, {Rational(5, 2), Rational(-1, 2)}, {2, 1},
                            {2, 2}};
    CHECK_FALSE(poly.contains(broken));

    std::vector<Row> bad_sum{{1, 0}, {1, 0}, {2, 1}, {2, 2}};
    CHECK_FALSE(poly.contains(bad_sum));
}

TEST_CASE("extracted patterns pass the exact membership test after rounding") {
    const std::vector<Rational> r{1, 1, 1, 1, 1};
    const SideLengths s(1, r);
    const spectral::Polytope poly = spectral::Polytope::from_side_lengths(s);
    for (std::uint64_t seed : {1ull, 5ull, 9ull}) {
        const Polygon p = reconstruction::sample_polygon(s, seed);
        const GtsPattern g = spectral::action_values(p);
        std::vector<std::vector<Rational>> rows;
        for (const RealVector& row : g.rows) {
            std::vector<Rational> out;
            for (int j = 0; j < row.size(); ++j)
                out.emplace_back(
                    static_cast<long long>(std::llround(row(j) * 1e9)),
                    1000000000LL);
            rows.push_back(std::move(out));
        }
        CHECK(poly.contains(rows, Rational(1, 100000000)));  // slack 1e-8
    }
}

TEST_CASE("pattern validation catches the named defects") {
    GtsPattern g = square_pattern();
    CHECK_NOTHROW(spectral::validate_pattern(g));

    GtsPattern broken = g;
    broken.rows[1] << 0.5, 1.5;  // not non-increasing
    CHECK_THROWS_AS(spectral::validate_pattern(broken), DomainError);

    broken = g;
    broken.rows[1] << 2.5, -0.5;  // violates interlacing
    CHECK_THROWS_AS(spectral::validate_pattern(broken), DomainError);

    broken = g;
    broken.rows[1] << 0.6, 0.3;  // row sum shrank: negative side length
    CHECK_THROWS_AS(spectral::validate_pattern(broken), DomainError);

    broken = g;
    broken.rows[3] << 2.5, 1.5;  // top row not constant
    CHECK_THROWS_AS(spectral::validate_pattern(broken), DomainError);
}

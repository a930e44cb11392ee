#include <doctest.h>

#include <cmath>

#include "bendix/linalg.hpp"
#include "bendix/rng.hpp"

using namespace bendix;

namespace {

ComplexMatrix random_hermitian(Rng& rng, int dim, double scale = 1.0) {
    ComplexMatrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = Complex(rng.normal(), rng.normal()) * scale;
    return linalg::hermitize(a);
}

}  // namespace

TEST_CASE("eig_hermitian on a diagonal matrix") {
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 0) = 2;
    a(1, 1) = 1;
    const Spectrum s = linalg::eig_hermitian(a);
    CHECK(s.values(0) == doctest::Approx(2).epsilon(1e-12));
    CHECK(s.values(1) == doctest::Approx(1).epsilon(1e-12));
    CHECK(s.values(2) == doctest::Approx(0).epsilon(1e-12));
    // eigenvectors are standard basis vectors with positive real entries
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(s.vectors.col(j).cwiseAbs().maxCoeff() - 1.0) < 1e-12);
        CHECK(s.vectors.col(j).sum().real() == doctest::Approx(1).epsilon(1e-12));
        CHECK(std::abs(s.vectors.col(j).sum().imag()) < 1e-12);
    }
}

TEST_CASE("eig_hermitian on a scaled rank-one projection") {
    Rng rng(7);
    const ComplexVector w = rng.unit_vector(3);
    const ComplexMatrix a = 3.0 * (w * w.adjoint());
    const Spectrum s = linalg::eig_hermitian(a);
    CHECK(s.values(0) == doctest::Approx(3).epsilon(1e-12));
    CHECK(std::abs(s.values(1)) < 1e-12);
    CHECK(std::abs(s.values(2)) < 1e-12);
}

TEST_CASE("eig_hermitian against the hand-solved 2x2 characteristic roots") {
    // det(A - x I) = x^2 - 2x + 1/2, roots 1 +- sqrt(2)/2
    ComplexMatrix a(2, 2);
    a << 1.5, 0.5, 0.5, 0.5;
    const Spectrum s = linalg::eig_hermitian(a);
    CHECK(s.values(0) == doctest::Approx(1.7071067811865475).epsilon(1e-13));
    CHECK(s.values(1) == doctest::Approx(0.2928932188134525).epsilon(1e-13));
}

TEST_CASE("spectral projections of a diagonal matrix") {
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 0) = 2;
    a(1, 1) = 1;
    const Spectrum s = linalg::eig_hermitian(a);
    ComplexMatrix e1 = linalg::spectral_projection(s, 1);
    ComplexMatrix e3 = linalg::spectral_projection(s, 3);
    ComplexMatrix expect1 = ComplexMatrix::Zero(3, 3);
    expect1(0, 0) = 1;
    ComplexMatrix expect3 = ComplexMatrix::Zero(3, 3);
    expect3(2, 2) = 1;
    CHECK((e1 - expect1).norm() < 1e-12);
    CHECK((e3 - expect3).norm() < 1e-12);
}

TEST_CASE("spectral projection matches the 2x2 resolvent formula") {
    ComplexMatrix a(2, 2);
    a << 1.5, 0.5, 0.5, 0.5;
    const Spectrum s = linalg::eig_hermitian(a);
    const double nu1 = s.values(0), nu2 = s.values(1);
    const ComplexMatrix oracle =
        (a - nu2 * ComplexMatrix::Identity(2, 2)) / (nu1 - nu2);
    CHECK((linalg::spectral_projection(s, 1) - oracle).norm() < 1e-12);
}

TEST_CASE("spectral projection invariants on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 2 + static_cast<int>(rng.raw() % 4);
        const ComplexMatrix a = random_hermitian(rng, dim);
        const Spectrum s = linalg::eig_hermitian(a);
        const double norm = a.norm();
        // reconstruction round trip
        ComplexMatrix rebuilt =
            s.vectors * s.values.asDiagonal().toDenseMatrix().cast<Complex>() *
            s.vectors.adjoint();
        CHECK((a - rebuilt).norm() <= 1e-9 * std::max(1.0, norm));
        for (int j = 1; j <= dim; ++j) {
            if (!s.simple(j)) continue;
            const ComplexMatrix e = linalg::spectral_projection(s, j);
            CHECK((e * e - e).norm() < 1e-10);
            CHECK((e - e.adjoint()).norm() < 1e-12);
            CHECK(std::abs(e.trace().real() - 1.0) < 1e-10);
            CHECK((e * a - s.values(j - 1) * e).norm() <= 1e-9 * norm);
            CHECK((e * a - a * e).norm() <= 1e-9 * norm);
        }
    }
}

TEST_CASE("degenerate eigenvalues are refused a projection") {
    ComplexMatrix a = ComplexMatrix::Identity(3, 3);
    a(2, 2) = 0;
    const Spectrum s = linalg::eig_hermitian(a);
    CHECK_THROWS_AS(linalg::spectral_projection(s, 1), DegenerateEigenvalue);
    CHECK_NOTHROW(linalg::spectral_projection(s, 3));
}

TEST_CASE("unitary exponential of a projection") {
    Rng rng(3);
    const ComplexVector u = rng.unit_vector(3);
    const ComplexMatrix e = u * u.adjoint();
    const ComplexMatrix id = ComplexMatrix::Identity(3, 3);

    CHECK((linalg::unitary_exp_projection(e, 0.0) - id).norm() < 1e-15);
    CHECK((linalg::unitary_exp_projection(e, 2 * M_PI) - id).norm() < 1e-14);

    const ComplexMatrix full = linalg::unitary_exp_projection(id, 0.7);
    CHECK((full - std::exp(Complex(0, 0.7)) * id).norm() < 1e-14);

    const ComplexMatrix u1 = linalg::unitary_exp_projection(e, 0.9);
    CHECK((u1 * u1.adjoint() - id).norm() < 1e-10);

    // one-parameter group law
    const ComplexMatrix u2 = linalg::unitary_exp_projection(e, 1.3);
    const ComplexMatrix u12 = linalg::unitary_exp_projection(e, 2.2);
    CHECK((u1 * u2 - u12).norm() < 1e-10);

    CHECK_THROWS_AS(linalg::unitary_exp_projection(2.0 * e, 1.0), NotAProjection);
}

TEST_CASE("hermitian bases are orthonormal") {
    for (int dim : {2, 3, 4}) {
        const auto full = linalg::hermitian_basis(dim);
        CHECK(static_cast<int>(full.size()) == dim * dim);
        for (std::size_t a = 0; a < full.size(); ++a) {
            CHECK((full[a] - full[a].adjoint()).norm() < 1e-14);
            for (std::size_t b = 0; b <= a; ++b) {
                const double inner = (full[a] * full[b]).trace().real();
                CHECK(std::abs(inner - (a == b ? 1.0 : 0.0)) < 1e-14);
            }
        }
        const auto traceless = linalg::traceless_hermitian_basis(dim);
        CHECK(static_cast<int>(traceless.size()) == dim * dim - 1);
        for (const auto& b : traceless)
            CHECK(std::abs(b.trace().real()) < 1e-14);
    }
}

TEST_CASE("eigenvector phase convention is deterministic") {
    Rng rng(5);
    const ComplexMatrix a = random_hermitian(rng, 4);
    const Spectrum s1 = linalg::eig_hermitian(a);
    const Spectrum s2 = linalg::eig_hermitian(a);
    CHECK((s1.vectors - s2.vectors).norm() == 0.0);
    // each column's largest-modulus entry is real positive
    for (int j = 0; j < 4; ++j) {
        int arg_max = 0;
        s1.vectors.col(j).cwiseAbs().maxCoeff(&arg_max);
        CHECK(s1.vectors(arg_max, j).imag() == doctest::Approx(0.0));
        CHECK(s1.vectors(arg_max, j).real() > 0.0);
    }
}

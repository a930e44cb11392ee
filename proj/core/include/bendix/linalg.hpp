#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "bendix/errors.hpp"

namespace bendix {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
/// non-increasing; column j of `vectors` is a unit eigenvector for
/// `values[j]`, with the phase convention that the largest-modulus entry
/// of each column is real and positive (ties broken by lowest index).
struct Spectrum {
    RealVector values;
    ComplexMatrix vectors;

    int dim() const { return static_cast<int>(values.size()); }
    /// max(1, spectral norm), the scale used by relative tolerances.
    double scale() const;
    /// Distance from values[j] (1-based) to its nearest neighbor.
    double gap(int j) const;
    bool simple(int j, double tol_factor = 1e-8) const;
};

namespace linalg {

inline double frobenius(const ComplexMatrix& a) { return a.norm(); }

bool is_hermitian(const ComplexMatrix& a, double tol_factor = 1e-12);

/// (A + A*)/2, exactly Hermitian afterwards.
ComplexMatrix hermitize(const ComplexMatrix& a);

Spectrum eig_hermitian(const ComplexMatrix& a);

/// Rank-one projector u_j u_j* onto the eigenspace of the j-th (1-based)
/// eigenvalue. Throws DegenerateEigenvalue when the eigenvalue is not
/// simple at the 1e-8 relative tolerance.
ComplexMatrix spectral_projection(const Spectrum& s, int j);

/// exp(i t E) = I + (e^{it} - 1) E for a projection E.
/// Throws NotAProjection when ||E^2 - E|| > 1e-10.
ComplexMatrix unitary_exp_projection(const ComplexMatrix& e, double t);

/// Orthonormal basis of Hermitian dim x dim matrices under <A,B> = Tr(AB).
std::vector<ComplexMatrix> hermitian_basis(int dim);

/// Same restricted to trace zero; has dim^2 - 1 elements.
std::vector<ComplexMatrix> traceless_hermitian_basis(int dim);

}  // namespace linalg
}  // namespace bendix

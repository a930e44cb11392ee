#pragma once

#include <cstdint>
#include <vector>

#include "bendix/types.hpp"

namespace bendix::duality {

/// The (m+1) x n matrix N with columns sqrt(r_j) w_j, so that
/// N N* = sum e_j and the column norms recover the side lengths.
ComplexMatrix polygon_to_matrix(const Polygon& p);

/// Eigenvalues (non-increasing) of the leading k x k blocks of N*N for
/// k = 1..n. For polygon-derived N the nonzero entries of block k match
/// the nonzero eigenvalues of the diagonal A_{k-1}.
std::vector<RealVector> gt_block_values(const ComplexMatrix& n_matrix);

/// Spatial polygon in the rank-two Euclidean model.
struct EuclideanPolygon {
    std::vector<Eigen::Vector3d> e;

    int n() const { return static_cast<int>(e.size()); }
    std::vector<double> lengths() const;
    Eigen::Vector3d closure() const;  // sum of edges; zero when closed
    bool closed(double tol = 1e-10) const;
};

/// x -> (1/2) [[x1, x2 + i x3], [x2 - i x3, -x1]], the isometry between
/// R^3 and traceless Hermitian 2x2 matrices with x.y = 2 Tr(x^ y^) and
/// (x cross y)^ = i [x^, y^].
ComplexMatrix hat(const Eigen::Vector3d& x);
Eigen::Vector3d unhat(const ComplexMatrix& a);

/// m = 1 polygons only. Round trip with to_polygon is the identity to
/// machine precision.
EuclideanPolygon to_euclidean(const Polygon& p);
Polygon to_polygon(const EuclideanPolygon& ep);

struct HitchinSpec {
    std::vector<double> alphas;  // spectral points, coincidences allowed
};

/// H_j = sum_{i != j} e_i . e_j / (alpha_i - alpha_j). Entry j is only
/// defined when alpha_j differs from every other alpha_i; `defined`
/// records which entries are.
struct HitchinValues {
    std::vector<double> h;
    std::vector<bool> defined;
};

HitchinValues hitchin_hamiltonians(const EuclideanPolygon& ep,
                                   const HitchinSpec& spec);

/// A(z) = p(z) sum_i e_i^ / (z - alpha_i), evaluated in polynomial form
/// so coincident alphas are fine.
ComplexMatrix hitchin_matrix(const EuclideanPolygon& ep,
                             const HitchinSpec& spec, Complex z);

/// Lifted generator of the bending about the diagonal e_1 + ... + e_d:
/// edot_k = (e_1 + ... + e_d) x e_k for k <= d, zero beyond.
std::vector<Eigen::Vector3d> bending_derivative_r3(const EuclideanPolygon& ep,
                                                   int d);

/// d/dt of every Hitchin Hamiltonian along every interior bending flow
/// (d = 2..n-2), computed exactly by the chain rule.
struct InvarianceReport {
    std::vector<int> flows;                   // diagonal indices d
    std::vector<std::vector<double>> dh_dt;   // [flow][j]
    std::vector<bool> defined;                // per Hamiltonian
};

InvarianceReport hitchin_invariance_report(const EuclideanPolygon& ep,
                                           const HitchinSpec& spec);

/// Seeded pentagon with |(e_2 x e_1) . e_5| >= 1e-3; redraws with
/// consecutive seeds until the genericity condition holds.
EuclideanPolygon sample_generic_pentagon(const SideLengths& s,
                                         std::uint64_t seed);

}  // namespace bendix::duality

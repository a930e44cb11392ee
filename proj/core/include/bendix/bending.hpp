#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "bendix/types.hpp"

namespace bendix::bending {

/// One bending flow application: rotate the flap e_1..e_{i+1} by
/// exp(i t E_j(A_i)).
struct FlowSpec {
    int i = 1;  // diagonal index, 1..n-3
    int j = 1;  // eigenvalue index, 1..m+1
    double t = 0.0;
};

/// The flow of the Hamiltonian lambda_{ij}: edges 1..i+1 are conjugated
/// by exp(i t E_j(A_i)), the rest are returned bit-identically. A_i, the
/// closure defect and the whole pattern are invariants. Throws
/// IndexOutOfRange / DegenerateEigenvalue.
Polygon bend(const Polygon& p, const FlowSpec& f);

/// F4(a,b,c,d) = (a,b)(b,c)(c,d)(d,a) / (|a|^2 |b|^2 |c|^2 |d|^2),
/// phase-free in every slot. Throws ZeroVector.
Complex four_point(const ComplexVector& a, const ComplexVector& b,
                   const ComplexVector& c, const ComplexVector& d);

using IndexPair = std::pair<int, int>;

/// Angle coordinates theta_ij = arg F4(w_{i+1}, u_ij, w_{i+2}, u_{i,j+1})
/// over the action index set, plus the underlying four-point values and
/// the bend-invariant overlap magnitudes |alpha_ij|^2.
struct AngleSet {
    std::map<IndexPair, double> theta;          // (-pi, pi]
    std::map<IndexPair, Complex> beta;
    std::map<IndexPair, double> alpha_sq;       // all unforced (i,j)
};

/// Throws StrictInterlacingViolation (with the offending pair) outside
/// the open stratum where the unforced interlacing is strict.
AngleSet angle_values(const Polygon& p);

/// mu_ij = lambda_i1 + ... + lambda_ij for all rows and columns.
std::map<IndexPair, double> mu_values(const GtsPattern& g);

/// An observable for bracket computations: a smooth function of the raw
/// edge-matrix tuple (probes leave the rank-one orbits, so observables
/// must extend off them). Angle-valued observables get wrap-aware
/// differencing.
struct Observable {
    std::function<double(const std::vector<ComplexMatrix>&)> eval;
    bool angle_valued = false;
};

/// lambda_{ij} as a function of an arbitrary Hermitian tuple.
Observable lambda_observable(int i, int j);
Observable mu_observable(int i, int j);
/// theta_{ij}; edge directions are read off as top eigenvectors, which
/// agrees with w_k on the rank-one locus.
Observable theta_observable(int i, int j);

/// Per-edge Hermitian gradients estimated by central differences of step
/// h over an orthonormal Hermitian basis.
struct EdgeGradients {
    std::vector<ComplexMatrix> grad;
};

EdgeGradients observable_gradients(const Observable& f,
                                   const std::vector<ComplexMatrix>& edges,
                                   double h);

/// Assembled Lie-Poisson bracket sum_k Im Tr(e_k [G_k f, G_k g]) from
/// precomputed gradients; antisymmetric by construction.
double bracket_from_gradients(const std::vector<ComplexMatrix>& edges,
                              const EdgeGradients& f, const EdgeGradients& g);

double poisson_bracket_fd(const Observable& f, const Observable& g,
                          const Polygon& p, double h);

/// 1e-5 * max(1, Lambda).
double default_fd_step(const Polygon& p);

/// Circular difference a - b reduced to (-pi, pi].
double angle_difference(double a, double b);

}  // namespace bendix::bending

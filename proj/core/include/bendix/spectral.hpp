#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "bendix/types.hpp"

namespace bendix::spectral {

/// Diagonals A_0..A_{n-1}, A_i = e_1 + ... + e_{i+1}.
std::vector<ComplexMatrix> diagonals(const Polygon& p);

/// Gel'fand-Tsetlin pattern of a closed polygon: eigenvalues of every
/// diagonal, with structural zeros and forced Lambda entries imposed
/// exactly. Throws ClosureViolation when the defect exceeds
/// closure_tol_factor * Lambda.
GtsPattern action_values(const Polygon& p, double closure_tol_factor = 1e-9);

/// Right side of the rank-one determinant ratio,
/// 1 - r * sum_j weights[j] / (z - lambda[j]).
Complex wa_char_ratio(const RealVector& lambda, const RealVector& weights,
                      double r, Complex z);

/// Interlacing test for the spectra of A and A + r w(x)w*:
/// nu_1 >= lambda_1 >= nu_2 >= ... >= lambda_k when r > 0 (roles swap for
/// r < 0). `slack` absorbs roundoff.
bool check_interlacing(const RealVector& lambda, const RealVector& nu,
                       bool r_positive, double slack = 0.0);

/// Eigenvector weights |alpha_j|^2 of the rank-one update recovered from
/// the two spectra:
///   |alpha_j|^2 = -prod_i(lambda_j - nu_i) / (r * prod_{i!=j}(lambda_j - lambda_i)).
/// Inputs must already have structurally forced coincidences cancelled;
/// throws RepeatedEigenvalue when a surviving lambda_j repeats and
/// InterlacingViolation when a weight is below -1e-10 (tinier negatives
/// are clipped to zero).
RealVector wa_weights(const RealVector& lambda, const RealVector& nu, double r);

/// dim P = (n-m-2)*m, half the moduli dimension.
int polytope_dimension(int n, int m);

/// Index set of functionally independent action coordinates: for each row
/// 1..n-3 every unforced column except the right-most one. Cardinality is
/// polytope_dimension(n, m).
std::vector<std::pair<int, int>> action_index_set(int n, int m);

/// Checks all pattern invariants (shape, row sums, interlacing, forced
/// entries) with relative slack; throws DomainError with a description on
/// the first failure.
void validate_pattern(const GtsPattern& g, double slack_factor = 1e-9);

/// The convex polytope of patterns with fixed n, m, r, described by its
/// membership test in exact arithmetic.
struct Polytope {
    int n = 0;
    int m = 0;
    std::vector<Rational> r;

    Polytope(int n, int m, std::vector<Rational> r);
    static Polytope from_side_lengths(const SideLengths& s);

    Rational rho() const;
    Rational lambda() const;

    /// Exact membership of a rational pattern (rows bottom-up, each of
    /// length m+1). `slack` >= 0 loosens every constraint; slack 0 is the
    /// polytope itself.
    bool contains(const std::vector<std::vector<Rational>>& rows,
                  const Rational& slack = Rational(0)) const;
};

}  // namespace bendix::spectral

#pragma once

#include <optional>
#include <vector>

#include "bendix/linalg.hpp"
#include "bendix/rational.hpp"

namespace bendix {

/// Side lengths r_1..r_n of a polygon whose edges live in (m+1)x(m+1)
/// Hermitian matrices. Carries an optional exact rational copy; wall and
/// polytope queries use it when present ("exact mode").
struct SideLengths {
    int m = 1;
    std::vector<double> r;
    std::optional<std::vector<Rational>> exact;

    SideLengths() = default;
    SideLengths(int m, std::vector<double> r);
    SideLengths(int m, std::vector<Rational> r);

    int n() const { return static_cast<int>(r.size()); }
    double rho() const;
    double lambda() const { return rho() / (m + 1); }
    bool exact_mode() const { return exact.has_value(); }
    Rational exact_rho() const;

    /// True when every r_i is an integer (exact mode compares exactly,
    /// float mode at 1e-9).
    bool integral() const;
    std::vector<long long> integer_values() const;
};

/// One polygon side: the rank-one PSD matrix r * w (x) w*.
struct Edge {
    double r = 0.0;
    ComplexVector w;

    Edge() = default;
    /// Requires ||w|| = 1 up to 1e-6 (then normalizes exactly), r > 0.
    Edge(double r, ComplexVector w);

    int dim() const { return static_cast<int>(w.size()); }
    ComplexMatrix matrix() const;
};

/// Ordered tuple of edges. Closure (sum e_i = Lambda I) is a property
/// checked where needed, not a constructor invariant, so open linkages
/// and even single edges can be represented.
struct Polygon {
    int m = 0;
    std::vector<Edge> edges;

    Polygon() = default;
    Polygon(int m, std::vector<Edge> edges);

    int n() const { return static_cast<int>(edges.size()); }
    double rho() const;
    double lambda() const { return rho() / (m + 1); }
    SideLengths side_lengths() const;
    std::vector<ComplexMatrix> edge_matrices() const;
};

/// Triangular array of diagonal eigenvalues. Row i holds the spectrum of
/// A_i = e_1 + ... + e_{i+1}, stored with full length m+1 and sorted
/// non-increasing; display padding beyond m+1 entries is a rendering
/// concern and never stored.
struct GtsPattern {
    int n = 0;
    int m = 0;
    std::vector<RealVector> rows;  // n rows, each of size m+1, bottom-up

    double lambda() const;
    double rho() const;
    double row_sum(int i) const { return rows[i].sum(); }
    /// Side lengths recovered as successive row-sum differences.
    std::vector<double> side_lengths() const;
};

/// Wall H_{I,J,k}: k * rho_I = (m-k+1) * rho_J, with I, J a proper
/// partition of {1..n} (1-based, increasing) and I the lexicographically
/// smaller side.
struct WallId {
    std::vector<int> I;
    std::vector<int> J;
    int k = 1;
    double rho_I = 0.0;
    double rho_J = 0.0;
    double lambda_I = 0.0;  // rho_I / (m-k+1)
    double lambda_J = 0.0;  // rho_J / k
};

// Structural bookkeeping for patterns of closed polygons.
//
// Row i of a pattern has
//   - structural_zero_count(m, i) trailing exact zeros (rank of A_i), and
//   - forced_lambda_count(n, m, i) leading entries pinned to Lambda by
//     interlacing against the all-Lambda top row.
int structural_zero_count(int m, int i);
int forced_lambda_count(int n, int m, int i);

/// 1-based column range [first, last] of the entries of row i that are not
/// structurally forced; empty when first > last.
std::pair<int, int> unforced_range(int n, int m, int i);

}  // namespace bendix

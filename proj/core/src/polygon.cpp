#include "bendix/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bendix::polygon {

TriangleVerdict check_triangle_inequalities(const SideLengths& s) {
    TriangleVerdict verdict;
    if (s.exact_mode()) {
        const Rational rho = s.exact_rho();
        for (int i = 0; i < s.n(); ++i) {
            if (Rational(s.m + 1) * (*s.exact)[i] > rho)
                verdict.violated.push_back(i + 1);
        }
    } else {
        const double rho = s.rho();
        for (int i = 0; i < s.n(); ++i) {
            if ((s.m + 1) * s.r[i] > rho) verdict.violated.push_back(i + 1);
        }
    }
    verdict.satisfied = verdict.violated.empty();
    return verdict;
}

bool strictly_admissible(const SideLengths& s) {
    if (s.exact_mode()) {
        const Rational rho = s.exact_rho();
        for (const Rational& v : *s.exact)
            if (Rational(s.m + 1) * v >= rho) return false;
        return true;
    }
    const double rho = s.rho();
    for (double v : s.r)
        if ((s.m + 1) * v >= rho) return false;
    return true;
}

bool in_cone(const SideLengths& s) {
    return check_triangle_inequalities(s).satisfied;
}

double closure_defect(const Polygon& p) {
    if (p.edges.empty()) throw DomainError("closure_defect: empty polygon");
    const int d = p.m + 1;
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const Edge& e : p.edges) sum += e.matrix();
    sum -= p.lambda() * ComplexMatrix::Identity(d, d);
    return sum.norm();
}

bool is_closed(const Polygon& p, double tol_factor) {
    return closure_defect(p) <= tol_factor * p.lambda();
}

std::vector<WallId> enumerate_walls(const SideLengths& s, double tol) {
    const int n = s.n();
    if (n > 20) throw SizeLimit("enumerate_walls: n > 20");
    std::vector<WallId> walls;
    // Each unordered partition appears once with index 1 in I, which is
    // exactly the lexicographically smaller side. Complementary (J, I,
    // m-k+1) duplicates are thereby never emitted.
    const std::uint32_t count = 1u << (n - 1);
    for (std::uint32_t bits = 0; bits + 1 < count; ++bits) {
        // I = {1} + indices selected by `bits` among 2..n; J nonempty
        std::vector<int> members_I = {1}, members_J;
        for (int i = 2; i <= n; ++i) {
            if (bits & (1u << (i - 2)))
                members_I.push_back(i);
            else
                members_J.push_back(i);
        }
        for (int k = 1; k <= s.m; ++k) {
            bool on_wall = false;
            if (s.exact_mode()) {
                Rational lhs = 0, rhs = 0;
                for (int i : members_I) lhs += (*s.exact)[i - 1];
                for (int j : members_J) rhs += (*s.exact)[j - 1];
                on_wall = Rational(k) * lhs == Rational(s.m - k + 1) * rhs;
            } else {
                double lhs = 0, rhs = 0;
                for (int i : members_I) lhs += s.r[i - 1];
                for (int j : members_J) rhs += s.r[j - 1];
                on_wall = std::abs(k * lhs - (s.m - k + 1) * rhs) <= tol;
            }
            if (!on_wall) continue;
            WallId wall;
            wall.I = members_I;
            wall.J = members_J;
            wall.k = k;
            for (int i : members_I) wall.rho_I += s.r[i - 1];
            for (int j : members_J) wall.rho_J += s.r[j - 1];
            wall.lambda_I = wall.rho_I / (s.m - k + 1);
            wall.lambda_J = wall.rho_J / k;
            walls.push_back(std::move(wall));
        }
    }
    return walls;
}

bool is_on_wall(const SideLengths& s) {
    const double tol = s.exact_mode() ? 0.0 : 1e-12 * s.rho();
    return !enumerate_walls(s, tol).empty();
}

int centralizer_dimension(const Polygon& p) {
    const int d = p.m + 1;
    const auto basis = linalg::traceless_hermitian_basis(d);
    const int cols = static_cast<int>(basis.size());
    const int n = p.n();
    Eigen::MatrixXd op(2 * d * d * n, cols);
    const auto edges = p.edge_matrices();
    for (int c = 0; c < cols; ++c) {
        int row = 0;
        for (int s = 0; s < n; ++s) {
            const ComplexMatrix comm = basis[c] * edges[s] - edges[s] * basis[c];
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    op(row++, c) = comm(i, j).real();
                    op(row++, c) = comm(i, j).imag();
                }
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op);
    const auto& sigma = svd.singularValues();
    const double top = sigma.size() > 0 ? sigma(0) : 0.0;
    if (top <= 0.0) return cols;
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (sigma(i) > 1e-8 * top) ++rank;
    return cols - rank;
}

int moduli_dimension(int n, int m) { return 2 * m * (n - m - 2); }

namespace {

// Rank of the column set at relative threshold 1e-8, plus an orthonormal
// basis of its span.
std::pair<int, ComplexMatrix> span_of(const std::vector<ComplexVector>& pts,
                                      const std::vector<int>& subset) {
    const int d = static_cast<int>(pts[0].size());
    ComplexMatrix m(d, subset.size());
    for (std::size_t c = 0; c < subset.size(); ++c) m.col(c) = pts[subset[c]];
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double top = sigma.size() > 0 ? sigma(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i)
        if (top > 0 && sigma(i) > 1e-8 * top) ++rank;
    return {rank, svd.matrixU().leftCols(rank)};
}

bool lies_in(const ComplexMatrix& basis, const ComplexVector& p) {
    const ComplexVector residual = p - basis * (basis.adjoint() * p);
    return residual.norm() <= 1e-8;
}

}  // namespace

SemistableVerdict check_semistable(const std::vector<ComplexVector>& points,
                                   const SideLengths& s) {
    const int n = s.n();
    if (static_cast<int>(points.size()) != n)
        throw DomainError("check_semistable: points/side-length count mismatch");
    if (n > 16) throw SizeLimit("check_semistable: n > 16");
    std::vector<ComplexVector> unit(points);
    for (ComplexVector& p : unit) {
        const double norm = p.norm();
        if (norm < 1e-12) throw ZeroVector("check_semistable: zero point");
        p /= norm;
    }
    const double rho = s.rho();
    SemistableVerdict verdict;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i)) subset.push_back(i);
        const auto [rank, basis] = span_of(unit, subset);
        if (rank >= s.m + 1) continue;  // L is all of CP^m, vacuous
        double mass = 0.0;
        for (int i = 0; i < n; ++i)
            if (lies_in(basis, unit[i])) mass += s.r[i];
        const double bound = static_cast<double>(rank) * rho / (s.m + 1);
        const double margin = bound - mass;
        if (margin < worst_margin) {
            worst_margin = margin;
            verdict.subset.clear();
            for (int i : subset) verdict.subset.push_back(i + 1);
            verdict.mass = mass;
            verdict.bound = bound;
        }
    }
    verdict.semistable = worst_margin >= -1e-9 * std::max(1.0, rho);
    return verdict;
}

bool is_general_position(const std::vector<ComplexVector>& points, int m) {
    const int n = static_cast<int>(points.size());
    if (n > 16) throw SizeLimit("is_general_position: n > 16");
    std::vector<ComplexVector> unit(points);
    for (ComplexVector& p : unit) {
        const double norm = p.norm();
        if (norm < 1e-12) throw ZeroVector("is_general_position: zero point");
        p /= norm;
    }
    const int max_size = std::min(n, m + 1);
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i)) subset.push_back(i);
        const int size = static_cast<int>(subset.size());
        if (size < 2 || size > max_size) continue;
        if (span_of(unit, subset).first < size) return false;
    }
    return true;
}

}  // namespace bendix::polygon

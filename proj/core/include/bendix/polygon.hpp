#pragma once

#include <vector>

#include "bendix/types.hpp"

namespace bendix::polygon {

struct TriangleVerdict {
    bool satisfied = true;
    std::vector<int> violated;  // 1-based offending indices
};

/// Strong triangle inequalities of weight m: m*r_i <= sum_{j != i} r_j,
/// equivalently (m+1)*r_i <= rho. Exact in rational mode.
TriangleVerdict check_triangle_inequalities(const SideLengths& s);

/// Strict version of the above, the nonempty-interior condition.
bool strictly_admissible(const SideLengths& s);

/// Frobenius norm of sum(e_i) - Lambda*I.
double closure_defect(const Polygon& p);

bool is_closed(const Polygon& p, double tol_factor = 1e-9);

/// All walls k*rho_I = (m-k+1)*rho_J met by r within tol (exact equality
/// in rational mode, where tol is ignored). Each hyperplane is reported
/// once, canonicalized so that index 1 lies in I. Throws SizeLimit for
/// n > 20.
std::vector<WallId> enumerate_walls(const SideLengths& s, double tol);

bool is_on_wall(const SideLengths& s);

/// True when r lies in the cone cut out by the strong triangle
/// inequalities (wall membership is reported regardless; see is_on_wall).
bool in_cone(const SideLengths& s);

/// Real dimension of the common centralizer of the edges inside traceless
/// Hermitian matrices. Positive iff the (closed) polygon is decomposable.
int centralizer_dimension(const Polygon& p);

/// dim_R of the moduli space for generic r: 2m(n-m-2).
int moduli_dimension(int n, int m);

struct SemistableVerdict {
    bool semistable = true;
    // witness of the worst violation (or tightest satisfied constraint)
    std::vector<int> subset;  // 1-based spanning subset
    double mass = 0.0;
    double bound = 0.0;
};

/// Weighted semistability of a point configuration in CP^m: for every
/// projective subspace L spanned by a subset, the r-mass of all points
/// lying in L is at most (dim L + 1) * rho / (m+1). Throws SizeLimit for
/// n > 16.
SemistableVerdict check_semistable(const std::vector<ComplexVector>& points,
                                   const SideLengths& s);

/// At most k+1 points in any k-dimensional projective subspace.
bool is_general_position(const std::vector<ComplexVector>& points, int m);

}  // namespace bendix::polygon

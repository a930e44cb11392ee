#include "bendix/duality.hpp"

#include <cmath>
#include <sstream>

#include "bendix/polygon.hpp"
#include "bendix/reconstruction.hpp"

namespace bendix::duality {

ComplexMatrix polygon_to_matrix(const Polygon& p) {
    ComplexMatrix n_matrix(p.m + 1, p.n());
    for (int j = 0; j < p.n(); ++j)
        n_matrix.col(j) = std::sqrt(p.edges[j].r) * p.edges[j].w;
    return n_matrix;
}

std::vector<RealVector> gt_block_values(const ComplexMatrix& n_matrix) {
    const ComplexMatrix gram = linalg::hermitize(n_matrix.adjoint() * n_matrix);
    std::vector<RealVector> out;
    out.reserve(gram.rows());
    for (int k = 1; k <= gram.rows(); ++k)
        out.push_back(linalg::eig_hermitian(gram.topLeftCorner(k, k)).values);
    return out;
}

std::vector<double> EuclideanPolygon::lengths() const {
    std::vector<double> out;
    out.reserve(e.size());
    for (const auto& v : e) out.push_back(v.norm());
    return out;
}

Eigen::Vector3d EuclideanPolygon::closure() const {
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    for (const auto& v : e) sum += v;
    return sum;
}

bool EuclideanPolygon::closed(double tol) const {
    return closure().norm() <= tol;
}

ComplexMatrix hat(const Eigen::Vector3d& x) {
    ComplexMatrix a(2, 2);
    a(0, 0) = 0.5 * x(0);
    a(0, 1) = 0.5 * Complex(x(1), x(2));
    a(1, 0) = 0.5 * Complex(x(1), -x(2));
    a(1, 1) = -0.5 * x(0);
    return a;
}

Eigen::Vector3d unhat(const ComplexMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2)
        throw DomainError("unhat: expected a 2x2 matrix");
    return {2.0 * a(0, 0).real(), 2.0 * a(0, 1).real(), 2.0 * a(0, 1).imag()};
}

EuclideanPolygon to_euclidean(const Polygon& p) {
    if (p.m != 1)
        throw DomainError("to_euclidean: only defined for m = 1");
    EuclideanPolygon ep;
    ep.e.reserve(p.n());
    const ComplexMatrix half_id = 0.5 * ComplexMatrix::Identity(2, 2);
    for (const Edge& edge : p.edges)
        ep.e.push_back(unhat(edge.matrix() - edge.r * half_id));
    return ep;
}

Polygon to_polygon(const EuclideanPolygon& ep) {
    std::vector<Edge> edges;
    edges.reserve(ep.n());
    for (const auto& x : ep.e) {
        const double r = x.norm();
        if (r <= 0.0) throw ZeroVector("to_polygon: zero-length edge");
        const ComplexMatrix e =
            hat(x) + 0.5 * r * ComplexMatrix::Identity(2, 2);
        edges.emplace_back(r, linalg::eig_hermitian(e).vectors.col(0));
    }
    return Polygon(1, std::move(edges));
}

HitchinValues hitchin_hamiltonians(const EuclideanPolygon& ep,
                                   const HitchinSpec& spec) {
    const int n = ep.n();
    if (static_cast<int>(spec.alphas.size()) != n)
        throw DomainError("hitchin: need one alpha per edge");
    HitchinValues out;
    out.h.assign(n, 0.0);
    out.defined.assign(n, true);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n && out.defined[j]; ++i)
            if (i != j && spec.alphas[i] == spec.alphas[j])
                out.defined[j] = false;
        if (!out.defined[j]) continue;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            if (i != j)
                sum += ep.e[i].dot(ep.e[j]) / (spec.alphas[i] - spec.alphas[j]);
        out.h[j] = sum;
    }
    return out;
}

ComplexMatrix hitchin_matrix(const EuclideanPolygon& ep,
                             const HitchinSpec& spec, Complex z) {
    const int n = ep.n();
    if (static_cast<int>(spec.alphas.size()) != n)
        throw DomainError("hitchin: need one alpha per edge");
    // p(z)/(z - alpha_i) expanded as a product, so coincident alphas and
    // z = alpha_i are fine
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < n; ++i) {
        Complex coeff = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) coeff *= z - spec.alphas[j];
        a += coeff * hat(ep.e[i]);
    }
    return a;
}

std::vector<Eigen::Vector3d> bending_derivative_r3(const EuclideanPolygon& ep,
                                                   int d) {
    const int n = ep.n();
    if (d < 1 || d > n - 1)
        throw IndexOutOfRange("bending_derivative_r3: diagonal index out of range");
    Eigen::Vector3d diag = Eigen::Vector3d::Zero();
    for (int k = 0; k < d; ++k) diag += ep.e[k];
    std::vector<Eigen::Vector3d> out(n, Eigen::Vector3d::Zero());
    for (int k = 0; k < d; ++k) out[k] = diag.cross(ep.e[k]);
    return out;
}

InvarianceReport hitchin_invariance_report(const EuclideanPolygon& ep,
                                           const HitchinSpec& spec) {
    const int n = ep.n();
    if (static_cast<int>(spec.alphas.size()) != n)
        throw DomainError("hitchin: need one alpha per edge");
    InvarianceReport rep;
    rep.defined.assign(n, true);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && spec.alphas[i] == spec.alphas[j])
                rep.defined[j] = false;

    for (int d = 2; d <= n - 2; ++d) {
        rep.flows.push_back(d);
        const auto edot = bending_derivative_r3(ep, d);
        std::vector<double> dh(n, 0.0);
        for (int j = 0; j < n; ++j) {
            if (!rep.defined[j]) continue;
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                sum += (edot[i].dot(ep.e[j]) + ep.e[i].dot(edot[j])) /
                       (spec.alphas[i] - spec.alphas[j]);
            }
            dh[j] = sum;
        }
        rep.dh_dt.push_back(std::move(dh));
    }
    return rep;
}

EuclideanPolygon sample_generic_pentagon(const SideLengths& s,
                                         std::uint64_t seed) {
    if (s.m != 1 || s.n() != 5)
        throw DomainError("sample_generic_pentagon: need m = 1, n = 5");
    for (int tries = 0; tries < 1000; ++tries) {
        const Polygon p = reconstruction::sample_polygon(s, seed + tries);
        EuclideanPolygon ep = to_euclidean(p);
        const double triple = ep.e[1].cross(ep.e[0]).dot(ep.e[4]);
        if (std::abs(triple) >= 1e-3) return ep;
    }
    throw EmptyInterior("sample_generic_pentagon: genericity redraw cap reached");
}

}  // namespace bendix::duality

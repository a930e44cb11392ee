#include "bendix/bending.hpp"

#include <cmath>
#include <sstream>

#include "bendix/spectral.hpp"

namespace bendix::bending {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// (x, y) = y* x, linear in the first slot.
Complex ip(const ComplexVector& x, const ComplexVector& y) { return y.dot(x); }

ComplexMatrix prefix_sum(const std::vector<ComplexMatrix>& edges, int i) {
    ComplexMatrix a = edges[0];
    for (int k = 1; k <= i; ++k) a += edges[k];
    return linalg::hermitize(a);
}

ComplexVector top_eigenvector(const ComplexMatrix& e) {
    return linalg::eig_hermitian(e).vectors.col(0);
}

}  // namespace

double angle_difference(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -M_PI) d += kTwoPi;
    return d;
}

Polygon bend(const Polygon& p, const FlowSpec& f) {
    const int n = p.n();
    if (f.i < 1 || f.i > n - 3)
        throw IndexOutOfRange("bend: diagonal index must be in 1..n-3");
    if (f.j < 1 || f.j > p.m + 1)
        throw IndexOutOfRange("bend: eigenvalue index must be in 1..m+1");

    const ComplexMatrix a = prefix_sum(p.edge_matrices(), f.i);
    const Spectrum s = linalg::eig_hermitian(a);
    if (!s.simple(f.j)) {
        std::ostringstream msg;
        msg << "bend: lambda_{" << f.i << "," << f.j
            << "} is degenerate (gap " << s.gap(f.j) << ")";
        throw DegenerateEigenvalue(msg.str());
    }
    const ComplexMatrix proj = linalg::spectral_projection(s, f.j);
    const ComplexMatrix u = linalg::unitary_exp_projection(proj, f.t);

    Polygon out = p;
    for (int k = 0; k <= f.i; ++k)
        out.edges[k] = Edge(p.edges[k].r, u * p.edges[k].w);
    return out;
}

Complex four_point(const ComplexVector& a, const ComplexVector& b,
                   const ComplexVector& c, const ComplexVector& d) {
    const double na = a.squaredNorm(), nb = b.squaredNorm();
    const double nc = c.squaredNorm(), nd = d.squaredNorm();
    if (na < 1e-24 || nb < 1e-24 || nc < 1e-24 || nd < 1e-24)
        throw ZeroVector("four_point: zero argument");
    return ip(a, b) * ip(b, c) * ip(c, d) * ip(d, a) / (na * nb * nc * nd);
}

AngleSet angle_values(const Polygon& p) {
    const int n = p.n();
    const int m = p.m;
    const auto index_set = spectral::action_index_set(n, m);

    std::vector<Spectrum> spectra(n - 1);
    const auto edges = p.edge_matrices();
    {
        ComplexMatrix a = ComplexMatrix::Zero(m + 1, m + 1);
        for (int i = 0; i < n - 1; ++i) {
            a += edges[i];
            spectra[i] = linalg::eig_hermitian(linalg::hermitize(a));
        }
    }

    // Strictness of the unforced interlacing inequalities between rows
    // (i-1, i) and (i, i+1) for every row carrying an angle.
    auto forced_value = [&](int i, int j) -> int {
        // 1-based j; 0 = free, 1 = pinned to Lambda, 2 = structural zero
        if (i == n - 1) return j <= m + 1 - structural_zero_count(m, i) ? 1 : 2;
        if (j <= forced_lambda_count(n, m, i)) return 1;
        if (j > m + 1 - structural_zero_count(m, i)) return 2;
        return 0;
    };
    auto row_value = [&](int i, int j) -> double {  // 1-based j
        if (i == n - 1) return forced_value(i, j) == 1 ? p.lambda() : 0.0;
        return spectra[i].values(j - 1);
    };
    auto check_rows_strict = [&](int lo, const IndexPair& blame) {
        const int hi = lo + 1;
        const double tol =
            1e-8 * std::max({1.0, std::abs(row_value(hi, 1)), std::abs(row_value(lo, 1))});
        for (int j = 1; j <= m + 1; ++j) {
            const bool same_forced =
                forced_value(hi, j) != 0 && forced_value(hi, j) == forced_value(lo, j);
            if (!same_forced && row_value(hi, j) - row_value(lo, j) <= tol)
                goto violated;
            if (j + 1 <= m + 1) {
                const bool same2 = forced_value(lo, j) != 0 &&
                                   forced_value(lo, j) == forced_value(hi, j + 1);
                if (!same2 && row_value(lo, j) - row_value(hi, j + 1) <= tol)
                    goto violated;
            }
        }
        return;
    violated:
        std::ostringstream msg;
        msg << "interlacing between rows " << lo << " and " << hi
            << " is not strict (angle " << blame.first << "," << blame.second << ")";
        throw StrictInterlacingViolation(msg.str());
    };

    AngleSet out;
    int last_checked = -1;
    for (const auto& [i, j] : index_set) {
        if (i != last_checked) {
            check_rows_strict(i - 1, {i, j});
            check_rows_strict(i, {i, j});
            last_checked = i;
        }
        const ComplexVector& w1 = p.edges[i].w;      // w_{i+1}
        const ComplexVector& w2 = p.edges[i + 1].w;  // w_{i+2}
        const ComplexVector u_j = spectra[i].vectors.col(j - 1);
        const ComplexVector u_j1 = spectra[i].vectors.col(j);
        const Complex beta = four_point(w1, u_j, w2, u_j1);
        out.beta[{i, j}] = beta;
        double theta = std::atan2(beta.imag(), beta.real());
        if (theta <= -M_PI) theta = M_PI;  // branch (-pi, pi]
        out.theta[{i, j}] = theta;
    }
    // Bend-invariant overlap magnitudes for every unforced column.
    for (int i = 1; i <= n - 3; ++i) {
        const auto [first, last] = unforced_range(n, m, i);
        for (int j = first; j <= last; ++j) {
            const ComplexVector u = spectra[i].vectors.col(j - 1);
            const Complex alpha = ip(p.edges[i].w, u) * ip(u, p.edges[i + 1].w);
            out.alpha_sq[{i, j}] = std::norm(alpha);
        }
    }
    return out;
}

std::map<IndexPair, double> mu_values(const GtsPattern& g) {
    std::map<IndexPair, double> out;
    for (int i = 0; i < g.n; ++i) {
        double sum = 0.0;
        for (int j = 1; j <= g.m + 1; ++j) {
            sum += g.rows[i](j - 1);
            out[{i, j}] = sum;
        }
    }
    return out;
}

Observable lambda_observable(int i, int j) {
    return {[i, j](const std::vector<ComplexMatrix>& edges) {
                const Spectrum s = linalg::eig_hermitian(prefix_sum(edges, i));
                return s.values(j - 1);
            },
            false};
}

Observable mu_observable(int i, int j) {
    return {[i, j](const std::vector<ComplexMatrix>& edges) {
                const Spectrum s = linalg::eig_hermitian(prefix_sum(edges, i));
                return s.values.head(j).sum();
            },
            false};
}

Observable theta_observable(int i, int j) {
    return {[i, j](const std::vector<ComplexMatrix>& edges) {
                const Spectrum s = linalg::eig_hermitian(prefix_sum(edges, i));
                const ComplexVector w1 = top_eigenvector(edges[i]);
                const ComplexVector w2 = top_eigenvector(edges[i + 1]);
                const Complex beta = four_point(w1, s.vectors.col(j - 1), w2,
                                                s.vectors.col(j));
                const double theta = std::atan2(beta.imag(), beta.real());
                return theta <= -M_PI ? M_PI : theta;
            },
            true};
}

EdgeGradients observable_gradients(const Observable& f,
                                   const std::vector<ComplexMatrix>& edges,
                                   double h) {
    const int dim = static_cast<int>(edges[0].rows());
    const auto basis = linalg::hermitian_basis(dim);
    EdgeGradients out;
    out.grad.assign(edges.size(), ComplexMatrix::Zero(dim, dim));
    std::vector<ComplexMatrix> probe = edges;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        for (const ComplexMatrix& b : basis) {
            probe[k] = edges[k] + h * b;
            const double fp = f.eval(probe);
            probe[k] = edges[k] - h * b;
            const double fm = f.eval(probe);
            probe[k] = edges[k];
            const double df =
                f.angle_valued ? angle_difference(fp, fm) : fp - fm;
            out.grad[k] += (df / (2.0 * h)) * b;
        }
    }
    return out;
}

double bracket_from_gradients(const std::vector<ComplexMatrix>& edges,
                              const EdgeGradients& f, const EdgeGradients& g) {
    double total = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const ComplexMatrix comm =
            f.grad[k] * g.grad[k] - g.grad[k] * f.grad[k];
        total += (edges[k] * comm).trace().imag();
    }
    return total;
}

double poisson_bracket_fd(const Observable& f, const Observable& g,
                          const Polygon& p, double h) {
    const auto edges = p.edge_matrices();
    const EdgeGradients gf = observable_gradients(f, edges, h);
    const EdgeGradients gg = observable_gradients(g, edges, h);
    return bracket_from_gradients(edges, gf, gg);
}

double default_fd_step(const Polygon& p) {
    return 1e-5 * std::max(1.0, p.lambda());
}

}  // namespace bendix::bending

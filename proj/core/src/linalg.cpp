#include "bendix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bendix {

double Spectrum::scale() const {
    double top = 0.0;
    for (int i = 0; i < values.size(); ++i) top = std::max(top, std::abs(values(i)));
    return std::max(1.0, top);
}

double Spectrum::gap(int j) const {
    const int d = dim();
    if (j < 1 || j > d) throw IndexOutOfRange("eigenvalue index out of range");
    double g = std::numeric_limits<double>::infinity();
    if (j > 1) g = std::min(g, std::abs(values(j - 2) - values(j - 1)));
    if (j < d) g = std::min(g, std::abs(values(j - 1) - values(j)));
    return g;
}

bool Spectrum::simple(int j, double tol_factor) const {
    return gap(j) > tol_factor * scale();
}

namespace linalg {

namespace {

// Lexicographic order on phase-fixed columns; only used to break exact
// eigenvalue ties deterministically.
bool column_less(const ComplexMatrix& v, int a, int b) {
    for (int i = 0; i < v.rows(); ++i) {
        const Complex x = v(i, a), y = v(i, b);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

void fix_column_phase(ComplexMatrix& v, int col) {
    int arg_max = 0;
    double best = -1.0;
    for (int i = 0; i < v.rows(); ++i) {
        const double a = std::abs(v(i, col));
        if (a > best + 1e-15) {  // ties go to the lowest index
            best = a;
            arg_max = i;
        }
    }
    const Complex pivot = v(arg_max, col);
    const double a = std::abs(pivot);
    if (a > 0) v.col(col) *= std::conj(pivot) / a;
    v(arg_max, col) = Complex(std::abs(v(arg_max, col)), 0.0);
}

}  // namespace

bool is_hermitian(const ComplexMatrix& a, double tol_factor) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.norm());
    return (a - a.adjoint()).norm() <= tol_factor * scale;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
    return 0.5 * (a + a.adjoint().eval());
}

Spectrum eig_hermitian(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw DomainError("eig_hermitian: matrix is not square");
    if (!is_hermitian(a, 1e-10))
        throw DomainError("eig_hermitian: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a));
    if (solver.info() != Eigen::Success) {
        std::ostringstream report;
        report << "Hermitian eigensolver did not converge: dim=" << a.rows()
               << " ||A||=" << a.norm();
        throw EigenSolverFailure(report.str());
    }

    const int d = static_cast<int>(a.rows());
    Spectrum s;
    s.values = RealVector(d);
    s.vectors = ComplexMatrix(d, d);
    ComplexMatrix raw = solver.eigenvectors();
    for (int j = 0; j < d; ++j) fix_column_phase(raw, j);

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const double lx = solver.eigenvalues()(x), ly = solver.eigenvalues()(y);
        if (lx != ly) return lx > ly;  // non-increasing
        return column_less(raw, x, y);
    });
    for (int j = 0; j < d; ++j) {
        s.values(j) = solver.eigenvalues()(order[j]);
        s.vectors.col(j) = raw.col(order[j]);
    }
    return s;
}

ComplexMatrix spectral_projection(const Spectrum& s, int j) {
    if (j < 1 || j > s.dim())
        throw IndexOutOfRange("spectral_projection: index out of range");
    if (!s.simple(j)) {
        std::ostringstream msg;
        msg << "eigenvalue " << j << " (" << s.values(j - 1)
            << ") is degenerate: gap " << s.gap(j) << " below tolerance";
        throw DegenerateEigenvalue(msg.str());
    }
    const ComplexVector u = s.vectors.col(j - 1);
    return u * u.adjoint();
}

ComplexMatrix unitary_exp_projection(const ComplexMatrix& e, double t) {
    if ((e * e - e).norm() > 1e-10)
        throw NotAProjection("unitary_exp_projection: E^2 != E");
    const int d = static_cast<int>(e.rows());
    const Complex phase = std::exp(Complex(0.0, t)) - 1.0;
    return ComplexMatrix::Identity(d, d) + phase * e;
}

std::vector<ComplexMatrix> hermitian_basis(int dim) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(dim) * dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i) {
        ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
        b(i, i) = 1.0;
        basis.push_back(b);
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            ComplexMatrix sym = ComplexMatrix::Zero(dim, dim);
            sym(i, j) = inv_sqrt2;
            sym(j, i) = inv_sqrt2;
            basis.push_back(sym);
            ComplexMatrix asym = ComplexMatrix::Zero(dim, dim);
            asym(i, j) = Complex(0.0, -inv_sqrt2);
            asym(j, i) = Complex(0.0, inv_sqrt2);
            basis.push_back(asym);
        }
    }
    return basis;
}

std::vector<ComplexMatrix> traceless_hermitian_basis(int dim) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(dim) * dim - 1);
    for (int k = 1; k < dim; ++k) {
        ComplexMatrix b = ComplexMatrix::Zero(dim, dim);
        const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) b(i, i) = 1.0 / norm;
        b(k, k) = -static_cast<double>(k) / norm;
        basis.push_back(b);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            ComplexMatrix sym = ComplexMatrix::Zero(dim, dim);
            sym(i, j) = inv_sqrt2;
            sym(j, i) = inv_sqrt2;
            basis.push_back(sym);
            ComplexMatrix asym = ComplexMatrix::Zero(dim, dim);
            asym(i, j) = Complex(0.0, -inv_sqrt2);
            asym(j, i) = Complex(0.0, inv_sqrt2);
            basis.push_back(asym);
        }
    }
    return basis;
}

}  // namespace linalg
}  // namespace bendix

#include "bendix/rng.hpp"

#include <cmath>

namespace bendix {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Rng::uniform01() {
    // 53 random bits, exact on the double grid
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return radius * std::cos(kTwoPi * u2);
}

double Rng::angle() {
    const double a = -M_PI + kTwoPi * uniform01();
    return a <= -M_PI ? M_PI : a;
}

Eigen::VectorXcd Rng::unit_vector(int dim) {
    Eigen::VectorXcd v(dim);
    double norm_sq = 0.0;
    do {
        for (int i = 0; i < dim; ++i) {
            v(i) = std::complex<double>(normal(), normal());
        }
        norm_sq = v.squaredNorm();
    } while (norm_sq < 1e-12);
    return v / std::sqrt(norm_sq);
}

Eigen::MatrixXcd Rng::haar_unitary(int dim) {
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            g(i, j) = std::complex<double>(normal(), normal());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the diagonal phases so the distribution is Haar
    for (int j = 0; j < dim; ++j) {
        std::complex<double> d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0 ? d / a : 1.0);
    }
    return q;
}

}  // namespace bendix

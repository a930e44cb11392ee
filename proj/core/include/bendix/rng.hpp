#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace bendix {

/// Deterministic random source. All sampling in the library goes through
/// this wrapper; the raw mt19937_64 stream is standardized, and the
/// derived distributions below are built from it directly so that a seed
/// reproduces bit-identical samples across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform01();

    /// Uniform in [a, b).
    double uniform(double a, double b);

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform angle in (-pi, pi].
    double angle();

    /// Haar-ish random unit vector in C^dim.
    Eigen::VectorXcd unit_vector(int dim);

    /// Haar-distributed unitary: QR of a complex Gaussian matrix with the
    /// R diagonal phases absorbed.
    Eigen::MatrixXcd haar_unitary(int dim);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bendix

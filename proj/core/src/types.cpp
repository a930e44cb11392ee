#include "bendix/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bendix {

namespace {

void require_side_lengths(int m, std::size_t n, const char* what) {
    if (m < 1) throw DomainError(std::string(what) + ": m must be >= 1");
    if (n < 3) throw DomainError(std::string(what) + ": need at least 3 sides");
}

}  // namespace

SideLengths::SideLengths(int m, std::vector<double> r_in)
    : m(m), r(std::move(r_in)) {
    require_side_lengths(m, r.size(), "SideLengths");
    for (double v : r)
        if (!(v > 0.0)) throw DomainError("SideLengths: side lengths must be positive");
}

SideLengths::SideLengths(int m, std::vector<Rational> exact_in) : m(m) {
    require_side_lengths(m, exact_in.size(), "SideLengths");
    r.reserve(exact_in.size());
    for (const Rational& v : exact_in) {
        if (!(v > 0)) throw DomainError("SideLengths: side lengths must be positive");
        r.push_back(to_double(v));
    }
    exact = std::move(exact_in);
}

double SideLengths::rho() const {
    return std::accumulate(r.begin(), r.end(), 0.0);
}

Rational SideLengths::exact_rho() const {
    if (!exact) throw DomainError("SideLengths: not in exact mode");
    Rational sum = 0;
    for (const Rational& v : *exact) sum += v;
    return sum;
}

bool SideLengths::integral() const {
    if (exact) {
        return std::all_of(exact->begin(), exact->end(),
                           [](const Rational& v) { return is_integer(v); });
    }
    return std::all_of(r.begin(), r.end(), [](double v) {
        return std::abs(v - std::round(v)) <= 1e-9;
    });
}

std::vector<long long> SideLengths::integer_values() const {
    if (!integral())
        throw DomainError("SideLengths: integer side lengths required");
    std::vector<long long> out;
    out.reserve(r.size());
    if (exact) {
        for (const Rational& v : *exact)
            out.push_back(numerator(v).convert_to<long long>());
    } else {
        for (double v : r) out.push_back(std::llround(v));
    }
    return out;
}

Edge::Edge(double r_in, ComplexVector w_in) : r(r_in), w(std::move(w_in)) {
    if (!(r > 0.0)) throw DomainError("Edge: weight must be positive");
    const double norm = w.norm();
    if (std::abs(norm - 1.0) > 1e-6)
        throw DomainError("Edge: direction vector is not unit length");
    // only touch vectors that actually violate the unit invariant, so
    // serialization round trips stay bit-identical
    if (std::abs(norm - 1.0) > 1e-12) w /= norm;
}

ComplexMatrix Edge::matrix() const { return r * (w * w.adjoint()); }

Polygon::Polygon(int m_in, std::vector<Edge> edges_in)
    : m(m_in), edges(std::move(edges_in)) {
    if (m < 1) throw DomainError("Polygon: m must be >= 1");
    for (const Edge& e : edges)
        if (e.dim() != m + 1)
            throw DomainError("Polygon: edge dimension does not match m+1");
}

double Polygon::rho() const {
    double sum = 0.0;
    for (const Edge& e : edges) sum += e.r;
    return sum;
}

SideLengths Polygon::side_lengths() const {
    std::vector<double> r;
    r.reserve(edges.size());
    for (const Edge& e : edges) r.push_back(e.r);
    return SideLengths(m, std::move(r));
}

std::vector<ComplexMatrix> Polygon::edge_matrices() const {
    std::vector<ComplexMatrix> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(e.matrix());
    return out;
}

double GtsPattern::lambda() const { return rho() / (m + 1); }

double GtsPattern::rho() const { return rows.back().sum(); }

std::vector<double> GtsPattern::side_lengths() const {
    std::vector<double> out;
    out.reserve(rows.size());
    double prev = 0.0;
    for (const RealVector& row : rows) {
        const double sum = row.sum();
        out.push_back(sum - prev);
        prev = sum;
    }
    return out;
}

int structural_zero_count(int m, int i) { return std::max(0, m - i); }

int forced_lambda_count(int n, int m, int i) {
    const int t = i - (n - m - 2);
    return std::clamp(t, 0, m + 1);
}

std::pair<int, int> unforced_range(int n, int m, int i) {
    const int first = forced_lambda_count(n, m, i) + 1;
    const int last = m + 1 - structural_zero_count(m, i);
    return {first, last};
}

}  // namespace bendix

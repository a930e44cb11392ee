#include "bendix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bendix/polygon.hpp"

namespace bendix::spectral {

std::vector<ComplexMatrix> diagonals(const Polygon& p) {
    std::vector<ComplexMatrix> out;
    out.reserve(p.n());
    ComplexMatrix sum = ComplexMatrix::Zero(p.m + 1, p.m + 1);
    for (const Edge& e : p.edges) {
        sum += e.matrix();
        out.push_back(linalg::hermitize(sum));
    }
    return out;
}

GtsPattern action_values(const Polygon& p, double closure_tol_factor) {
    const double lambda = p.lambda();
    const double defect = polygon::closure_defect(p);
    if (defect > closure_tol_factor * lambda) {
        std::ostringstream msg;
        msg << "polygon is not closed: defect " << defect << " > "
            << closure_tol_factor * lambda;
        throw ClosureViolation(msg.str());
    }

    const int n = p.n();
    const int m = p.m;
    GtsPattern g;
    g.n = n;
    g.m = m;
    g.rows.resize(n);

    // Row 0 is the spectrum of the rank-one edge itself.
    g.rows[0] = RealVector::Zero(m + 1);
    g.rows[0](0) = p.edges[0].r;

    const auto diag = diagonals(p);
    const double snap = 1e-8 * lambda;
    for (int i = 1; i < n; ++i) {
        Spectrum s = linalg::eig_hermitian(diag[i]);
        RealVector row = s.values;
        const int zeros = structural_zero_count(m, i);
        for (int j = m + 1 - zeros; j < m + 1; ++j) row(j) = 0.0;
        const int forced = forced_lambda_count(n, m, i);
        for (int j = 0; j < forced; ++j)
            if (std::abs(row(j) - lambda) <= snap) row(j) = lambda;
        g.rows[i] = row;
    }
    return g;
}

Complex wa_char_ratio(const RealVector& lambda, const RealVector& weights,
                      double r, Complex z) {
    if (lambda.size() != weights.size())
        throw DomainError("wa_char_ratio: size mismatch");
    Complex sum = 0.0;
    for (int j = 0; j < lambda.size(); ++j) {
        const Complex d = z - lambda(j);
        if (std::abs(d) == 0.0)
            throw PoleEvaluation("wa_char_ratio: z hits an eigenvalue");
        sum += weights(j) / d;
    }
    return 1.0 - r * sum;
}

bool check_interlacing(const RealVector& lambda, const RealVector& nu,
                       bool r_positive, double slack) {
    if (lambda.size() != nu.size()) return false;
    const RealVector& upper = r_positive ? nu : lambda;
    const RealVector& lower = r_positive ? lambda : nu;
    for (int j = 0; j < lambda.size(); ++j) {
        if (upper(j) < lower(j) - slack) return false;
        if (j + 1 < lambda.size() && lower(j) < upper(j + 1) - slack)
            return false;
    }
    return true;
}

RealVector wa_weights(const RealVector& lambda, const RealVector& nu, double r) {
    const int k = static_cast<int>(lambda.size());
    if (nu.size() != k) throw DomainError("wa_weights: size mismatch");
    if (!(r > 0.0)) throw DomainError("wa_weights: r must be positive");

    double scale = 1.0;
    for (int j = 0; j < k; ++j)
        scale = std::max({scale, std::abs(lambda(j)), std::abs(nu(j))});
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (std::abs(lambda(a) - lambda(b)) <= 1e-12 * scale)
                throw RepeatedEigenvalue(
                    "wa_weights: surviving eigenvalues coincide; cancel forced "
                    "coincidences first");
    if (!check_interlacing(lambda, nu, true, 1e-9 * scale))
        throw InterlacingViolation("wa_weights: spectra do not interlace");

    RealVector weights(k);
    for (int j = 0; j < k; ++j) {
        double numerator = 1.0;
        for (int i = 0; i < k; ++i) numerator *= lambda(j) - nu(i);
        double denominator = r;
        for (int i = 0; i < k; ++i)
            if (i != j) denominator *= lambda(j) - lambda(i);
        double w = -numerator / denominator;
        if (w < -1e-10)
            throw InterlacingViolation("wa_weights: negative weight " +
                                       std::to_string(w));
        weights(j) = std::max(w, 0.0);
    }
    return weights;
}

int polytope_dimension(int n, int m) { return (n - m - 2) * m; }

std::vector<std::pair<int, int>> action_index_set(int n, int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n - 3; ++i) {
        const auto [first, last] = unforced_range(n, m, i);
        for (int j = first; j <= last - 1; ++j) out.emplace_back(i, j);
    }
    return out;
}

namespace {

void fail(const std::string& what) { throw DomainError("pattern invalid: " + what); }

}  // namespace

void validate_pattern(const GtsPattern& g, double slack_factor) {
    const int n = g.n;
    const int m = g.m;
    if (n < 3 || m < 1) fail("n >= 3 and m >= 1 required");
    if (static_cast<int>(g.rows.size()) != n) fail("row count != n");
    for (const RealVector& row : g.rows)
        if (row.size() != m + 1) fail("row width != m+1");

    const double lambda = g.lambda();
    const double rho = g.rho();
    const double slack = slack_factor * std::max(1.0, rho);

    // positive side lengths, i.e. strictly increasing row sums
    double prev_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double sum = g.row_sum(i);
        if (!(sum > prev_sum)) fail("row sums must increase (r_i > 0)");
        prev_sum = sum;
    }

    for (int i = 0; i < n; ++i) {
        const RealVector& row = g.rows[i];
        for (int j = 0; j + 1 < m + 1; ++j)
            if (row(j) < row(j + 1) - slack) fail("row not non-increasing");
        if (row(m) < -slack) fail("negative entry");
        const int zeros = structural_zero_count(m, i);
        for (int j = m + 1 - zeros; j < m + 1; ++j)
            if (row(j) != 0.0) fail("structural zero not exactly zero");
        const int forced = forced_lambda_count(n, m, i);
        for (int j = 0; j < forced; ++j)
            if (std::abs(row(j) - lambda) > slack) fail("forced Lambda entry off");
    }
    for (int j = 0; j < m + 1; ++j)
        if (g.rows[n - 1](j) != g.rows[n - 1](0)) fail("top row not constant");
    if (std::abs(g.rows[0](0) - g.row_sum(0)) > slack) fail("row 0 shape");

    for (int i = 1; i < n; ++i) {
        const RealVector& hi = g.rows[i];
        const RealVector& lo = g.rows[i - 1];
        for (int j = 0; j < m + 1; ++j) {
            if (hi(j) < lo(j) - slack) fail("interlacing (lower bound)");
            if (j + 1 < m + 1 && lo(j) < hi(j + 1) - slack)
                fail("interlacing (upper bound)");
        }
    }
}

Polytope::Polytope(int n_in, int m_in, std::vector<Rational> r_in)
    : n(n_in), m(m_in), r(std::move(r_in)) {
    if (static_cast<int>(r.size()) != n) throw DomainError("Polytope: |r| != n");
}

Polytope Polytope::from_side_lengths(const SideLengths& s) {
    if (!s.exact_mode())
        throw DomainError("Polytope: exact side lengths required");
    return Polytope(s.n(), s.m, *s.exact);
}

Rational Polytope::rho() const {
    Rational sum = 0;
    for (const Rational& v : r) sum += v;
    return sum;
}

Rational Polytope::lambda() const { return rho() / (m + 1); }

bool Polytope::contains(const std::vector<std::vector<Rational>>& rows,
                        const Rational& slack) const {
    if (static_cast<int>(rows.size()) != n) return false;
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != m + 1) return false;

    const Rational top = lambda();
    Rational prefix = 0;
    for (int i = 0; i < n; ++i) {
        prefix += r[i];
        Rational sum = 0;
        for (const Rational& v : rows[i]) sum += v;
        if (abs(sum - prefix) > slack) return false;

        const int zeros = structural_zero_count(m, i);
        for (int j = m + 1 - zeros; j < m + 1; ++j)
            if (abs(rows[i][j]) > slack) return false;
        if (rows[i][m] < -slack) return false;
    }
    for (int j = 0; j < m + 1; ++j)
        if (abs(rows[n - 1][j] - top) > slack) return false;
    if (abs(rows[0][0] - r[0]) > slack) return false;

    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < m + 1; ++j) {
            if (rows[i][j] < rows[i - 1][j] - slack) return false;
            if (j + 1 < m + 1 && rows[i - 1][j] < rows[i][j + 1] - slack)
                return false;
        }
    }
    return true;
}

}  // namespace bendix::spectral

#include "bendix/reconstruction.hpp"

#include <cmath>
#include <sstream>

#include "bendix/polygon.hpp"
#include "bendix/rng.hpp"
#include "bendix/spectral.hpp"

namespace bendix::reconstruction {

namespace {

struct StepSurvivors {
    // Eigenvalues of A_{k-1} that survive cancellation of forced
    // coincidences with row k, non-increasing, paired with the column of
    // the eigenvector to use (the kernel keeps a single slot, assigned to
    // the first kernel basis vector).
    std::vector<double> lambda;
    std::vector<int> column;
    // Target eigenvalues of A_k after the same cancellation.
    std::vector<double> nu;
};

// Survivor bookkeeping for the step A_{k-1} -> A_k, from exact pattern
// rows. Forced zeros (rank) and forced Lambdas (top-row interlacing)
// cancel pairwise between the rows; one zero survives while the rank
// still grows, one Lambda enters per step near the top.
StepSurvivors survivors_for_step(const GtsPattern& g, int k) {
    const int n = g.n, m = g.m;
    const double lambda_top = g.lambda();
    const int z_prev = structural_zero_count(m, k - 1);
    const int z_cur = structural_zero_count(m, k);
    const int t_prev = forced_lambda_count(n, m, k - 1);
    const int t_cur = forced_lambda_count(n, m, k);

    StepSurvivors s;
    const auto [lo_prev, hi_prev] = unforced_range(n, m, k - 1);
    for (int j = lo_prev; j <= hi_prev; ++j) {
        s.lambda.push_back(g.rows[k - 1](j - 1));
        s.column.push_back(j - 1);
    }
    if (z_prev > z_cur) {
        s.lambda.push_back(0.0);
        s.column.push_back(m + 1 - z_prev);  // first kernel column
    }
    if (t_cur > t_prev) s.nu.push_back(lambda_top);
    const auto [lo_cur, hi_cur] = unforced_range(n, m, k);
    for (int j = lo_cur; j <= hi_cur; ++j) s.nu.push_back(g.rows[k](j - 1));
    return s;
}

// The residue formula needs the surviving eigenvalues of every A_{k-1}
// simple; collisions (with each other, or of an unforced value with a
// still-present forced Lambda) are boundary patterns.
void reject_boundary(const GtsPattern& g) {
    const double tol = 1e-10 * std::max(1.0, g.lambda());
    for (int k = 1; k < g.n; ++k) {
        const StepSurvivors s = survivors_for_step(g, k);
        for (std::size_t a = 0; a < s.lambda.size(); ++a)
            for (std::size_t b = a + 1; b < s.lambda.size(); ++b)
                if (std::abs(s.lambda[a] - s.lambda[b]) <= tol) {
                    std::ostringstream msg;
                    msg << "boundary pattern: surviving eigenvalues of row "
                        << k - 1 << " collide at " << s.lambda[a];
                    throw BoundaryPattern(msg.str());
                }
        if (forced_lambda_count(g.n, g.m, k - 1) > 0) {
            for (double v : s.lambda)
                if (std::abs(v - g.lambda()) <= tol)
                    throw BoundaryPattern(
                        "boundary pattern: unforced eigenvalue touches Lambda");
        }
    }
}

}  // namespace

Polygon reconstruct(const GtsPattern& g, const PhaseMap& phases) {
    spectral::validate_pattern(g);
    reject_boundary(g);

    const int n = g.n, m = g.m;
    const std::vector<double> r = g.side_lengths();
    const double scale = std::max(1.0, g.lambda());

    auto phase_of = [&phases](int edge, int slot) {
        const auto it = phases.find({edge, slot});
        return it == phases.end() ? 0.0 : it->second;
    };

    std::vector<Edge> edges;
    edges.reserve(n);
    ComplexVector w1 = ComplexVector::Zero(m + 1);
    w1(0) = 1.0;
    edges.emplace_back(r[0], w1);
    ComplexMatrix a = edges[0].matrix();

    for (int k = 1; k < n; ++k) {
        const Spectrum spec = linalg::eig_hermitian(a);
        for (int j = 0; j < m + 1; ++j) {
            if (std::abs(spec.values(j) - g.rows[k - 1](j)) > 1e-6 * scale)
                throw DomainError(
                    "reconstruct: intermediate spectrum drifted from the "
                    "pattern at row " +
                    std::to_string(k - 1));
        }
        const StepSurvivors s = survivors_for_step(g, k);
        const int count = static_cast<int>(s.lambda.size());
        RealVector lam(count), nu(count);
        for (int i = 0; i < count; ++i) {
            lam(i) = s.lambda[i];
            nu(i) = s.nu[i];
        }
        const RealVector weights = spectral::wa_weights(lam, nu, r[k]);

        ComplexVector w = ComplexVector::Zero(m + 1);
        for (int i = 0; i < count; ++i) {
            const Complex rot =
                std::exp(Complex(0.0, phase_of(k + 1, i + 1)));
            w += std::sqrt(weights(i)) * rot * spec.vectors.col(s.column[i]);
        }
        const double norm = w.norm();
        if (std::abs(norm - 1.0) > 1e-6) {
            std::ostringstream msg;
            msg << "reconstruct: ||w_" << k + 1 << "|| = " << norm
                << ", row sums are inconsistent";
            throw NormDefect(msg.str());
        }
        edges.emplace_back(r[k], w / norm);
        a = linalg::hermitize(a + edges.back().matrix());
    }
    return Polygon(m, std::move(edges));
}

GtsPattern random_interior_pattern(const SideLengths& s, std::uint64_t seed) {
    if (!polygon::strictly_admissible(s))
        throw EmptyInterior(
            "random_interior_pattern: side lengths do not strictly satisfy "
            "the strong triangle inequalities");
    const int n = s.n(), m = s.m;
    const double lambda = s.lambda();
    const double r_n = s.r[n - 1];
    std::vector<double> prefix(n);
    {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) prefix[i] = (acc += s.r[i]);
    }
    // Bounds transported from the forced top rows along interlacing
    // chains: going up a column only increases an entry, going up-right
    // only decreases it.
    auto chain_upper = [&](int j) {  // 1-based column
        return j <= m ? lambda : lambda - r_n;
    };
    auto chain_lower = [&](int i, int j) {
        const int col = j + (n - 2 - i);
        if (col == m + 1) return lambda - r_n;
        return col <= m ? lambda : 0.0;  // col <= m only for forced slots
    };

    Rng rng(seed);
    const double margin = 1e-7 * lambda;
    constexpr int kAttemptCap = 100000;
    constexpr int kRowCap = 200;

    GtsPattern g;
    g.n = n;
    g.m = m;
    for (int attempt = 0; attempt < kAttemptCap; ++attempt) {
        g.rows.assign(n, RealVector::Zero(m + 1));
        g.rows[0](0) = s.r[0];
        bool ok = true;
        for (int i = 1; i <= n - 3 && ok; ++i) {
            RealVector& row = g.rows[i];
            const int forced = forced_lambda_count(n, m, i);
            for (int j = 1; j <= forced; ++j) row(j - 1) = lambda;
            const auto [first, last] = unforced_range(n, m, i);
            double free_sum = prefix[i] - forced * lambda;
            std::vector<double> lo, hi;
            for (int j = first; j <= last; ++j) {
                const double prev_above = g.rows[i - 1](j - 1);
                const double prev_left =
                    j >= 2 ? g.rows[i - 1](j - 2)
                           : std::numeric_limits<double>::infinity();
                lo.push_back(std::max(prev_above, chain_lower(i, j)));
                hi.push_back(std::min(prev_left, chain_upper(j)));
            }
            const int free = static_cast<int>(lo.size());
            if (free == 0) {
                ok = std::abs(free_sum) <= 1e-9 * std::max(1.0, lambda);
                continue;
            }
            double lo_sum = 0.0, hi_sum = 0.0;
            for (int t = 0; t < free; ++t) {
                lo_sum += lo[t];
                hi_sum += hi[t];
            }
            ok = false;
            if (free_sum < lo_sum || free_sum > hi_sum) continue;
            for (int tries = 0; tries < kRowCap; ++tries) {
                double used = 0.0;
                bool fits = true;
                for (int t = 0; t + 1 < free; ++t) {
                    if (hi[t] - lo[t] < 2 * margin) {
                        fits = false;
                        break;
                    }
                    const double v =
                        rng.uniform(lo[t] + margin, hi[t] - margin);
                    row(first - 1 + t) = v;
                    used += v;
                }
                if (!fits) continue;
                const double rest = free_sum - used;
                const int t = free - 1;
                if (rest < lo[t] + margin || rest > hi[t] - margin) continue;
                row(first - 1 + t) = rest;
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        // forced top rows
        for (int j = 1; j <= m; ++j) g.rows[n - 2](j - 1) = lambda;
        g.rows[n - 2](m) = lambda - r_n;
        for (int j = 0; j <= m; ++j) g.rows[n - 1](j) = lambda;

        try {
            spectral::validate_pattern(g);
        } catch (const DomainError&) {
            continue;
        }
        return g;
    }
    throw EmptyInterior(
        "random_interior_pattern: rejection cap reached; side lengths too "
        "close to a wall or to the cone boundary");
}

Polygon sample_polygon(const SideLengths& s, std::uint64_t seed) {
    const GtsPattern g = random_interior_pattern(s, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    PhaseMap phases;
    for (int k = 2; k <= s.n(); ++k)
        for (int j = 1; j <= s.m + 1; ++j) phases[{k, j}] = rng.angle();
    Polygon p = reconstruct(g, phases);
    const ComplexMatrix u = rng.haar_unitary(s.m + 1);
    for (Edge& e : p.edges) e = Edge(e.r, u * e.w);
    return p;
}

}  // namespace bendix::reconstruction

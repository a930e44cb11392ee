#include "bendix/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "bendix/bending.hpp"
#include "bendix/combinatorics.hpp"
#include "bendix/duality.hpp"
#include "bendix/polygon.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/rng.hpp"
#include "bendix/spectral.hpp"

namespace bendix::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct GridCase {
    int m;
    int n;
    std::vector<double> r;
};

const std::vector<GridCase>& flow_grid() {
    static const std::vector<GridCase> grid = {
        {1, 5, {1.0, 1.1, 0.9, 1.2, 1.05}},
        {1, 6, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95}},
        {2, 6, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95}},
        {2, 7, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95, 1.15}},
        {3, 8, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95, 1.15, 0.85}},
    };
    return grid;
}

SideLengths sides_of(const GridCase& option) {
    return SideLengths(option.m, option.r);
}

double pattern_distance(const GtsPattern& a, const GtsPattern& b) {
    double worst = 0.0;
    for (int i = 0; i < a.n; ++i)
        worst = std::max(worst, (a.rows[i] - b.rows[i]).cwiseAbs().maxCoeff());
    return worst;
}

struct Check {
    bool ok = true;
    std::ostringstream details;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            details << (details.str().empty() ? "" : "; ") << what;
        }
    }
};

void parallel_for(int count, const std::function<void(int)>& body) {
    const int workers = std::min(thread_cap(), std::max(1, count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1))
                body(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

// --- criterion 1: flow exactness -----------------------------------------

CriterionResult criterion_flow_exactness() {
    const auto start = Clock::now();
    Check check;
    double worst_defect = 0.0, worst_pattern = 0.0, worst_period = 0.0;
    const double times[3] = {0.3, 1.7, M_PI};
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        for (std::uint64_t seed = 11; seed <= 14; ++seed) {
            const Polygon p = reconstruction::sample_polygon(s, seed);
            const double defect0 = polygon::closure_defect(p);
            const GtsPattern pattern0 = spectral::action_values(p);
            for (const auto& [i, j] :
                 spectral::action_index_set(option.n, option.m)) {
                for (double t : times) {
                    const Polygon q = bending::bend(p, {i, j, t});
                    worst_defect = std::max(
                        worst_defect,
                        std::abs(polygon::closure_defect(q) - defect0));
                    worst_pattern = std::max(
                        worst_pattern,
                        pattern_distance(spectral::action_values(q), pattern0));
                }
                const Polygon full = bending::bend(p, {i, j, 2.0 * M_PI});
                for (int k = 0; k < option.n; ++k)
                    worst_period = std::max(
                        worst_period,
                        (full.edges[k].matrix() - p.edges[k].matrix()).norm());
            }
        }
    }
    check.require(worst_defect <= 1e-10, "closure defect drift above 1e-10");
    check.require(worst_pattern <= 1e-9, "pattern drift above 1e-9");
    check.require(worst_period <= 1e-9, "2pi period error above 1e-9");
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    check.require(seconds < 10.0, "runtime above 10 s");
    std::ostringstream details;
    details << "defect drift " << worst_defect << ", pattern drift "
            << worst_pattern << ", period error " << worst_period << ", "
            << seconds << " s";
    if (!check.ok) details << "; " << check.details.str();
    return {1, "flow exactness", check.ok, details.str(), seconds};
}

// --- criterion 2: involutivity -------------------------------------------

CriterionResult criterion_involutivity() {
    const auto start = Clock::now();
    Check check;
    const double h = 1e-5;
    double worst = 0.0;
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        const auto index_set = spectral::action_index_set(option.n, option.m);
        for (std::uint64_t seed = 21; seed <= 25; ++seed) {
            const Polygon p = reconstruction::sample_polygon(s, seed);
            const auto edges = p.edge_matrices();
            std::vector<bending::EdgeGradients> grads;
            grads.reserve(index_set.size());
            for (const auto& [i, j] : index_set)
                grads.push_back(bending::observable_gradients(
                    bending::lambda_observable(i, j), edges, h));
            for (std::size_t a = 0; a < grads.size(); ++a)
                for (std::size_t b = a + 1; b < grads.size(); ++b)
                    worst = std::max(
                        worst, std::abs(bending::bracket_from_gradients(
                                   edges, grads[a], grads[b])));
        }
    }
    check.require(worst <= 5e-5, "a lambda-lambda bracket exceeds 5e-5");
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "max |{lambda,lambda}| = " << worst;
    if (!check.ok) details << "; " << check.details.str();
    return {2, "involutivity", check.ok, details.str(), seconds};
}

// --- criterion 3: action-angle structure ----------------------------------

CriterionResult criterion_action_angle() {
    const auto start = Clock::now();
    Check check;
    const double h = 1e-5;
    double worst_conjugate = 0.0, worst_theta_theta = 0.0, worst_shift = 0.0;
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        const auto index_set = spectral::action_index_set(option.n, option.m);
        for (std::uint64_t seed = 21; seed <= 25; ++seed) {
            const Polygon p = reconstruction::sample_polygon(s, seed);
            const auto edges = p.edge_matrices();
            std::vector<bending::EdgeGradients> mu_grads, theta_grads;
            for (const auto& [i, j] : index_set) {
                mu_grads.push_back(bending::observable_gradients(
                    bending::mu_observable(i, j), edges, h));
                theta_grads.push_back(bending::observable_gradients(
                    bending::theta_observable(i, j), edges, h));
            }
            for (std::size_t a = 0; a < index_set.size(); ++a) {
                for (std::size_t b = 0; b < index_set.size(); ++b) {
                    const double expected = a == b ? 1.0 : 0.0;
                    worst_conjugate =
                        std::max(worst_conjugate,
                                 std::abs(bending::bracket_from_gradients(
                                              edges, mu_grads[a], theta_grads[b]) -
                                          expected));
                    if (b > a)
                        worst_theta_theta =
                            std::max(worst_theta_theta,
                                     std::abs(bending::bracket_from_gradients(
                                         edges, theta_grads[a], theta_grads[b])));
                }
            }
        }
        // angle shifts under every unforced flow, on the same seeds
        for (std::uint64_t seed = 21; seed <= 25; ++seed) {
            const Polygon p = reconstruction::sample_polygon(s, seed);
            const bending::AngleSet base = bending::angle_values(p);
            const double t = 0.7;
            for (int i = 1; i <= option.n - 3; ++i) {
                const auto [first, last] = unforced_range(option.n, option.m, i);
                for (int l = first; l <= last; ++l) {
                    const Polygon q = bending::bend(p, {i, l, t});
                    const bending::AngleSet moved = bending::angle_values(q);
                    for (const auto& [key, theta0] : base.theta) {
                        double shift = 0.0;
                        if (key.first == i && l == key.second) shift = t;
                        if (key.first == i && l == key.second + 1) shift = -t;
                        const double err = std::abs(bending::angle_difference(
                            moved.theta.at(key), theta0 + shift));
                        worst_shift = std::max(worst_shift, err);
                    }
                }
            }
        }
    }
    check.require(worst_conjugate <= 5e-4,
                  "a {mu,theta} bracket is off delta by more than 5e-4");
    check.require(worst_theta_theta <= 5e-4,
                  "a {theta,theta} bracket exceeds 5e-4");
    check.require(worst_shift <= 1e-8, "an angle shift is off by more than 1e-8");
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "max |{mu,theta}-delta| = " << worst_conjugate
            << ", max |{theta,theta}| = " << worst_theta_theta
            << ", max shift error = " << worst_shift;
    if (!check.ok) details << "; " << check.details.str();
    return {3, "action-angle structure", check.ok, details.str(), seconds};
}

// --- criterion 4: reconstruction round trip -------------------------------

CriterionResult criterion_reconstruction() {
    const auto start = Clock::now();
    Check check;
    double worst_round = 0.0, worst_imag = 0.0;
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        for (std::uint64_t seed = 41; seed <= 50; ++seed) {
            const GtsPattern pattern =
                reconstruction::random_interior_pattern(s, seed);
            Rng rng(seed ^ 0x5bd1e995u);
            reconstruction::PhaseMap phases;
            for (int k = 2; k <= option.n; ++k)
                for (int j = 1; j <= option.m + 1; ++j)
                    phases[{k, j}] = rng.angle();
            const Polygon p = reconstruction::reconstruct(pattern, phases);
            worst_round = std::max(
                worst_round,
                pattern_distance(spectral::action_values(p), pattern));

            const Polygon real_p = reconstruction::reconstruct(pattern);
            for (const Edge& e : real_p.edges)
                worst_imag = std::max(
                    worst_imag, e.matrix().imag().cwiseAbs().maxCoeff());
        }
    }
    check.require(worst_round <= 1e-8, "round-trip drift above 1e-8");
    check.require(worst_imag <= 1e-10,
                  "zero-phase reconstruction is not real symmetric");
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "round-trip drift " << worst_round << ", max imaginary part "
            << worst_imag;
    if (!check.ok) details << "; " << check.details.str();
    return {4, "reconstruction round trip", check.ok, details.str(), seconds};
}

// --- criterion 5: multiplicity four-way equality ---------------------------

CriterionResult criterion_multiplicity() {
    const auto start = Clock::now();
    Check check;

    std::vector<SideLengths> cases;
    for (int m : {1, 2}) {
        for (int n = 3; n <= 6; ++n) {
            std::vector<long long> r(n, 1);
            while (true) {
                long long rho = 0;
                for (long long v : r) rho += v;
                if (rho % (m + 1) == 0) {
                    std::vector<Rational> exact;
                    exact.reserve(n);
                    for (long long v : r) exact.emplace_back(v);
                    cases.emplace_back(m, std::move(exact));
                }
                int pos = n - 1;
                while (pos >= 0 && r[pos] == 4) r[pos--] = 1;
                if (pos < 0) break;
                ++r[pos];
            }
        }
    }

    std::atomic<int> failures{0};
    std::atomic<int> done{0};
    std::string first_failure;
    std::mutex failure_mutex;
    parallel_for(static_cast<int>(cases.size()), [&](int idx) {
        const auto rep = combinatorics::multiplicity_report(cases[idx]);
        done.fetch_add(1);
        if (!rep.consistent()) {
            failures.fetch_add(1);
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (first_failure.empty()) {
                std::ostringstream msg;
                msg << "m=" << rep.m << " r=(";
                for (std::size_t i = 0; i < rep.r.size(); ++i)
                    msg << (i ? "," : "") << rep.r[i];
                msg << "): " << rep.lattice_count.str() << "/"
                    << rep.kostka.str() << "/" << rep.pieri_multiplicity.str()
                    << "/" << rep.gt_weight_multiplicity.str();
                first_failure = msg.str();
            }
        }
    });

    std::vector<Rational> anchor{1, 1, 1, 1};
    const auto anchor_rep =
        combinatorics::multiplicity_report(SideLengths(1, anchor));
    check.require(anchor_rep.lattice_count == 2 && anchor_rep.consistent(),
                  "anchor case m=1 r=(1,1,1,1) != 2");
    check.require(failures.load() == 0,
                  "four-way mismatch: " + first_failure);
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    check.require(seconds < 60.0, "runtime above 60 s");
    std::ostringstream details;
    details << done.load() << " integral cases, all four counts equal, "
            << seconds << " s";
    if (!check.ok) details << "; " << check.details.str();
    return {5, "multiplicity four-way equality", check.ok, details.str(),
            seconds};
}

// --- criterion 6: dimension formulas ---------------------------------------

CriterionResult criterion_dimensions() {
    const auto start = Clock::now();
    Check check;
    check.require(polygon::moduli_dimension(6, 2) == 8,
                  "moduli_dimension(6,2) != 8");

    const std::vector<GridCase> grid = {
        {1, 4, {1.0, 1.1, 0.9, 1.05}},
        {1, 5, {1.0, 1.1, 0.9, 1.2, 1.05}},
        {2, 6, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95}},
        {2, 5, {1.0, 1.1, 0.9, 1.2, 1.05}},
    };
    for (const GridCase& option : grid) {
        const SideLengths s = sides_of(option);
        const auto index_set = spectral::action_index_set(option.n, option.m);
        const int dim = spectral::polytope_dimension(option.n, option.m);
        std::ostringstream tag;
        tag << "(m,n)=(" << option.m << "," << option.n << ")";
        check.require(static_cast<int>(index_set.size()) == dim,
                      tag.str() + ": index set size != dim P");
        const int samples = dim + 12;
        Eigen::MatrixXd coords(samples, dim);
        for (int t = 0; t < samples; ++t) {
            const GtsPattern g =
                reconstruction::random_interior_pattern(s, 61 + t);
            for (int c = 0; c < dim; ++c)
                coords(t, c) = g.rows[index_set[c].first](index_set[c].second - 1);
        }
        Eigen::MatrixXd centered =
            coords.bottomRows(samples - 1).rowwise() - coords.row(0);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-8 * svd.singularValues()(0)) ++rank;
        check.require(rank == dim,
                      tag.str() + ": sampled free coordinates not full rank");
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "dim formulas and affine ranks verified on 4 grids";
    if (!check.ok) details << "; " << check.details.str();
    return {6, "dimension formulas", check.ok, details.str(), seconds};
}

// --- criterion 7: duality ---------------------------------------------------

CriterionResult criterion_duality() {
    const auto start = Clock::now();
    Check check;
    double worst = 0.0;
    const std::vector<GridCase> grid = {
        {1, 5, {1.0, 1.1, 0.9, 1.2, 1.05}},
        {2, 6, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95}},
        {2, 7, {1.0, 1.1, 0.9, 1.2, 1.05, 0.95, 1.15}},
    };
    int polygons = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const SideLengths s = sides_of(grid[g]);
        const int count = g == 2 ? 6 : 7;  // 20 total
        for (int t = 0; t < count; ++t, ++polygons) {
            const Polygon p = reconstruction::sample_polygon(s, 71 + t);
            const auto blocks =
                duality::gt_block_values(duality::polygon_to_matrix(p));
            const GtsPattern pattern = spectral::action_values(p);
            for (int k = 1; k <= grid[g].n; ++k) {
                const int width = std::max(k, grid[g].m + 1);
                RealVector gamma = RealVector::Zero(width);
                gamma.head(k) = blocks[k - 1];
                RealVector lambda = RealVector::Zero(width);
                lambda.head(grid[g].m + 1) = pattern.rows[k - 1];
                worst = std::max(worst, (gamma - lambda).cwiseAbs().maxCoeff());
            }
        }
    }
    check.require(worst <= 1e-9, "block eigenvalues drift from bending actions");
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << polygons << " polygons, max |gamma - lambda| = " << worst;
    if (!check.ok) details << "; " << check.details.str();
    return {7, "Gel'fand-MacPherson duality", check.ok, details.str(), seconds};
}

// --- criterion 8: Hitchin non-coincidence -----------------------------------

CriterionResult criterion_hitchin() {
    const auto start = Clock::now();
    Check check;
    const SideLengths s(1, std::vector<double>{1.0, 1.1, 0.9, 1.2, 1.05});
    duality::EuclideanPolygon ep = duality::sample_generic_pentagon(s, 81);
    // close to machine precision
    const Eigen::Vector3d leak = ep.closure() / ep.n();
    for (auto& edge : ep.e) edge -= leak;

    const duality::HitchinSpec distinct{{0, 1, 2, 3, 4}};
    const auto rep1 = duality::hitchin_invariance_report(ep, distinct);
    check.require(std::abs(rep1.dh_dt[0][4]) >= 1e-3,
                  "dH_5/dt vanished for distinct alphas");

    const duality::HitchinSpec doubled{{0, 0, 2, 3, 4}};
    const auto rep2 = duality::hitchin_invariance_report(ep, doubled);
    check.require(std::abs(rep2.dh_dt[0][4]) <= 1e-12,
                  "dH_5/dt did not vanish for alpha_1 = alpha_2");

    const duality::HitchinSpec equal{{1, 1, 1, 1, 1}};
    double worst_norm = 0.0;
    for (double z = -1.0; z <= 3.01; z += 0.5)
        worst_norm = std::max(
            worst_norm, duality::hitchin_matrix(ep, equal, z).norm());
    check.require(worst_norm <= 1e-12, "A(z) != 0 for all-equal alphas");

    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "|dH_5/dt| = " << std::abs(rep1.dh_dt[0][4])
            << " (distinct), " << std::abs(rep2.dh_dt[0][4])
            << " (doubled), max ||A(z)|| = " << worst_norm << " (equal)";
    if (!check.ok) details << "; " << check.details.str();
    return {8, "Hitchin non-coincidence", check.ok, details.str(), seconds};
}

// --- criterion 9: necessity and sufficiency ---------------------------------

CriterionResult criterion_nonemptiness() {
    const auto start = Clock::now();
    Check check;
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        for (std::uint64_t seed = 91; seed <= 94; ++seed) {
            const Polygon p = reconstruction::sample_polygon(s, seed);
            check.require(polygon::is_closed(p), "sampled polygon not closed");
            check.require(
                polygon::check_triangle_inequalities(p.side_lengths()).satisfied,
                "closed polygon violates the triangle inequalities");
        }
    }
    // random strictly admissible side lengths must all be realizable
    int built = 0;
    for (int t = 0; t < 20; ++t) {
        const GridCase& option = flow_grid()[t % flow_grid().size()];
        Rng rng(9000 + t);
        SideLengths s = sides_of(option);
        for (int redraw = 0; redraw < 100; ++redraw) {
            std::vector<double> r(option.n);
            for (double& v : r) v = rng.uniform(0.6, 1.4);
            SideLengths candidate(option.m, r);
            if (polygon::strictly_admissible(candidate)) {
                s = std::move(candidate);
                break;
            }
        }
        try {
            const Polygon p = reconstruction::sample_polygon(s, 9100 + t);
            check.require(polygon::is_closed(p), "sample not closed");
            ++built;
        } catch (const Error& err) {
            check.require(false,
                          std::string("admissible r failed to sample: ") +
                              err.what());
        }
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << "20 seeded polygons closed + triangle inequalities, " << built
            << "/20 random admissible r realized";
    if (!check.ok) details << "; " << check.details.str();
    return {9, "necessity and sufficiency", check.ok, details.str(), seconds};
}

// --- criterion 10: semistability --------------------------------------------

CriterionResult criterion_semistability() {
    const auto start = Clock::now();
    Check check;
    int configs = 0;
    for (const GridCase& option : flow_grid()) {
        const SideLengths s = sides_of(option);
        for (int t = 0; t < 10; ++t, ++configs) {
            Rng rng(101 + 977 * configs);
            std::vector<ComplexVector> points;
            for (int redraw = 0; redraw < 50; ++redraw) {
                points.clear();
                for (int i = 0; i < option.n; ++i)
                    points.push_back(rng.unit_vector(option.m + 1));
                if (polygon::is_general_position(points, option.m)) break;
            }
            check.require(polygon::is_general_position(points, option.m),
                          "could not draw a general-position configuration");
            check.require(polygon::check_semistable(points, s).semistable,
                          "general-position configuration not semistable");
        }
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream details;
    details << configs << " general-position configurations all semistable";
    if (!check.ok) details << "; " << check.details.str();
    return {10, "semistability consistency", check.ok, details.str(), seconds};
}

}  // namespace

int thread_cap() {
    const int hardware =
        static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("BENDIX_THREADS")) {
        const int requested = std::atoi(env);
        if (requested >= 1) return std::min(requested, hardware);
    }
    return hardware;
}

CriterionResult run_criterion(int index) {
    switch (index) {
        case 1: return criterion_flow_exactness();
        case 2: return criterion_involutivity();
        case 3: return criterion_action_angle();
        case 4: return criterion_reconstruction();
        case 5: return criterion_multiplicity();
        case 6: return criterion_dimensions();
        case 7: return criterion_duality();
        case 8: return criterion_hitchin();
        case 9: return criterion_nonemptiness();
        case 10: return criterion_semistability();
        default:
            throw IndexOutOfRange("criterion index must be 1..10");
    }
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    results.reserve(10);
    for (int i = 1; i <= 10; ++i) results.push_back(run_criterion(i));
    return results;
}

}  // namespace bendix::acceptance

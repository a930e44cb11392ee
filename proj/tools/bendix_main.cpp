// bendix: polygon spaces of rank-one Hermitian sums on the command line.
// Subcommands cover existence tests, sampling, bending flows, action and
// angle coordinates, finite-difference brackets, exact multiplicity counts
// and the Hitchin comparison experiments. All artifacts are JSON (CSV for
// time series); errors are machine-readable JSON objects on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>

#include "bendix/acceptance.hpp"
#include "bendix/bending.hpp"
#include "bendix/combinatorics.hpp"
#include "bendix/duality.hpp"
#include "bendix/io.hpp"
#include "bendix/polygon.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/rng.hpp"
#include "bendix/spectral.hpp"

namespace {

using bendix::Polygon;
using bendix::SideLengths;
using nlohmann::json;

struct CommonFlags {
    int m = 1;
    std::string r_csv;
    std::uint64_t seed = 0;
    std::string out;
};

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content << "\n";
    } else {
        bendix::io::write_file(out_path, content);
    }
}

Polygon load_polygon(const std::string& path) {
    return bendix::io::polygon_from_json(bendix::io::read_file(path));
}

int cmd_check(const CommonFlags& flags) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    const auto verdict = bendix::polygon::check_triangle_inequalities(s);
    json j;
    j["m"] = s.m;
    j["satisfied"] = verdict.satisfied;
    j["violated"] = verdict.violated;
    j["lambda"] = s.lambda();
    j["strictly_admissible"] = bendix::polygon::strictly_admissible(s);
    j["on_wall"] = bendix::polygon::is_on_wall(s);
    emit(flags.out, j.dump());
    return verdict.satisfied ? 0 : 1;
}

int cmd_walls(const CommonFlags& flags, double tol) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    if (tol < 0) tol = 1e-12 * s.rho();
    const auto walls = bendix::polygon::enumerate_walls(s, tol);
    emit(flags.out, bendix::io::to_json(walls));
    return 0;
}

int cmd_semistable(const CommonFlags& flags, const std::string& points_path) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    std::vector<bendix::ComplexVector> points;
    if (!points_path.empty()) {
        points = bendix::io::points_from_json(bendix::io::read_file(points_path));
    } else {
        bendix::Rng rng(flags.seed);
        for (int i = 0; i < s.n(); ++i)
            points.push_back(rng.unit_vector(s.m + 1));
    }
    const auto verdict = bendix::polygon::check_semistable(points, s);
    json j;
    j["semistable"] = verdict.semistable;
    j["general_position"] = bendix::polygon::is_general_position(points, s.m);
    j["witness"] = {{"subset", verdict.subset},
                    {"mass", verdict.mass},
                    {"bound", verdict.bound}};
    emit(flags.out, j.dump());
    return verdict.semistable ? 0 : 1;
}

int cmd_sample(const CommonFlags& flags) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    const Polygon p = bendix::reconstruction::sample_polygon(s, flags.seed);
    emit(flags.out, bendix::io::to_json(p));
    return 0;
}

int cmd_pattern(const CommonFlags& flags) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    const auto g = bendix::reconstruction::random_interior_pattern(s, flags.seed);
    emit(flags.out, bendix::io::to_json(g));
    return 0;
}

int cmd_reconstruct(const std::string& pattern_path,
                    const std::string& phases_path, const std::string& out) {
    const auto pattern =
        bendix::io::pattern_from_json(bendix::io::read_file(pattern_path));
    bendix::reconstruction::PhaseMap phases;
    if (!phases_path.empty())
        phases = bendix::io::phases_from_json(bendix::io::read_file(phases_path));
    const Polygon p = bendix::reconstruction::reconstruct(pattern, phases);
    emit(out, bendix::io::to_json(p));
    return 0;
}

int cmd_flow(const std::string& polygon_path, int i, int j, double t,
             const std::string& out, const std::string& csv_path, int steps) {
    const Polygon p = load_polygon(polygon_path);
    if (!csv_path.empty())
        bendix::io::write_file(
            csv_path, bendix::io::trajectory_csv(p, i, j, t, steps));
    const Polygon q = bendix::bending::bend(p, {i, j, t});
    emit(out, bendix::io::to_json(q));
    return 0;
}

int cmd_actions(const std::string& polygon_path, double tol,
                const std::string& out) {
    const Polygon p = load_polygon(polygon_path);
    const auto g = tol > 0 ? bendix::spectral::action_values(p, tol)
                           : bendix::spectral::action_values(p);
    emit(out, bendix::io::to_json(g));
    return 0;
}

int cmd_angles(const std::string& polygon_path, const std::string& out) {
    const Polygon p = load_polygon(polygon_path);
    emit(out, bendix::io::to_json(bendix::bending::angle_values(p)));
    return 0;
}

int cmd_brackets(const std::string& polygon_path, double h,
                 const std::string& out) {
    const Polygon p = load_polygon(polygon_path);
    if (h <= 0) h = bendix::bending::default_fd_step(p);
    const auto index_set = bendix::spectral::action_index_set(p.n(), p.m);
    const auto edges = p.edge_matrices();

    std::vector<bendix::bending::EdgeGradients> lam, mu, theta;
    for (const auto& [i, j] : index_set) {
        lam.push_back(bendix::bending::observable_gradients(
            bendix::bending::lambda_observable(i, j), edges, h));
        mu.push_back(bendix::bending::observable_gradients(
            bendix::bending::mu_observable(i, j), edges, h));
        theta.push_back(bendix::bending::observable_gradients(
            bendix::bending::theta_observable(i, j), edges, h));
    }
    json pairs = json::array();
    double lam_max = 0, conj_max = 0, theta_max = 0;
    for (std::size_t a = 0; a < index_set.size(); ++a) {
        for (std::size_t b = 0; b < index_set.size(); ++b) {
            json entry;
            entry["first"] = {index_set[a].first, index_set[a].second};
            entry["second"] = {index_set[b].first, index_set[b].second};
            const double ll =
                bendix::bending::bracket_from_gradients(edges, lam[a], lam[b]);
            const double mt =
                bendix::bending::bracket_from_gradients(edges, mu[a], theta[b]);
            const double tt = bendix::bending::bracket_from_gradients(
                edges, theta[a], theta[b]);
            entry["lambda_lambda"] = ll;
            entry["mu_theta"] = mt;
            entry["theta_theta"] = tt;
            pairs.push_back(std::move(entry));
            lam_max = std::max(lam_max, std::abs(ll));
            conj_max = std::max(conj_max, std::abs(mt - (a == b ? 1.0 : 0.0)));
            theta_max = std::max(theta_max, std::abs(tt));
        }
    }
    json j;
    j["h"] = h;
    j["pairs"] = std::move(pairs);
    j["max_abs_lambda_lambda"] = lam_max;
    j["max_abs_mu_theta_minus_delta"] = conj_max;
    j["max_abs_theta_theta"] = theta_max;
    emit(out, j.dump());
    return 0;
}

int cmd_count(const CommonFlags& flags, bool all_methods) {
    const SideLengths s = bendix::io::parse_side_lengths(flags.m, flags.r_csv);
    if (all_methods) {
        emit(flags.out,
             bendix::io::to_json(bendix::combinatorics::multiplicity_report(s)));
        return 0;
    }
    const auto result = bendix::combinatorics::count_lattice_points(s);
    json j;
    j["m"] = s.m;
    j["integral_lambda"] = result.integral_lambda;
    j["lattice_count"] = result.count.str();
    emit(flags.out, j.dump());
    return 0;
}

int cmd_duality(const std::string& polygon_path, const std::string& out) {
    const Polygon p = load_polygon(polygon_path);
    const auto blocks =
        bendix::duality::gt_block_values(bendix::duality::polygon_to_matrix(p));
    const auto pattern = bendix::spectral::action_values(p);
    json per_block = json::array();
    double worst = 0.0;
    for (int k = 1; k <= p.n(); ++k) {
        const int width = std::max(k, p.m + 1);
        bendix::RealVector gamma = bendix::RealVector::Zero(width);
        gamma.head(k) = blocks[k - 1];
        bendix::RealVector lambda = bendix::RealVector::Zero(width);
        lambda.head(p.m + 1) = pattern.rows[k - 1];
        const double dev = (gamma - lambda).cwiseAbs().maxCoeff();
        worst = std::max(worst, dev);
        json entry;
        entry["k"] = k;
        entry["gamma"] = std::vector<double>(blocks[k - 1].data(),
                                             blocks[k - 1].data() + k);
        entry["deviation"] = dev;
        per_block.push_back(std::move(entry));
    }
    json j;
    j["blocks"] = std::move(per_block);
    j["max_deviation"] = worst;
    emit(out, j.dump());
    return 0;
}

int cmd_hitchin(int n, const std::string& alphas_csv, std::uint64_t seed,
                const std::string& r_csv, bool csv_out, const std::string& out) {
    std::vector<double> alphas;
    {
        std::stringstream stream(alphas_csv);
        std::string token;
        while (std::getline(stream, token, ','))
            alphas.push_back(std::stod(token));
    }
    if (static_cast<int>(alphas.size()) != n)
        throw bendix::DomainError("hitchin: need exactly n alphas");
    const SideLengths s =
        r_csv.empty() ? SideLengths(1, std::vector<double>(n, 1.0))
                      : bendix::io::parse_side_lengths(1, r_csv);
    bendix::duality::EuclideanPolygon ep;
    if (n == 5) {
        ep = bendix::duality::sample_generic_pentagon(s, seed);
    } else {
        ep = bendix::duality::to_euclidean(
            bendix::reconstruction::sample_polygon(s, seed));
    }
    const bendix::duality::HitchinSpec spec{alphas};
    const auto report = bendix::duality::hitchin_invariance_report(ep, spec);
    if (csv_out) {
        std::ostringstream csv;
        csv << "diagonal";
        for (int j = 1; j <= n; ++j) csv << ",dH_" << j << "_dt";
        csv << "\n";
        for (std::size_t f = 0; f < report.flows.size(); ++f) {
            csv << report.flows[f];
            for (int j = 0; j < n; ++j) {
                csv << ",";
                if (report.defined[j])
                    csv << std::setprecision(17) << report.dh_dt[f][j];
                else
                    csv << "undefined";
            }
            csv << "\n";
        }
        emit(out, csv.str());
    } else {
        emit(out, bendix::io::to_json(report, spec));
    }
    return 0;
}

int cmd_verify_all() {
    const auto results = bendix::acceptance::run_all();
    bool all_ok = true;
    for (const auto& result : results) {
        all_ok &= result.passed;
        std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.index
                  << ". " << result.name << ": " << result.details << "\n";
    }
    std::cout << (all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
              << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
    CLI::App app{"polygon moduli of rank-one Hermitian sums"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string polygon_path, pattern_path, phases_path, points_path;
    std::string alphas_csv, csv_path;
    double tol = -1.0, h = -1.0, t = 0.0;
    int flow_i = 1, flow_j = 1, steps = 32, n = 5;
    bool all_methods = false, csv_out = false;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--m", flags.m, "ambient rank parameter m");
        cmd->add_option("--r", flags.r_csv,
                        "comma-separated side lengths (p/q allowed)")
            ->required();
        if (with_seed) cmd->add_option("--seed", flags.seed, "random seed");
        cmd->add_option("-o,--o", flags.out, "output file (default stdout)");
    };

    CLI::App* check = app.add_subcommand("check", "strong triangle inequalities");
    add_common(check, false);

    CLI::App* walls = app.add_subcommand("walls", "enumerate walls met by r");
    add_common(walls, false);
    walls->add_option("--tol", tol, "wall tolerance (default 1e-12*rho)");

    CLI::App* semistable =
        app.add_subcommand("semistable", "weighted semistability of points");
    add_common(semistable, true);
    semistable->add_option("--points", points_path, "points JSON file");

    CLI::App* sample = app.add_subcommand("sample", "random closed polygon");
    add_common(sample, true);

    CLI::App* pattern =
        app.add_subcommand("pattern", "random interior pattern");
    add_common(pattern, true);

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "polygon from a pattern");
    reconstruct->add_option("--pattern", pattern_path, "pattern JSON file")
        ->required();
    reconstruct->add_option("--phases", phases_path, "torus phases JSON file");
    reconstruct->add_option("-o,--o", flags.out, "output file");

    CLI::App* flow = app.add_subcommand("flow", "apply one bending flow");
    flow->add_option("--polygon", polygon_path, "polygon JSON file")->required();
    flow->add_option("--i", flow_i, "diagonal index")->required();
    flow->add_option("--j", flow_j, "eigenvalue index")->required();
    flow->add_option("--t", t, "flow time in radians")->required();
    flow->add_option("--csv", csv_path, "write a trajectory CSV here");
    flow->add_option("--steps", steps, "trajectory samples (default 32)");
    flow->add_option("-o,--o", flags.out, "output file");

    CLI::App* actions = app.add_subcommand("actions", "Gel'fand-Tsetlin pattern");
    actions->add_option("--polygon", polygon_path, "polygon JSON file")
        ->required();
    actions->add_option("--tol", tol, "closure tolerance factor");
    actions->add_option("-o,--o", flags.out, "output file");

    CLI::App* angles = app.add_subcommand("angles", "angle coordinates");
    angles->add_option("--polygon", polygon_path, "polygon JSON file")
        ->required();
    angles->add_option("-o,--o", flags.out, "output file");

    CLI::App* brackets =
        app.add_subcommand("brackets", "finite-difference Poisson brackets");
    brackets->add_option("--polygon", polygon_path, "polygon JSON file")
        ->required();
    brackets->add_option("--step", h, "finite-difference step");
    brackets->add_option("-o,--o", flags.out, "output file");

    CLI::App* count =
        app.add_subcommand("count", "lattice points / multiplicities");
    add_common(count, false);
    count->add_flag("--all-methods", all_methods,
                    "compute all four multiplicity counts");

    CLI::App* duality = app.add_subcommand("duality", "gamma vs lambda report");
    duality->add_option("--polygon", polygon_path, "polygon JSON file")
        ->required();
    duality->add_option("-o,--o", flags.out, "output file");

    CLI::App* hitchin =
        app.add_subcommand("hitchin", "Hitchin invariance experiments");
    hitchin->add_option("--n", n, "number of edges (default 5)");
    hitchin->add_option("--alphas", alphas_csv, "comma-separated spectral points")
        ->required();
    hitchin->add_option("--seed", flags.seed, "random seed");
    hitchin->add_option("--r", flags.r_csv, "side lengths (default all ones)");
    hitchin->add_flag("--csv", csv_out, "emit CSV instead of JSON");
    hitchin->add_option("-o,--o", flags.out, "output file");

    CLI::App* verify =
        app.add_subcommand("verify-all", "run the acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(flags);
        if (walls->parsed()) return cmd_walls(flags, tol);
        if (semistable->parsed()) return cmd_semistable(flags, points_path);
        if (sample->parsed()) return cmd_sample(flags);
        if (pattern->parsed()) return cmd_pattern(flags);
        if (reconstruct->parsed())
            return cmd_reconstruct(pattern_path, phases_path, flags.out);
        if (flow->parsed())
            return cmd_flow(polygon_path, flow_i, flow_j, t, flags.out,
                            csv_path, steps);
        if (actions->parsed()) return cmd_actions(polygon_path, tol, flags.out);
        if (angles->parsed()) return cmd_angles(polygon_path, flags.out);
        if (brackets->parsed()) return cmd_brackets(polygon_path, h, flags.out);
        if (count->parsed()) return cmd_count(flags, all_methods);
        if (duality->parsed()) return cmd_duality(polygon_path, flags.out);
        if (hitchin->parsed())
            return cmd_hitchin(n, alphas_csv, flags.seed, flags.r_csv, csv_out,
                               flags.out);
        if (verify->parsed()) return cmd_verify_all();
    } catch (const bendix::Error& err) {
        nlohmann::json j;
        j["error"] = err.kind();
        j["message"] = err.what();
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& err) {
        nlohmann::json j;
        j["error"] = "InternalError";
        j["message"] = err.what();
        std::cerr << j.dump() << "\n";
        return 1;
    }
}

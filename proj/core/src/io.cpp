#include "bendix/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "bendix/polygon.hpp"
#include "bendix/spectral.hpp"

namespace bendix::io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json_value(const ComplexMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json_value(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    ComplexMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) a(i, c) = complex_from_json(j[i][c]);
    }
    return a;
}

json vector_to_json_value(const ComplexVector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

ComplexVector vector_from_json_value(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a vector");
    ComplexVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
    return v;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

std::string to_json(const ComplexMatrix& a) { return matrix_to_json_value(a).dump(); }

ComplexMatrix matrix_from_json(const std::string& text) {
    return matrix_from_json_value(parse_text(text));
}

std::string to_json(const Polygon& p) {
    json j;
    j["m"] = p.m;
    json edges = json::array();
    for (const Edge& e : p.edges) {
        json edge;
        edge["r"] = e.r;
        edge["w"] = vector_to_json_value(e.w);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

Polygon polygon_from_json(const std::string& text) {
    const json j = parse_text(text);
    try {
        const int m = j.at("m").get<int>();
        std::vector<Edge> edges;
        for (const json& edge : j.at("edges"))
            edges.emplace_back(edge.at("r").get<double>(),
                               vector_from_json_value(edge.at("w")));
        return Polygon(m, std::move(edges));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("polygon JSON: ") + ex.what());
    }
}

std::string to_json(const SideLengths& s) {
    json j;
    j["m"] = s.m;
    json r = json::array();
    if (s.exact_mode()) {
        for (const Rational& v : *s.exact) r.push_back(format_rational(v));
    } else {
        for (double v : s.r) r.push_back(v);
    }
    j["r"] = std::move(r);
    return j.dump();
}

SideLengths side_lengths_from_json(const std::string& text) {
    const json j = parse_text(text);
    try {
        const int m = j.at("m").get<int>();
        bool exact = false;
        for (const json& v : j.at("r"))
            if (v.is_string()) exact = true;
        if (exact) {
            std::vector<Rational> r;
            for (const json& v : j.at("r")) {
                if (v.is_string())
                    r.push_back(parse_rational(v.get<std::string>()));
                else
                    r.push_back(Rational(v.get<long long>()));
            }
            return SideLengths(m, std::move(r));
        }
        std::vector<double> r;
        for (const json& v : j.at("r")) r.push_back(v.get<double>());
        return SideLengths(m, std::move(r));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("side-length JSON: ") + ex.what());
    }
}

std::string to_json(const GtsPattern& g) {
    json j;
    j["n"] = g.n;
    j["m"] = g.m;
    json rows = json::array();
    for (const RealVector& row : g.rows) {
        json out = json::array();
        for (int i = 0; i < row.size(); ++i) out.push_back(row(i));
        rows.push_back(std::move(out));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

GtsPattern pattern_from_json(const std::string& text) {
    const json j = parse_text(text);
    try {
        GtsPattern g;
        g.n = j.at("n").get<int>();
        g.m = j.at("m").get<int>();
        for (const json& row : j.at("rows")) {
            RealVector v(row.size());
            for (std::size_t i = 0; i < row.size(); ++i)
                v(i) = row[i].get<double>();
            g.rows.push_back(std::move(v));
        }
        if (static_cast<int>(g.rows.size()) != g.n)
            throw ParseError("pattern JSON: row count != n");
        return g;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("pattern JSON: ") + ex.what());
    }
}

std::string to_json(const std::vector<WallId>& walls) {
    json out = json::array();
    for (const WallId& w : walls) {
        json j;
        j["I"] = w.I;
        j["J"] = w.J;
        j["k"] = w.k;
        j["rho_I"] = w.rho_I;
        j["rho_J"] = w.rho_J;
        j["lambda_I"] = w.lambda_I;
        j["lambda_J"] = w.lambda_J;
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string to_json(const bending::AngleSet& a) {
    json thetas = json::array(), betas = json::array(), alphas = json::array();
    for (const auto& [key, value] : a.theta)
        thetas.push_back({{"i", key.first}, {"j", key.second}, {"theta", value}});
    for (const auto& [key, value] : a.beta)
        betas.push_back(
            {{"i", key.first}, {"j", key.second}, {"beta", complex_to_json(value)}});
    for (const auto& [key, value] : a.alpha_sq)
        alphas.push_back(
            {{"i", key.first}, {"j", key.second}, {"alpha_sq", value}});
    json j;
    j["theta"] = std::move(thetas);
    j["beta"] = std::move(betas);
    j["alpha_sq"] = std::move(alphas);
    return j.dump();
}

std::string to_json(const combinatorics::MultiplicityReport& rep) {
    json j;
    j["m"] = rep.m;
    j["r"] = rep.r;
    j["integral_lambda"] = rep.integral_lambda;
    j["lattice_count"] = rep.lattice_count.str();
    j["kostka"] = rep.kostka.str();
    j["pieri_multiplicity"] = rep.pieri_multiplicity.str();
    j["gt_weight_multiplicity"] = rep.gt_weight_multiplicity.str();
    j["consistent"] = rep.consistent();
    return j.dump();
}

std::string to_json(const duality::InvarianceReport& rep,
                    const duality::HitchinSpec& spec) {
    json j;
    j["alphas"] = spec.alphas;
    json flows = json::array();
    for (std::size_t f = 0; f < rep.flows.size(); ++f) {
        json flow;
        flow["diagonal"] = rep.flows[f];
        json dh = json::array();
        for (std::size_t k = 0; k < rep.dh_dt[f].size(); ++k) {
            if (rep.defined[k])
                dh.push_back(rep.dh_dt[f][k]);
            else
                dh.push_back(nullptr);
        }
        flow["dH_dt"] = std::move(dh);
        flows.push_back(std::move(flow));
    }
    j["flows"] = std::move(flows);
    return j.dump();
}

std::string phases_to_json(const reconstruction::PhaseMap& phases) {
    json entries = json::array();
    for (const auto& [key, value] : phases)
        entries.push_back({key.first, key.second, value});
    json j;
    j["entries"] = std::move(entries);
    return j.dump();
}

reconstruction::PhaseMap phases_from_json(const std::string& text) {
    const json j = parse_text(text);
    reconstruction::PhaseMap out;
    try {
        for (const json& entry : j.at("entries")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("phase entries must be [k, j, theta]");
            out[{entry[0].get<int>(), entry[1].get<int>()}] =
                entry[2].get<double>();
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("phases JSON: ") + ex.what());
    }
    return out;
}

std::string points_to_json(const std::vector<ComplexVector>& points) {
    json out = json::array();
    for (const ComplexVector& p : points) out.push_back(vector_to_json_value(p));
    return out.dump();
}

std::vector<ComplexVector> points_from_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_array()) throw ParseError("points JSON: expected an array");
    std::vector<ComplexVector> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(vector_from_json_value(v));
    return out;
}

SideLengths parse_side_lengths(int m, const std::string& csv) {
    std::vector<std::string> tokens;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) tokens.push_back(token);
    if (tokens.size() < 3)
        throw ParseError("need at least 3 comma-separated side lengths");
    // integers and p/q fractions stay exact; any decimal makes it float
    const bool exact = std::all_of(
        tokens.begin(), tokens.end(), [](const std::string& t) {
            return t.find_first_of(".eE") == std::string::npos;
        });
    if (exact) {
        std::vector<Rational> r;
        for (const std::string& t : tokens) r.push_back(parse_rational(t));
        return SideLengths(m, std::move(r));
    }
    std::vector<double> r;
    for (const std::string& t : tokens) {
        try {
            if (t.find('/') != std::string::npos)
                r.push_back(to_double(parse_rational(t)));
            else
                r.push_back(std::stod(t));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("cannot parse side length '" + t + "'");
        }
    }
    return SideLengths(m, std::move(r));
}

std::string trajectory_csv(const Polygon& start, int flow_i, int flow_j,
                           double t_final, int steps) {
    if (steps < 1) throw DomainError("trajectory_csv: steps must be >= 1");
    const auto index_set = spectral::action_index_set(start.n(), start.m);
    std::ostringstream out;
    out << "t,closure_defect";
    for (const auto& [i, j] : index_set) out << ",lambda_" << i << "_" << j;
    for (const auto& [i, j] : index_set) out << ",theta_" << i << "_" << j;
    out << "\n";
    for (int s = 0; s <= steps; ++s) {
        const double t = t_final * s / steps;
        const Polygon p =
            t == 0.0 ? start : bending::bend(start, {flow_i, flow_j, t});
        const GtsPattern g = spectral::action_values(p);
        const bending::AngleSet angles = bending::angle_values(p);
        out << format_double(t) << "," << format_double(polygon::closure_defect(p));
        for (const auto& [i, j] : index_set)
            out << "," << format_double(g.rows[i](j - 1));
        for (const auto& [i, j] : index_set)
            out << "," << format_double(angles.theta.at({i, j}));
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << content;
}

}  // namespace bendix::io

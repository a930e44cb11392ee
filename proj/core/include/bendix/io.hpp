#pragma once

#include <string>
#include <vector>

#include "bendix/bending.hpp"
#include "bendix/combinatorics.hpp"
#include "bendix/duality.hpp"
#include "bendix/reconstruction.hpp"
#include "bendix/types.hpp"

namespace bendix::io {

// JSON wire formats (see docs/formats.md). Serialization keeps doubles at
// full round-trip precision, so parse -> serialize -> parse is the
// identity on values. All parsers throw ParseError with a description.

std::string to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);

std::string to_json(const Polygon& p);
Polygon polygon_from_json(const std::string& text);

std::string to_json(const SideLengths& s);
SideLengths side_lengths_from_json(const std::string& text);

std::string to_json(const GtsPattern& g);
GtsPattern pattern_from_json(const std::string& text);

std::string to_json(const std::vector<WallId>& walls);

std::string to_json(const bending::AngleSet& a);

std::string to_json(const combinatorics::MultiplicityReport& rep);

std::string to_json(const duality::InvarianceReport& rep,
                    const duality::HitchinSpec& spec);

std::string phases_to_json(const reconstruction::PhaseMap& phases);
reconstruction::PhaseMap phases_from_json(const std::string& text);

std::string points_to_json(const std::vector<ComplexVector>& points);
std::vector<ComplexVector> points_from_json(const std::string& text);

/// "1,3/2,2" -> side lengths; any "p/q" entry switches on exact mode.
SideLengths parse_side_lengths(int m, const std::string& csv);

/// One flow trajectory sample per line: t, closure defect, the pattern
/// values over the action index set, then the angles. 17 significant
/// digits, fixed column order.
std::string trajectory_csv(const Polygon& start, int flow_i, int flow_j,
                           double t_final, int steps);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bendix::io

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "bendix/types.hpp"

namespace bendix::reconstruction {

/// Torus phases for the inverse construction, keyed by (edge index k in
/// 2..n, survivor slot j in 1..#survivors of that step). Missing entries
/// are zero; with all phases zero the construction stays real symmetric.
using PhaseMap = std::map<std::pair<int, int>, double>;

/// Builds a closed polygon whose pattern is `g`. Throws BoundaryPattern
/// when surviving eigenvalues collide (the residue formula degenerates),
/// NormDefect when the row sums are inconsistent beyond 1e-6.
Polygon reconstruct(const GtsPattern& g, const PhaseMap& phases = {});

/// Uniform-ish sample of the interior of the pattern polytope: rows are
/// drawn bottom-up by rejection inside their interlacing boxes and
/// row-sum slices. Deterministic given the seed. Throws EmptyInterior
/// when r is not strictly admissible or after the rejection cap.
GtsPattern random_interior_pattern(const SideLengths& s, std::uint64_t seed);

/// Random closed polygon: random interior pattern, random torus phases,
/// then conjugation by a Haar unitary. Deterministic given the seed.
Polygon sample_polygon(const SideLengths& s, std::uint64_t seed);

}  // namespace bendix::reconstruction

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bendix/rational.hpp"
#include "bendix/types.hpp"

namespace bendix::combinatorics {

// Everything in this module is exact; no floating point anywhere.

using IntRow = std::vector<long long>;
using IntPattern = std::vector<IntRow>;  // rows bottom-up, width m+1

struct LatticeCount {
    BigInt count = 0;
    bool integral_lambda = true;  // false => count is 0 by convention
    std::optional<std::vector<IntPattern>> patterns;
};

/// Number of integer patterns in the polytope for integer side lengths,
/// enumerated bottom-up in row-lexicographic order. Non-integral Lambda
/// yields count 0 with the flag cleared. `collect` additionally returns
/// the patterns themselves. Throws SizeLimit past `node_cap` states.
LatticeCount count_lattice_points(const SideLengths& s, bool collect = false,
                                  std::uint64_t node_cap = 50'000'000);

/// Kostka number K_{mu,weight}: semistandard fillings of shape mu with
/// content `weight`, counted through horizontal-strip chains.
BigInt kostka(const IntRow& mu, const IntRow& weight);

/// Pieri rule: dominant weights nu with nu interlacing hw and
/// sum(nu) = sum(hw) + k. Multiplicity-free; returned in decreasing
/// lexicographic order.
std::vector<IntRow> pieri_tensor(const IntRow& hw, long long k);

/// Multiplicity of det^Lambda in S^{r_1} (x) ... (x) S^{r_n} by iterating
/// the Pieri rule from the trivial weight.
BigInt multiplicity_det_power(const SideLengths& s);

/// Multiplicity of the weight r in the U(n) representation with highest
/// weight (Lambda^{m+1}, 0^{n-m-1}), counted top-down over triangular
/// Gel'fand-Tsetlin arrays. Independent code path from
/// count_lattice_points.
BigInt gt_weight_multiplicity(const SideLengths& s);

struct MultiplicityReport {
    int m = 0;
    std::vector<long long> r;
    bool integral_lambda = true;
    BigInt lattice_count = 0;
    BigInt kostka = 0;
    BigInt pieri_multiplicity = 0;
    BigInt gt_weight_multiplicity = 0;

    bool consistent() const {
        return lattice_count == kostka && kostka == pieri_multiplicity &&
               pieri_multiplicity == gt_weight_multiplicity;
    }
};

/// All four counts for integer side lengths.
MultiplicityReport multiplicity_report(const SideLengths& s);

}  // namespace bendix::combinatorics

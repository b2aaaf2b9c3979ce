#pragma once

#include <optional>

#include "pcsp/boolean.hpp"
#include "pcsp/lp.hpp"

namespace pcsp {

/// The basic LP relaxation of an instance over template A: one variable
/// x_v in [0,1] per instance variable, plus explicit convex-hull weights
/// per constraint (alpha_y >= 0, sum alpha = 1, scope values equal to the
/// weighted tuple coordinates).
struct BlpRelaxation {
  RationalLP lp;
  int instance_variables = 0;
  /// Set when some used constraint has an empty relation in A; the
  /// relaxation (and the instance) is infeasible by construction.
  bool infeasible_by_construction = false;
};

BlpRelaxation build_blp(const Instance& inst, const BooleanStructure& a);

/// Convenience: solve the relaxation with the designated first variable
/// (the lowest-indexed one) pinned to `fixed_value`.
LPSolution solve_blp_with_fixing(const BlpRelaxation& blp, int fixed_value);

/// The rounding search: solve the BLP with x_1 = 0 (then 1), and round the
/// rational solution w through every candidate threshold q in
/// {0, w_1, ..., w_n}, trying both "> q" and ">= q". Every candidate map
/// is verified with is_homomorphism before being returned; absence of a
/// verified map is a normal nullopt result.
std::optional<std::vector<int>> round_search(const Instance& inst,
                                             const BooleanStructure& a,
                                             const BooleanStructure& b);

} // namespace pcsp

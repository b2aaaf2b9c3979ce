#pragma once

#include <vector>

#include "pcsp/ltf.hpp"

namespace pcsp {

/// The total preorder on coordinates of a linear threshold function:
/// i <= j when j carries at least as much weight as i. Computed either
/// from a truth table or directly from a presentation (exact subset-sum
/// interval tests); both routes evaluate the same definitional predicates.
struct CoordinatePreorder {
  int arity = 0;
  std::vector<Monotonicity> mono;
  // less[(i-1)*arity + (j-1)] == true iff i <= j.
  std::vector<bool> less_matrix;

  bool less(int i, int j) const {
    return less_matrix[(i - 1) * arity + (j - 1)];
  }
  bool equivalent(int i, int j) const { return less(i, j) && less(j, i); }
  bool strictly_less(int i, int j) const { return less(i, j) && !less(j, i); }

  /// Equivalence classes ordered ascending (least weight first); indices
  /// inside each class ascend.
  std::vector<std::vector<int>> classes_ascending() const;

  /// Coordinates ranked descending (heaviest first), ties by ascending
  /// index; used by the top-k choice functions.
  std::vector<int> ranked_descending() const;
};

/// Table route. Every coordinate must be monotone or antimonotone; for
/// pairs, every applicable definitional branch is evaluated and any
/// disagreement (possible only for dual-monotonicity coordinates) raises
/// InvariantError, as does a failure of totality or transitivity.
CoordinatePreorder compute_preorder(const BooleanFunction& f);

/// Presentation route: the same predicates decided by exact subset-sum
/// reachability, so it scales to arities whose tables are out of reach.
/// The presentation must define a total function.
CoordinatePreorder compute_preorder(const LtfPresentation& p);

/// A strict presentation of the same function whose absolute weights
/// mirror the preorder exactly: |a_i| < |a_j| iff i is strictly below j,
/// with equality on equivalence classes. Built by repeated local tweaks
/// (each moves one coordinate onto its class average and preserves the
/// class's absolute-value sum); the result is re-verified against the
/// definitional preorder and against the original truth table.
LtfPresentation canonical_presentation(const LtfPresentation& p);

} // namespace pcsp

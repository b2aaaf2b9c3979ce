#pragma once

#include <vector>

#include "pcsp/rational.hpp"

namespace pcsp {

enum class LinRelation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<Rational> coeffs; // dense, one per variable
  LinRelation relation = LinRelation::Equal;
  Rational bound;
};

/// A feasibility LP over exact rationals. Variables marked nonnegative are
/// handled natively; the rest are free (split internally). There is no
/// objective: the contract is an exact feasible point or a correct
/// infeasibility verdict, nothing more.
struct RationalLP {
  int variable_count = 0;
  std::vector<bool> nonnegative; // empty means all-free
  std::vector<LinearConstraint> constraints;

  void validate() const;
};

struct LPSolution {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Infeasible;
  std::vector<Rational> assignment;

  bool feasible() const { return status == Status::Feasible; }
};

/// Phase-one simplex with Bland's rule, entirely in rational arithmetic.
/// A feasible result is re-checked against every constraint exactly before
/// it is returned (zero tolerance).
LPSolution solve_lp(const RationalLP& lp);

} // namespace pcsp

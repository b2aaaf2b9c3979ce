#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "pcsp/ltf.hpp"
#include "pcsp/preorder.hpp"

namespace pcsp {

/// Greedy grouping map for nonnegative weights a with |1 - sum a_i| <= eps
/// and every a_i <= eps: items are placed in sequence order into the
/// currently least-filled of m bins (ties to the lowest index), which
/// guarantees |1/m - sum of each bin| <= eps. The postcondition is
/// re-verified before returning.
MinorMap grouping(const std::vector<Rational>& weights, int m,
                  const Rational& eps);

/// Target of the constructive approximation: either the equal-weight
/// threshold tuple (1/m,...,1/m | T/S) or the alternating tuple
/// (1/m x m, -1/(m-1) x (m-1) | 0).
struct ThresholdTarget {
  int m = 1;
  Rational sum_limit;  // S: the limit of the coordinate sums (S > 0)
  Rational thr_limit;  // T: the limit of the thresholds (0 <= T <= S)
};
struct AlternatingTarget {
  int m = 2;
};
using ApproxTarget = std::variant<ThresholdTarget, AlternatingTarget>;

struct ConstantReport {};

struct ApproxResult {
  std::optional<LtfPresentation> tuple; // nullopt when constant
  MinorMap map = MinorMap::identity(1); // the merge actually used
  Rational distance;                    // verified l_inf distance
  bool constant = false;
};

/// The two-phase merge behind the structure theorem for tuple minions:
/// negative coordinates folded into positives until the merged coordinate
/// is small, then greedy grouping, then scaling. Reports a constant when
/// the threshold escapes [min(0, sum), max(0, sum)]; otherwise the output
/// is within eps of the target in l_inf distance (verified, InvariantError
/// on failure). Preconditions are the closeness bounds of the theorem's
/// proof and are checked exactly.
ApproxResult approximate_generator(const LtfPresentation& p,
                                   const ApproxTarget& target,
                                   const Rational& eps);

/// The domination-propagation check: requires pi injective on I, covered
/// by I, I dominating, |I| >= 2/eps, and the membership oracle accepting
/// p; returns whether some coordinate of pi(I) dominates the minor.
bool domination_propagates(
    const LtfPresentation& p, const MinorMap& pi, const std::vector<int>& I,
    const Rational& eps,
    const std::function<bool(const LtfPresentation&)>& membership);

} // namespace pcsp

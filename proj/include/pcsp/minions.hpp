#pragma once

#include <optional>

#include "pcsp/boolean.hpp"
#include "pcsp/choice.hpp"
#include "pcsp/ltf.hpp"

namespace pcsp {

/// The weak presentation (1, 2, -2, 4, -4, ..., 2^m, -2^m | 0) of arity
/// 2m+1; m = 0 is the identity.
LtfPresentation st_generator(int m);

/// The weak presentation (1/3, 1/(3m) x 2m | 1/2) of arity 2m+1.
LtfPresentation wp_generator(int m);

enum class StMethod { Recursive, Template, Bruteforce };

struct StMembership {
  bool member = false;
  /// Generator index and witness map; absent for the template method,
  /// which certifies membership without a construction.
  std::optional<int> m;
  std::optional<MinorMap> rho;
};

/// Membership in the ST minion, decided three independent ways:
///   recursive   peel fixing pairs (lexicographically least first) down to
///               the unary identity, then assemble the witness back up;
///   template    idempotency plus the exhaustive polymorphism test against
///               the fixed template pair;
///   bruteforce  search generator minors with the generator index
///               ascending, so the witness is minimal.
/// All three agree on the verdict; witnesses are verified before return.
StMembership st_membership(const BooleanFunction& f, StMethod method);

/// First minor map (lexicographic order of (pi(1),...,pi(n)), last
/// position fastest) whose minor of p is a symmetric function of
/// `target_arity` variables, or nullopt. Throws CapacityError when
/// target_arity^arity exceeds `cap`.
std::optional<MinorMap>
symmetric_minor_search(const LtfPresentation& p, int target_arity,
                       std::uint64_t cap = std::uint64_t{1} << 26);

/// True iff max |a_i| > bound * sum |a_i|.
bool heavy_coordinate_bound(const LtfPresentation& p, const Rational& bound);

/// Output of the multiple-choice refutation: f in WP, a map pi, and the
/// projection g = pi-minor of f with pi(I(f)) disjoint from I(g).
struct MultichoiceRefutation {
  LtfPresentation f;
  MinorMap pi = MinorMap::identity(1);
  LtfPresentation g;
  std::vector<int> choice_of_f;
  std::vector<int> choice_of_g;
  int target = 0; // the coordinate j = pi(I(f))
};

/// Builds the witness that no choice function with |I| <= size_bound can
/// satisfy the multiple-choice condition over WP. Verifies the minor and
/// the disjointness before returning; any failure is a ConstructionError.
MultichoiceRefutation
build_multichoice_refutation(const ChoiceFunction& choice, int size_bound);

/// Builds a chain over ST on which pi_{i,j}(I(f_i)) and I(f_j) are
/// pairwise disjoint, witnessing the failure of the layered condition.
/// Arities are sized conservatively and every disjointness is verified.
MinorChain build_layered_refutation(const ChoiceFunction& choice,
                                    int size_bound);

} // namespace pcsp

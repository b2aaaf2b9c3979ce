#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcsp/boolean.hpp"
#include "pcsp/minor_map.hpp"
#include "pcsp/rational.hpp"

namespace pcsp {

enum class LtfForm { Weak, Strict };

/// A linear-threshold presentation <a|t>. The weak form is the total
/// function "0 iff <a|x> <= t"; the strict form is the partial function
/// "0 if <a|x> < t, 1 if <a|x> > t", undefined where <a|x> = t.
struct LtfPresentation {
  std::vector<Rational> weights;
  Rational threshold = 0;
  LtfForm form = LtfForm::Weak;

  LtfPresentation() = default;
  LtfPresentation(std::vector<Rational> weights, Rational threshold,
                  LtfForm form);

  int arity() const { return static_cast<int>(weights.size()); }
  bool operator==(const LtfPresentation&) const = default;
};

/// Evaluates the presentation on a 0/1 input. Strict presentations return
/// nullopt exactly on inputs whose weighted sum hits the threshold.
std::optional<int> evaluate(const LtfPresentation& p,
                            const std::vector<int>& input);

/// True iff no achievable subset sum of the weights equals the threshold
/// (only strict presentations can be partial).
bool is_total(const LtfPresentation& p);

/// Converts between the weak and strict forms while preserving the total
/// function. To-strict picks the midpoint between t and the smallest
/// achievable sum strictly above it (max achievable + 1 if none); to-weak
/// requires a total strict input.
LtfPresentation convert_form(const LtfPresentation& p, LtfForm target);

/// The tuple-level minor: b_i = sum of a_j over pi(j) = i, threshold and
/// form unchanged.
LtfPresentation presentation_minor(const LtfPresentation& p,
                                   const MinorMap& pi);

/// Multiplies weights and threshold by c > 0; presents the same function.
LtfPresentation scale(const LtfPresentation& p, const Rational& c);

/// All 2^n evaluations, little-endian indexing. The strict form must be
/// total. Capped at arity 22.
BooleanFunction truth_table(const LtfPresentation& p);

/// Truth-table digest computed directly from the presentation without
/// materializing the table (same format as BooleanFunction::digest()).
std::string ltf_digest(const LtfPresentation& p);

enum class Monotonicity { Monotone, Antimonotone, Both };

/// Classifies coordinate i of f by exhaustive comparison over all 2^(n-1)
/// settings of the other coordinates. "Both" iff the coordinate is
/// non-essential. Throws InvariantError if the coordinate is neither.
Monotonicity monotonicity(const BooleanFunction& f, int i);

/// All ordered pairs (i, j) such that f is forced to 0 whenever
/// (x_i, x_j) = (0, 1) and to 1 whenever (x_i, x_j) = (1, 0).
std::vector<std::pair<int, int>> find_fixing_pairs(const BooleanFunction& f);

/// Fixing pairs read off a presentation without building the table:
/// (i, j) is fixing iff no achievable sum s of the other weights has
/// f undecided across the two half-cubes (exact subset-sum test).
std::vector<std::pair<int, int>>
find_fixing_pairs(const LtfPresentation& p);

/// The three per-map properties of section-4 machinery, evaluated for a
/// map pi out of presentation p and a 1-based coordinate set I:
///   injective_on  |pi(I)| = |I|
///   covered_by    every j outside pi(I) has exactly one preimage
///   dominating    min_I |a_i| >= max over the complement of |a_j|
struct MinorMapProperties {
  bool injective_on = false;
  bool covered_by = false;
  bool dominating = false;
};

MinorMapProperties minor_map_properties(const MinorMap& pi,
                                        const LtfPresentation& p,
                                        const std::vector<int>& coords);

/// l_infinity distance between two presentations of equal arity,
/// max(|a_i - b_i|, |t - s|).
Rational linf_distance(const LtfPresentation& a, const LtfPresentation& b);

} // namespace pcsp

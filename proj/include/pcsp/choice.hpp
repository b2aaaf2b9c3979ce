#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcsp/ltf.hpp"
#include "pcsp/preorder.hpp"

namespace pcsp {

/// A deterministic map from a Boolean function to a nonempty coordinate
/// set. Three kinds:
///   dictator    defined on projections only, returns the dictatorship
///               coordinate;
///   top-ranked  the k coordinates largest under the coordinate preorder,
///               ties broken by ascending index (the top-3N choice is
///               top-ranked with k = 3N);
///   table       explicit entries keyed by truth-table digest; querying an
///               unlisted function is an error, never a default.
class ChoiceFunction {
public:
  static ChoiceFunction dictator();
  static ChoiceFunction top_ranked(int count);
  static ChoiceFunction top3n(int n) { return top_ranked(3 * n); }
  static ChoiceFunction
  table(std::map<std::string, std::vector<int>> entries);

  std::vector<int> operator()(const BooleanFunction& f) const;
  /// Presentation route for functions whose tables are out of reach; the
  /// answer is function-level (identical for every presentation).
  std::vector<int> operator()(const LtfPresentation& p) const;

  std::string describe() const;

private:
  enum class Kind { Dictator, TopRanked, Table };
  Kind kind_ = Kind::Dictator;
  int count_ = 1;
  std::map<std::string, std::vector<int>> entries_;

  std::vector<int> from_ranking(const CoordinatePreorder& pre) const;
  std::vector<int> from_table(const std::string& digest, int arity) const;
};

/// The per-operation choice of the hardness proof: min(3N, arity)
/// coordinates maximal under the definitional preorder.
std::vector<int> ltf_choice(const LtfPresentation& p, int n);

/// A chain f_1 -> f_2 -> ... -> f_L of presentations with composable
/// minor maps; construction verifies each f_{i+1} against the pi-minor of
/// f_i (presentation equality first, truth-table comparison as fallback).
struct MinorChain {
  std::vector<LtfPresentation> functions;
  std::vector<MinorMap> maps;

  int length() const { return static_cast<int>(functions.size()); }
  void verify() const;
};

/// pi_{i,j} = pi_{j-1,j} o ... o pi_{i,i+1}; j = i+1 returns the stored map.
MinorMap compose(const MinorChain& chain, int i, int j);

enum class ConditionVariant { Single, Multiple, Layered, InjectiveLayered };

struct ConditionVerdict {
  int chain = 0; // 1-based index into the checked family
  bool satisfied = false;
  // For satisfied layered-style verdicts, a pair i < j whose images meet.
  std::optional<std::pair<int, int>> witness;
  // Injective-layered only: chain failed the injectivity requirement and
  // is vacuously satisfied.
  bool vacuous = false;
};

/// Evaluates one of the four hardness conditions on an explicit family of
/// chains. This is evaluation on given chains, not a decision procedure
/// for a whole minion (which quantifies over infinitely many chains).
/// single/multiple require length-2 chains, single additionally |I(f)|=1.
std::vector<ConditionVerdict>
check_condition(const std::vector<MinorChain>& chains,
                const ChoiceFunction& choice, int size_bound,
                ConditionVariant variant);

/// The weight-propagation inequality: with pi injective on I_f, the
/// pi-minor <b|t> of p satisfies sum_{j in pi(I_f)} |b_j| > eps sum |b_i|.
bool propagate_weight_check(const LtfPresentation& p, const MinorMap& pi,
                            const std::vector<int>& I_f, const Rational& eps);

} // namespace pcsp

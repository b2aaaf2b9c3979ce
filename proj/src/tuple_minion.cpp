#include "pcsp/tuple_minion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pcsp {

MinorMap grouping(const std::vector<Rational>& weights, int m,
                  const Rational& eps) {
  if (weights.empty())
    throw ParameterError("grouping requires a nonempty weight sequence");
  if (m < 1)
    throw ParameterError("grouping requires m >= 1");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0 || w > eps)
      throw ParameterError("grouping requires 0 <= a_i <= eps");
    total += w;
  }
  if (rational_abs(Rational(1) - total) > eps)
    throw ParameterError("grouping requires |1 - sum a_i| <= eps");

  int n = static_cast<int>(weights.size());
  std::vector<int> assignment(n);
  std::vector<Rational> bins(m, Rational(0));
  for (int i = 0; i < n; ++i) {
    int best = 0;
    for (int b = 1; b < m; ++b)
      if (bins[b] < bins[best])
        best = b;
    bins[best] += weights[i];
    assignment[i] = best + 1;
  }
  // The precondition makes failure impossible; verify anyway.
  Rational share(1, m);
  for (int b = 0; b < m; ++b)
    if (rational_abs(share - bins[b]) > eps)
      throw InvariantError("grouping postcondition failed on bin " +
                           std::to_string(b + 1));
  return MinorMap(n, m, std::move(assignment));
}

namespace {

/// A tuple is reported constant when its threshold escapes the achievable
/// sums entirely: at or above the positive mass the weak function is
/// identically 0, strictly below the negative mass it is identically 1.
bool is_constant_tuple(const LtfPresentation& p) {
  Rational positive = 0, negative = 0;
  for (const auto& w : p.weights)
    (w > 0 ? positive : negative) += w;
  return p.threshold >= positive || p.threshold < negative;
}

ApproxResult approximate_threshold(const LtfPresentation& p,
                                   const ThresholdTarget& target,
                                   const Rational& eps) {
  const Rational& S = target.sum_limit;
  const Rational& T = target.thr_limit;
  if (S <= 0)
    throw ParameterError("threshold target requires S > 0");
  if (target.m < 1)
    throw ParameterError("threshold target requires m >= 1");
  Rational sum = std::accumulate(p.weights.begin(), p.weights.end(),
                                 Rational(0));
  ApproxResult result;
  if (is_constant_tuple(p)) {
    result.constant = true;
    result.distance = 0;
    return result;
  }
  Rational bound = S * eps;
  if (rational_abs(p.threshold - T) > bound)
    throw ParameterError("|t - T| <= S*eps violated");
  if (rational_abs(sum - S) > bound)
    throw ParameterError("|sum a_i - S| <= S*eps violated");
  for (const auto& w : p.weights)
    if (rational_abs(w) > bound)
      throw ParameterError("|a_i| <= S*eps violated");

  int n = p.arity();
  // Phase one: merge every negative coordinate into one class, then absorb
  // positives (in index order) until the class sum lands in [0, S*eps].
  std::vector<int> phase1(n, 0);
  Rational merged = 0;
  for (int i = 0; i < n; ++i)
    if (p.weights[i] < 0) {
      phase1[i] = 1;
      merged += p.weights[i];
    }
  for (int i = 0; i < n && merged < 0; ++i)
    if (phase1[i] == 0 && p.weights[i] > 0) {
      phase1[i] = 1;
      merged += p.weights[i];
    }
  if (merged < 0)
    throw ParameterError("negative mass exceeds the positive mass; no "
                         "threshold-target merge exists");
  bool has_merged_class =
      std::any_of(phase1.begin(), phase1.end(), [](int v) { return v == 1; });
  int intermediate = 0;
  for (int i = 0; i < n; ++i)
    if (phase1[i] == 0)
      phase1[i] = has_merged_class ? ++intermediate + 1 : ++intermediate;
  int phase1_arity = intermediate + (has_merged_class ? 1 : 0);
  MinorMap first(n, phase1_arity, phase1);
  LtfPresentation mid = presentation_minor(p, first);

  // Phase two: grouping on the 1/S-scaled weights.
  std::vector<Rational> scaled;
  scaled.reserve(mid.weights.size());
  for (const auto& w : mid.weights)
    scaled.push_back(w / S);
  MinorMap second = grouping(scaled, target.m, eps);

  result.map = first.then(second);
  LtfPresentation minor = presentation_minor(p, result.map);
  result.tuple = scale(minor, Rational(1) / S);

  LtfPresentation goal(std::vector<Rational>(target.m, Rational(1, target.m)),
                       T / S, p.form);
  result.distance = linf_distance(*result.tuple, goal);
  if (result.distance > eps)
    throw InvariantError("approximation distance " +
                         rational_to_string(result.distance) +
                         " exceeds eps");
  return result;
}

ApproxResult approximate_alternating(const LtfPresentation& p,
                                     const AlternatingTarget& target,
                                     const Rational& eps) {
  if (target.m < 2)
    throw ParameterError("alternating target requires m >= 2");
  ApproxResult result;
  if (is_constant_tuple(p)) {
    result.constant = true;
    result.distance = 0;
    return result;
  }
  if (rational_abs(p.threshold) > eps)
    throw ParameterError("|t| <= eps violated");
  Rational pos = 0, neg = 0;
  for (const auto& w : p.weights) {
    if (rational_abs(w) > eps)
      throw ParameterError("|a_i| <= eps violated");
    (w > 0 ? pos : neg) += w;
  }
  if (rational_abs(pos - 1) > eps)
    throw ParameterError("positive mass must be within eps of 1");
  if (rational_abs(neg + 1) > eps)
    throw ParameterError("negative mass must be within eps of -1");

  int n = p.arity();
  int m = target.m;
  std::vector<Rational> positives, negatives;
  std::vector<int> pos_index, neg_index;
  for (int i = 0; i < n; ++i) {
    if (p.weights[i] > 0) {
      positives.push_back(p.weights[i]);
      pos_index.push_back(i);
    } else if (p.weights[i] < 0) {
      negatives.push_back(-p.weights[i]);
      neg_index.push_back(i);
    }
  }
  MinorMap pos_map = grouping(positives, m, eps);
  MinorMap neg_map = grouping(negatives, m - 1, eps);
  std::vector<int> combined(n, 1); // zero weights ride along in bin 1
  for (std::size_t k = 0; k < pos_index.size(); ++k)
    combined[pos_index[k]] = pos_map(static_cast<int>(k) + 1);
  for (std::size_t k = 0; k < neg_index.size(); ++k)
    combined[neg_index[k]] = m + neg_map(static_cast<int>(k) + 1);
  result.map = MinorMap(n, 2 * m - 1, combined);
  result.tuple = presentation_minor(p, result.map);

  std::vector<Rational> goal_weights(m, Rational(1, m));
  goal_weights.insert(goal_weights.end(), m - 1, Rational(-1, m - 1));
  LtfPresentation goal(std::move(goal_weights), Rational(0), p.form);
  result.distance = linf_distance(*result.tuple, goal);
  if (result.distance > eps)
    throw InvariantError("approximation distance " +
                         rational_to_string(result.distance) +
                         " exceeds eps");
  return result;
}

} // namespace

ApproxResult approximate_generator(const LtfPresentation& p,
                                   const ApproxTarget& target,
                                   const Rational& eps) {
  if (eps <= 0)
    throw ParameterError("eps must be positive");
  if (std::holds_alternative<ThresholdTarget>(target))
    return approximate_threshold(p, std::get<ThresholdTarget>(target), eps);
  return approximate_alternating(p, std::get<AlternatingTarget>(target), eps);
}

bool domination_propagates(
    const LtfPresentation& p, const MinorMap& pi, const std::vector<int>& I,
    const Rational& eps,
    const std::function<bool(const LtfPresentation&)>& membership) {
  if (eps <= 0)
    throw ParameterError("eps must be positive");
  MinorMapProperties props = minor_map_properties(pi, p, I);
  if (!props.injective_on)
    throw ParameterError("map is not injective on I");
  if (!props.covered_by)
    throw ParameterError("map is not covered by I");
  if (!props.dominating)
    throw ParameterError("I does not dominate the presentation");
  if (Rational(static_cast<int>(I.size())) < Rational(2) / eps)
    throw ParameterError("|I| >= 2/eps violated");
  if (membership && !membership(p))
    throw ParameterError("presentation rejected by the membership oracle");

  LtfPresentation minor = presentation_minor(p, pi);
  Rational top = max_abs(minor.weights);
  for (int c : pi.image(I))
    if (rational_abs(minor.weights[c - 1]) == top)
      return true;
  return false;
}

} // namespace pcsp

#include "pcsp/choice.hpp"

#include <algorithm>
#include <set>

#include "pcsp/subset_sums.hpp"

namespace pcsp {

ChoiceFunction ChoiceFunction::dictator() {
  ChoiceFunction c;
  c.kind_ = Kind::Dictator;
  return c;
}

ChoiceFunction ChoiceFunction::top_ranked(int count) {
  if (count < 1)
    throw ParameterError("top-ranked choice needs a positive count");
  ChoiceFunction c;
  c.kind_ = Kind::TopRanked;
  c.count_ = count;
  return c;
}

ChoiceFunction
ChoiceFunction::table(std::map<std::string, std::vector<int>> entries) {
  ChoiceFunction c;
  c.kind_ = Kind::Table;
  c.entries_ = std::move(entries);
  return c;
}

std::vector<int> ChoiceFunction::from_ranking(
    const CoordinatePreorder& pre) const {
  std::vector<int> ranked = pre.ranked_descending();
  int take = std::min<int>(count_, pre.arity);
  ranked.resize(take);
  // The selection covers whole equivalence classes except at most one
  // partial class (the ranking lists classes contiguously).
  int partial = 0;
  for (const auto& cls : pre.classes_ascending()) {
    std::size_t inside = 0;
    for (int c : cls)
      if (std::find(ranked.begin(), ranked.end(), c) != ranked.end())
        ++inside;
    if (inside != 0 && inside != cls.size())
      ++partial;
  }
  if (partial > 1)
    throw InvariantError("top-ranked choice split more than one class");
  std::sort(ranked.begin(), ranked.end());
  return ranked;
}

std::vector<int> ChoiceFunction::from_table(const std::string& digest,
                                            int arity) const {
  auto it = entries_.find(digest);
  if (it == entries_.end())
    throw ParameterError("table choice queried on an unlisted function (" +
                         digest.substr(0, 24) + "...)");
  if (it->second.empty())
    throw ParameterError("table choice entry must be nonempty");
  for (int c : it->second)
    if (c < 1 || c > arity)
      throw ParameterError("table choice entry outside [1, arity]");
  return it->second;
}

std::vector<int> ChoiceFunction::operator()(const BooleanFunction& f) const {
  switch (kind_) {
  case Kind::Dictator: {
    int coord = 0;
    if (!f.is_projection(&coord))
      throw ParameterError("dictator choice is defined on projections only");
    return {coord};
  }
  case Kind::TopRanked:
    return from_ranking(compute_preorder(f));
  case Kind::Table:
    return from_table(f.digest(), f.arity);
  }
  throw InvariantError("unreachable choice kind");
}

std::vector<int> ChoiceFunction::operator()(const LtfPresentation& p) const {
  switch (kind_) {
  case Kind::Dictator: {
    // p presents proj_i iff every sum with x_i = 1 clears the threshold
    // and every sum with x_i = 0 stays at or below it.
    for (int i = 1; i <= p.arity(); ++i) {
      SubsetSums others(p.weights, std::vector<int>{i - 1});
      if (others.min() + p.weights[i - 1] > p.threshold &&
          others.max() <= p.threshold)
        return {i};
    }
    throw ParameterError("dictator choice is defined on projections only");
  }
  case Kind::TopRanked:
    return from_ranking(compute_preorder(p));
  case Kind::Table:
    return from_table(ltf_digest(p), p.arity());
  }
  throw InvariantError("unreachable choice kind");
}

std::string ChoiceFunction::describe() const {
  switch (kind_) {
  case Kind::Dictator:
    return "dictator";
  case Kind::TopRanked:
    return "top-" + std::to_string(count_);
  case Kind::Table:
    return "table(" + std::to_string(entries_.size()) + " entries)";
  }
  return "?";
}

std::vector<int> ltf_choice(const LtfPresentation& p, int n) {
  if (n < 1)
    throw ParameterError("choice parameter N must be positive");
  return ChoiceFunction::top3n(n)(p);
}

void MinorChain::verify() const {
  if (functions.empty())
    throw StructuralError("chain must contain at least one function");
  if (maps.size() + 1 != functions.size())
    throw StructuralError("chain needs exactly L-1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].from_arity != functions[i].arity() ||
        maps[i].to_arity != functions[i + 1].arity())
      throw StructuralError("chain map " + std::to_string(i + 1) +
                            " arities do not compose");
    LtfPresentation minor = presentation_minor(functions[i], maps[i]);
    if (minor.weights == functions[i + 1].weights &&
        minor.threshold == functions[i + 1].threshold &&
        minor.form == functions[i + 1].form)
      continue;
    // Distinct presentations may still define the same function; compare
    // the functions themselves.
    if (ltf_digest(minor) != ltf_digest(functions[i + 1]))
      throw StructuralError("chain function " + std::to_string(i + 2) +
                            " is not the minor of its predecessor");
  }
}

MinorMap compose(const MinorChain& chain, int i, int j) {
  if (i < 1 || j <= i || j > chain.length())
    throw ParameterError("compose requires 1 <= i < j <= L");
  MinorMap composed = chain.maps[i - 1];
  for (int k = i + 1; k < j; ++k)
    composed = composed.then(chain.maps[k - 1]);
  return composed;
}

namespace {

bool sets_intersect(const std::vector<int>& sorted_a,
                    const std::vector<int>& sorted_b) {
  auto a = sorted_a.begin();
  auto b = sorted_b.begin();
  while (a != sorted_a.end() && b != sorted_b.end()) {
    if (*a == *b)
      return true;
    (*a < *b) ? ++a : ++b;
  }
  return false;
}

} // namespace

std::vector<ConditionVerdict>
check_condition(const std::vector<MinorChain>& chains,
                const ChoiceFunction& choice, int size_bound,
                ConditionVariant variant) {
  if (size_bound < 1)
    throw ParameterError("the size bound M must be positive");
  std::vector<ConditionVerdict> verdicts;
  verdicts.reserve(chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const MinorChain& chain = chains[c];
    chain.verify();
    int length = chain.length();
    std::vector<std::vector<int>> chosen(length);
    for (int i = 0; i < length; ++i) {
      chosen[i] = choice(chain.functions[i]);
      std::sort(chosen[i].begin(), chosen[i].end());
      int limit =
          variant == ConditionVariant::Single ? 1 : size_bound;
      if (static_cast<int>(chosen[i].size()) > limit ||
          (variant == ConditionVariant::Single && chosen[i].size() != 1))
        throw ParameterError("choice set size violates the bound for the "
                             "requested variant");
    }

    ConditionVerdict verdict;
    verdict.chain = static_cast<int>(c) + 1;

    if (variant == ConditionVariant::Single ||
        variant == ConditionVariant::Multiple) {
      if (length != 2)
        throw StructuralError(
            "single/multiple variants are evaluated on length-2 chains");
      std::vector<int> image = chain.maps[0].image(chosen[0]);
      if (variant == ConditionVariant::Single)
        verdict.satisfied = image == chosen[1];
      else
        verdict.satisfied = sets_intersect(image, chosen[1]);
      if (verdict.satisfied)
        verdict.witness = {1, 2};
      verdicts.push_back(std::move(verdict));
      continue;
    }

    if (variant == ConditionVariant::InjectiveLayered) {
      // Accumulated images: I_i^+ = I(f_i) union of pi_{k,i}(I(f_k)).
      bool injective = true;
      for (int i = 1; i < length && injective; ++i) {
        std::set<int> accumulated(chosen[i - 1].begin(),
                                  chosen[i - 1].end());
        for (int k = 1; k < i; ++k)
          for (int v : compose(chain, k, i).image(chosen[k - 1]))
            accumulated.insert(v);
        std::vector<int> acc(accumulated.begin(), accumulated.end());
        if (!chain.maps[i - 1].injective_on(acc))
          injective = false;
      }
      if (!injective) {
        verdict.satisfied = true;
        verdict.vacuous = true;
        verdicts.push_back(std::move(verdict));
        continue;
      }
    }

    verdict.satisfied = false;
    for (int i = 1; i <= length && !verdict.witness; ++i)
      for (int j = i + 1; j <= length; ++j) {
        std::vector<int> image = compose(chain, i, j).image(chosen[i - 1]);
        if (sets_intersect(image, chosen[j - 1])) {
          verdict.satisfied = true;
          verdict.witness = {i, j};
          break;
        }
      }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

bool propagate_weight_check(const LtfPresentation& p, const MinorMap& pi,
                            const std::vector<int>& I_f,
                            const Rational& eps) {
  if (I_f.empty())
    throw ParameterError("the choice set must be nonempty");
  if (!pi.injective_on(I_f))
    throw ParameterError("map must be injective on I(f)");
  LtfPresentation minor = presentation_minor(p, pi);
  Rational on_image = 0;
  for (int j : pi.image(I_f))
    on_image += rational_abs(minor.weights[j - 1]);
  return on_image > eps * abs_sum(minor.weights);
}

} // namespace pcsp

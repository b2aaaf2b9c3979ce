#include "pcsp/minions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "pcsp/preorder.hpp"

namespace pcsp {

LtfPresentation st_generator(int m) {
  if (m < 0)
    throw ParameterError("st_generator requires m >= 0");
  std::vector<Rational> weights{Rational(1)};
  Integer power = 1;
  for (int k = 1; k <= m; ++k) {
    power *= 2;
    weights.emplace_back(power);
    weights.emplace_back(-power);
  }
  return LtfPresentation(std::move(weights), Rational(0), LtfForm::Weak);
}

LtfPresentation wp_generator(int m) {
  if (m < 1)
    throw ParameterError("wp_generator requires m >= 1");
  std::vector<Rational> weights{Rational(1, 3)};
  weights.insert(weights.end(), 2 * m, Rational(1, 3 * m));
  return LtfPresentation(std::move(weights), Rational(1, 2), LtfForm::Weak);
}

namespace {

const BooleanFunction kIdentity(1, {0, 1});

std::optional<std::pair<int, MinorMap>>
st_recursive(const BooleanFunction& f) {
  if (f.arity == 1) {
    if (f == kIdentity)
      return std::make_pair(0, MinorMap(1, 1, {1}));
    return std::nullopt;
  }
  auto pairs = find_fixing_pairs(f);
  if (pairs.empty())
    return std::nullopt;
  auto [i, j] = pairs.front(); // lexicographically least
  // Identify the second coordinate of the pair into the first.
  std::vector<int> identify(f.arity);
  for (int k = 1; k <= f.arity; ++k) {
    int target = (k == j) ? i : k;
    identify[k - 1] = target < j ? target : target - 1;
  }
  MinorMap mu(f.arity, f.arity - 1, identify);
  auto inner = st_recursive(f.minor(mu));
  if (!inner)
    return std::nullopt;
  auto [m_inner, rho_inner] = *inner;
  int m = m_inner + 1;
  std::vector<int> rho(2 * m + 1);
  for (int k = 1; k <= 2 * m - 1; ++k) {
    int v = rho_inner(k);
    rho[k - 1] = v < j ? v : v + 1; // undo the renumbering
  }
  rho[2 * m - 1] = i;
  rho[2 * m] = j;
  return std::make_pair(m, MinorMap(2 * m + 1, f.arity, rho));
}

void verify_st_witness(const BooleanFunction& f, int m, const MinorMap& rho) {
  LtfPresentation minor = presentation_minor(st_generator(m), rho);
  if (truth_table(minor) != f)
    throw InvariantError("ST witness failed verification");
}

/// All generator minors onto a fixed small arity, memoized as a map from
/// truth-table digest to the first witness in enumeration order (generator
/// index ascending, then lexicographic map order).
const std::unordered_map<std::string, std::pair<int, MinorMap>>&
st_minor_table(int arity) {
  static std::mutex mutex;
  static std::map<int, std::unordered_map<std::string, std::pair<int, MinorMap>>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(arity);
  if (it != cache.end())
    return it->second;
  auto& table = cache[arity];
  for (int m = 0; m < arity; ++m) {
    LtfPresentation generator = st_generator(m);
    int positions = 2 * m + 1;
    std::vector<int> map(positions, 1);
    while (true) {
      MinorMap rho(positions, arity, map);
      std::string key = truth_table(presentation_minor(generator, rho))
                            .digest();
      table.emplace(key, std::make_pair(m, rho));
      int pos = positions - 1;
      while (pos >= 0 && map[pos] == arity)
        map[pos--] = 1;
      if (pos < 0)
        break;
      ++map[pos];
    }
  }
  return table;
}

StMembership st_bruteforce(const BooleanFunction& f) {
  StMembership result;
  if (f.arity <= 4) {
    const auto& table = st_minor_table(f.arity);
    auto hit = table.find(f.digest());
    if (hit == table.end())
      return result;
    result.member = true;
    result.m = hit->second.first;
    result.rho = hit->second.second;
    return result;
  }
  if (f.arity > 5)
    throw CapacityError("brute-force ST membership capped at arity 5");
  for (int m = 0; m < f.arity; ++m) {
    LtfPresentation generator = st_generator(m);
    int positions = 2 * m + 1;
    std::vector<int> map(positions, 1);
    while (true) {
      MinorMap rho(positions, f.arity, map);
      if (truth_table(presentation_minor(generator, rho)) == f) {
        result.member = true;
        result.m = m;
        result.rho = rho;
        return result;
      }
      int pos = positions - 1;
      while (pos >= 0 && map[pos] == f.arity)
        map[pos--] = 1;
      if (pos < 0)
        break;
      ++map[pos];
    }
  }
  return result;
}

} // namespace

StMembership st_membership(const BooleanFunction& f, StMethod method) {
  switch (method) {
  case StMethod::Recursive: {
    StMembership result;
    if (auto witness = st_recursive(f)) {
      verify_st_witness(f, witness->first, witness->second);
      result.member = true;
      result.m = witness->first;
      result.rho = witness->second;
    }
    return result;
  }
  case StMethod::Template: {
    StMembership result;
    result.member = f.is_idempotent() &&
                    is_polymorphism(f, make_stl(), make_str());
    return result;
  }
  case StMethod::Bruteforce: {
    StMembership result = st_bruteforce(f);
    if (result.member)
      verify_st_witness(f, *result.m, *result.rho);
    return result;
  }
  }
  throw InvariantError("unreachable membership method");
}

std::optional<MinorMap>
symmetric_minor_search(const LtfPresentation& p, int target_arity,
                       std::uint64_t cap) {
  int n = p.arity();
  if (target_arity < 1 || target_arity > n)
    throw ParameterError("target arity must lie in [1, arity]");
  double space = std::pow(static_cast<double>(target_arity), n);
  if (space > static_cast<double>(cap))
    throw CapacityError("symmetric minor search space exceeds the cap");
  if (p.form == LtfForm::Strict && !is_total(p))
    throw TotalityError("symmetric minor search needs a total function");

  // Integer view; the search is pure weight arithmetic. A minor is
  // symmetric iff on every popcount level all sums land on one side of
  // the threshold, which reduces to the min/max level sums.
  Integer lcm = 1;
  for (const auto& w : p.weights)
    lcm = boost::multiprecision::lcm(lcm, denominator(w));
  lcm = boost::multiprecision::lcm(lcm, denominator(p.threshold));
  Integer magnitude = abs(numerator(p.threshold) * (lcm / denominator(p.threshold)));
  for (const auto& w : p.weights)
    magnitude += abs(numerator(w) * (lcm / denominator(w)));
  if (magnitude > Integer(std::numeric_limits<long long>::max() / 4))
    throw CapacityError("weights too large for the symmetric search");
  std::vector<long long> weights;
  for (const auto& w : p.weights)
    weights.push_back(
        Integer(numerator(w) * (lcm / denominator(w))).convert_to<long long>());
  long long threshold =
      Integer(numerator(p.threshold) * (lcm / denominator(p.threshold)))
          .convert_to<long long>();

  int k = target_arity;
  std::vector<int> map(n, 1);
  std::vector<long long> bins(k, 0);
  for (long long w : weights)
    bins[0] += w;
  std::vector<long long> sorted(k);
  while (true) {
    sorted.assign(bins.begin(), bins.end());
    std::sort(sorted.begin(), sorted.end());
    bool symmetric = true;
    long long lo = 0, hi = 0;
    for (int c = 1; c <= k && symmetric; ++c) {
      lo += sorted[c - 1];
      hi += sorted[k - c];
      // All popcount-c inputs agree iff min and max sums agree vs t.
      if ((lo > threshold) != (hi > threshold))
        symmetric = false;
    }
    if (symmetric)
      return MinorMap(n, k, map);
    // Advance the odometer (last position fastest), updating bins.
    int pos = n - 1;
    while (pos >= 0 && map[pos] == k) {
      bins[map[pos] - 1] -= weights[pos];
      map[pos] = 1;
      bins[0] += weights[pos];
      --pos;
    }
    if (pos < 0)
      return std::nullopt;
    bins[map[pos] - 1] -= weights[pos];
    ++map[pos];
    bins[map[pos] - 1] += weights[pos];
  }
}

bool heavy_coordinate_bound(const LtfPresentation& p, const Rational& bound) {
  return max_abs(p.weights) > bound * abs_sum(p.weights);
}

MultichoiceRefutation
build_multichoice_refutation(const ChoiceFunction& choice, int size_bound) {
  if (size_bound < 1)
    throw ParameterError("the size bound M must be positive");
  int M = size_bound;
  int m = 2 * M;
  MultichoiceRefutation out;
  out.f = wp_generator(m);
  try {
    out.choice_of_f = choice(out.f);
  } catch (const ParameterError& e) {
    throw ConstructionError(std::string("choice function failed on the WP "
                                        "generator: ") +
                            e.what());
  }
  std::sort(out.choice_of_f.begin(), out.choice_of_f.end());
  if (static_cast<int>(out.choice_of_f.size()) > M)
    throw ConstructionError("|I(f)| exceeds the bound M");

  // The minor is the first-coordinate projection of arity M+2 regardless
  // of which j receives I(f); query I(g) on that projection first.
  int g_arity = M + 2;
  std::vector<Rational> proj_weights(g_arity, Rational(0));
  proj_weights[0] = 1;
  LtfPresentation proj(std::move(proj_weights), Rational(1, 2),
                       LtfForm::Weak);
  try {
    out.choice_of_g = choice(proj);
  } catch (const ParameterError& e) {
    throw ConstructionError(std::string("choice function failed on the "
                                        "projection: ") +
                            e.what());
  }
  std::sort(out.choice_of_g.begin(), out.choice_of_g.end());
  if (static_cast<int>(out.choice_of_g.size()) > M)
    throw ConstructionError("|I(g)| exceeds the bound M");

  int j = 0;
  for (int candidate = 2; candidate <= g_arity; ++candidate)
    if (!std::binary_search(out.choice_of_g.begin(), out.choice_of_g.end(),
                            candidate)) {
      j = candidate;
      break;
    }
  if (j == 0)
    throw ConstructionError("no coordinate outside I(g) and {1}; "
                            "disjointness unreachable");
  out.target = j;

  std::vector<int> map(out.f.arity(), 1);
  for (int i : out.choice_of_f)
    map[i - 1] = j;
  out.pi = MinorMap(out.f.arity(), g_arity, map);
  out.g = presentation_minor(out.f, out.pi);

  // Verification gate: the minor must be that projection, and the image
  // of I(f) must avoid I(g).
  if (truth_table(out.g) != truth_table(proj))
    throw ConstructionError("minor is not the expected projection; the "
                            "chosen I(f) carries too much weight");
  std::vector<int> image = out.pi.image(out.choice_of_f);
  for (int v : image)
    if (std::binary_search(out.choice_of_g.begin(), out.choice_of_g.end(),
                           v))
      throw ConstructionError("pi(I(f)) meets I(g); disjointness failed");
  return out;
}

namespace {

/// Bookkeeping for one link of the layered construction: a generator-like
/// presentation with a distinguished unit-role coordinate, an optional
/// non-essential chain coordinate, and cancelling pairs.
struct StPattern {
  LtfPresentation p;
  int one_role = 1;                 // coordinate carrying weight P > 0
  int dummy = 0;                    // 0 when absent (the pure generator)
  std::vector<std::array<int, 2>> pairs; // (positive, negative), ascending
};

StPattern pure_generator(int k) {
  StPattern pat;
  pat.p = st_generator(k);
  pat.one_role = 1;
  for (int r = 1; r <= k; ++r)
    pat.pairs.push_back({2 * r, 2 * r + 1});
  return pat;
}

} // namespace

MinorChain build_layered_refutation(const ChoiceFunction& choice,
                                    int size_bound) {
  if (size_bound < 1)
    throw ParameterError("the size bound M must be positive");
  int M = size_bound;
  int k_start = 2 + (M - 1) * ((M + 1) / 2 + 1) + 1;

  for (int attempt = 0; attempt < 8; ++attempt, ++k_start) {
    MinorChain chain;
    StPattern current = pure_generator(k_start);
    bool restart = false;

    std::vector<std::vector<int>> choices;
    for (int step = 1; step <= M; ++step) {
      chain.functions.push_back(current.p);
      std::vector<int> chosen;
      try {
        chosen = choice(current.p);
      } catch (const ParameterError& e) {
        throw ConstructionError(
            std::string("choice function failed on a chain member: ") +
            e.what());
      }
      std::sort(chosen.begin(), chosen.end());
      if (static_cast<int>(chosen.size()) > M)
        throw ConstructionError("|I(f_i)| exceeds the bound M");
      if (current.dummy != 0 &&
          std::binary_search(chosen.begin(), chosen.end(), current.dummy))
        throw ConstructionError("choice selected the chain coordinate; the "
                                "construction cannot hide it");
      choices.push_back(chosen);
      if (step == M)
        break;

      // Merge set: unit-role, I(f_i) with pair-opposites, the chain
      // coordinate (the dummy, or a fresh untouched pair at step one).
      std::set<int> merge{current.one_role};
      if (current.dummy != 0)
        merge.insert(current.dummy);
      for (int c : chosen) {
        merge.insert(c);
        for (const auto& pr : current.pairs)
          if (pr[0] == c || pr[1] == c) {
            merge.insert(pr[0]);
            merge.insert(pr[1]);
          }
      }
      if (current.dummy == 0) {
        int link = 0;
        for (const auto& pr : current.pairs)
          if (!merge.count(pr[0]) && !merge.count(pr[1])) {
            link = pr[0];
            merge.insert(pr[0]);
            merge.insert(pr[1]);
            break;
          }
        if (link == 0) {
          restart = true;
          break;
        }
      }
      // Fold target: the smallest untouched pair; its negative joins the
      // merge (forming the next chain coordinate), its positive becomes
      // the next unit role.
      std::array<int, 2> fold{0, 0};
      std::vector<std::array<int, 2>> survivors;
      for (const auto& pr : current.pairs) {
        if (merge.count(pr[0]) || merge.count(pr[1]))
          continue;
        if (fold[0] == 0)
          fold = pr;
        else
          survivors.push_back(pr);
      }
      if (fold[0] == 0 || survivors.empty()) {
        restart = true;
        break;
      }
      merge.insert(fold[1]);

      int n = current.p.arity();
      std::vector<int> map(n, 1);
      int next_index = 1;
      std::vector<int> new_index(n + 1, 0);
      for (int c = 1; c <= n; ++c)
        if (!merge.count(c))
          new_index[c] = ++next_index;
      for (int c = 1; c <= n; ++c)
        map[c - 1] = merge.count(c) ? 1 : new_index[c];
      MinorMap pi(n, next_index, map);

      StPattern next;
      next.p = presentation_minor(current.p, pi);
      next.dummy = 1;
      next.one_role = new_index[fold[0]];
      for (const auto& pr : survivors)
        next.pairs.push_back({new_index[pr[0]], new_index[pr[1]]});
      chain.maps.push_back(pi);
      current = std::move(next);
    }
    if (restart)
      continue;

    chain.verify();
    for (int i = 1; i <= M; ++i)
      for (int j = i + 1; j <= M; ++j) {
        std::vector<int> image = compose(chain, i, j).image(choices[i - 1]);
        for (int v : image)
          if (std::binary_search(choices[j - 1].begin(),
                                 choices[j - 1].end(), v))
            throw ConstructionError(
                "pairwise disjointness failed at (" + std::to_string(i) +
                ", " + std::to_string(j) + ")");
      }
    return chain;
  }
  throw ConstructionError("could not size the layered construction");
}

} // namespace pcsp

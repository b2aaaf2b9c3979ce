#include "pcsp/ltf.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "pcsp/subset_sums.hpp"

namespace pcsp {

namespace {

constexpr int kMaxTableArity = 22;

/// Common-denominator view of a presentation: integer weights and
/// threshold such that value/denom reproduces the rational. Falls back to
/// nullopt when the scaled magnitudes do not fit comfortably in int64.
struct ScaledInts {
  std::vector<long long> weights;
  long long threshold = 0;
};

std::optional<ScaledInts> scale_to_ints(const LtfPresentation& p) {
  Integer lcm = 1;
  for (const auto& w : p.weights)
    lcm = boost::multiprecision::lcm(lcm, denominator(w));
  lcm = boost::multiprecision::lcm(lcm, denominator(p.threshold));
  ScaledInts out;
  out.weights.reserve(p.weights.size());
  Integer total = 0;
  constexpr long long kLimit = std::numeric_limits<long long>::max() / 4;
  auto convert = [&](const Rational& v) -> std::optional<long long> {
    Integer scaled = numerator(v) * (lcm / denominator(v));
    total += abs(scaled);
    if (total > kLimit)
      return std::nullopt;
    return scaled.convert_to<long long>();
  };
  for (const auto& w : p.weights) {
    auto v = convert(w);
    if (!v)
      return std::nullopt;
    out.weights.push_back(*v);
  }
  auto t = convert(p.threshold);
  if (!t)
    return std::nullopt;
  out.threshold = *t;
  return out;
}

/// Walks all 2^n inputs in index order keeping a running weighted sum; the
/// step from idx to idx+1 flips the trailing ones and sets the carry bit,
/// so one precomputed delta per carry position suffices.
template <typename Value, typename Visit>
void enumerate_sums(const std::vector<Value>& weights, Visit&& visit) {
  int n = static_cast<int>(weights.size());
  std::vector<Value> deltas(n);
  Value prefix{};
  for (int k = 0; k < n; ++k) {
    deltas[k] = weights[k] - prefix;
    prefix += weights[k];
  }
  Value sum{};
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0;; ++idx) {
    visit(idx, sum);
    if (idx + 1 == count)
      break;
    sum += deltas[std::countr_one(idx)];
  }
}

} // namespace

LtfPresentation::LtfPresentation(std::vector<Rational> w, Rational t,
                                 LtfForm f)
    : weights(std::move(w)), threshold(std::move(t)), form(f) {
  if (weights.empty())
    throw ParameterError("presentation weights must be nonempty");
}

std::optional<int> evaluate(const LtfPresentation& p,
                            const std::vector<int>& input) {
  if (input.size() != p.weights.size())
    throw ParameterError("input length does not match presentation arity");
  Rational sum = 0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] != 0 && input[i] != 1)
      throw ParameterError("inputs must be 0/1");
    if (input[i])
      sum += p.weights[i];
  }
  if (p.form == LtfForm::Weak)
    return sum <= p.threshold ? 0 : 1;
  if (sum < p.threshold)
    return 0;
  if (sum > p.threshold)
    return 1;
  return std::nullopt;
}

bool is_total(const LtfPresentation& p) {
  if (p.form == LtfForm::Weak)
    return true;
  SubsetSums sums(p.weights);
  return !sums.contains(p.threshold);
}

LtfPresentation convert_form(const LtfPresentation& p, LtfForm target) {
  if (p.form == target)
    return p;
  SubsetSums sums(p.weights);
  if (target == LtfForm::Strict) {
    // Midpoint between t and the next achievable sum above it keeps the
    // new threshold away from every achievable sum.
    const Rational* above = sums.smallest_above(p.threshold);
    Rational t = above ? Rational((p.threshold + *above) / 2)
                       : Rational(sums.max() + 1);
    return LtfPresentation(p.weights, t, LtfForm::Strict);
  }
  if (sums.contains(p.threshold))
    throw TotalityError("strict presentation is partial; cannot convert");
  // No achievable sum equals the strict threshold, so "sum <= t" and
  // "sum < t" agree on every input and the threshold carries over.
  return LtfPresentation(p.weights, p.threshold, LtfForm::Weak);
}

LtfPresentation presentation_minor(const LtfPresentation& p,
                                   const MinorMap& pi) {
  if (pi.from_arity != p.arity())
    throw ParameterError("minor map domain does not match presentation");
  std::vector<Rational> merged(pi.to_arity, Rational(0));
  for (int j = 1; j <= pi.from_arity; ++j)
    merged[pi(j) - 1] += p.weights[j - 1];
  return LtfPresentation(std::move(merged), p.threshold, p.form);
}

LtfPresentation scale(const LtfPresentation& p, const Rational& c) {
  if (c <= 0)
    throw ParameterError("scaling factor must be positive");
  std::vector<Rational> scaled;
  scaled.reserve(p.weights.size());
  for (const auto& w : p.weights)
    scaled.push_back(w * c);
  return LtfPresentation(std::move(scaled), p.threshold * c, p.form);
}

BooleanFunction truth_table(const LtfPresentation& p) {
  int n = p.arity();
  if (n > kMaxTableArity)
    throw CapacityError("truth table arity above cap");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  bool strict = p.form == LtfForm::Strict;
  if (auto ints = scale_to_ints(p)) {
    enumerate_sums<long long>(ints->weights,
                              [&](std::uint64_t idx, long long sum) {
                                if (strict && sum == ints->threshold)
                                  throw TotalityError(
                                      "strict presentation is partial");
                                table[idx] = sum > ints->threshold ? 1 : 0;
                              });
  } else {
    enumerate_sums<Rational>(p.weights, [&](std::uint64_t idx,
                                            const Rational& sum) {
      if (strict && sum == p.threshold)
        throw TotalityError("strict presentation is partial");
      table[idx] = sum > p.threshold ? 1 : 0;
    });
  }
  return BooleanFunction(n, std::move(table));
}

std::string ltf_digest(const LtfPresentation& p) {
  int n = p.arity();
  if (n > kMaxTableArity)
    throw CapacityError("digest arity above cap");
  static const char* hex = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  int nibble = 0;
  int filled = 0;
  auto push_bit = [&](int bit) {
    nibble |= bit << filled;
    if (++filled == 4) {
      out += hex[nibble];
      nibble = 0;
      filled = 0;
    }
  };
  bool strict = p.form == LtfForm::Strict;
  if (auto ints = scale_to_ints(p)) {
    enumerate_sums<long long>(ints->weights,
                              [&](std::uint64_t, long long sum) {
                                if (strict && sum == ints->threshold)
                                  throw TotalityError(
                                      "strict presentation is partial");
                                push_bit(sum > ints->threshold ? 1 : 0);
                              });
  } else {
    enumerate_sums<Rational>(p.weights,
                             [&](std::uint64_t, const Rational& sum) {
                               if (strict && sum == p.threshold)
                                 throw TotalityError(
                                     "strict presentation is partial");
                               push_bit(sum > p.threshold ? 1 : 0);
                             });
  }
  if (filled)
    out += hex[nibble];
  return out;
}

Monotonicity monotonicity(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity)
    throw ParameterError("coordinate outside [1, arity]");
  std::uint32_t bit = 1u << (i - 1);
  bool monotone = true;
  bool antimonotone = true;
  for (std::uint32_t x = 0; x < f.table.size(); ++x) {
    if (x & bit)
      continue;
    int low = f.eval(x);
    int high = f.eval(x | bit);
    if (low > high)
      monotone = false;
    if (low < high)
      antimonotone = false;
  }
  if (monotone && antimonotone)
    return Monotonicity::Both;
  if (monotone)
    return Monotonicity::Monotone;
  if (antimonotone)
    return Monotonicity::Antimonotone;
  throw InvariantError("coordinate " + std::to_string(i) +
                       " is neither monotone nor antimonotone");
}

std::vector<std::pair<int, int>> find_fixing_pairs(const BooleanFunction& f) {
  if (f.arity < 2)
    throw ParameterError("fixing pairs require arity >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= f.arity; ++i) {
    for (int j = 1; j <= f.arity; ++j) {
      if (i == j)
        continue;
      std::uint32_t bi = 1u << (i - 1);
      std::uint32_t bj = 1u << (j - 1);
      bool fixing = true;
      for (std::uint32_t x = 0; x < f.table.size() && fixing; ++x) {
        std::uint32_t vi = x & bi;
        std::uint32_t vj = x & bj;
        if (!vi && vj && f.eval(x) != 0)
          fixing = false;
        if (vi && !vj && f.eval(x) != 1)
          fixing = false;
      }
      if (fixing)
        pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<std::pair<int, int>>
find_fixing_pairs(const LtfPresentation& p) {
  int n = p.arity();
  if (n < 2)
    throw ParameterError("fixing pairs require arity >= 2");
  if (p.form == LtfForm::Strict && !is_total(p))
    throw TotalityError("fixing pairs of a partial presentation");
  // With f(x) = [<a|x> > t] in both total forms, (i, j) is fixing iff
  //   s + a_j <= t  and  s + a_i > t  for every sum s over the others,
  // i.e. max_s(s) + a_j <= t < min_s(s) + a_i.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j)
        continue;
      SubsetSums others(p.weights, std::vector<int>{i - 1, j - 1});
      if (others.max() + p.weights[j - 1] <= p.threshold &&
          others.min() + p.weights[i - 1] > p.threshold)
        pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

MinorMapProperties minor_map_properties(const MinorMap& pi,
                                        const LtfPresentation& p,
                                        const std::vector<int>& coords) {
  if (pi.from_arity != p.arity())
    throw ParameterError("map domain does not match presentation arity");
  for (int c : coords)
    if (c < 1 || c > pi.from_arity)
      throw ParameterError("coordinate set outside [1, from_arity]");
  MinorMapProperties props;
  props.injective_on = pi.injective_on(coords);
  std::vector<int> img = pi.image(coords);
  props.covered_by = true;
  for (int j = 1; j <= pi.to_arity; ++j) {
    if (std::binary_search(img.begin(), img.end(), j))
      continue;
    if (pi.preimage_count(j) != 1) {
      props.covered_by = false;
      break;
    }
  }
  Rational min_inside;
  bool have_inside = false;
  Rational max_outside = 0;
  std::vector<bool> inside(pi.from_arity + 1, false);
  for (int c : coords)
    inside[c] = true;
  for (int c = 1; c <= pi.from_arity; ++c) {
    Rational a = rational_abs(p.weights[c - 1]);
    if (inside[c]) {
      if (!have_inside || a < min_inside) {
        min_inside = a;
        have_inside = true;
      }
    } else if (a > max_outside) {
      max_outside = a;
    }
  }
  props.dominating = have_inside ? min_inside >= max_outside : true;
  return props;
}

Rational linf_distance(const LtfPresentation& a, const LtfPresentation& b) {
  if (a.arity() != b.arity())
    throw ParameterError("distance requires equal arities");
  Rational best = rational_abs(a.threshold - b.threshold);
  for (int i = 0; i < a.arity(); ++i) {
    Rational d = rational_abs(a.weights[i] - b.weights[i]);
    if (d > best)
      best = d;
  }
  return best;
}

} // namespace pcsp

#include "pcsp/preorder.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "pcsp/subset_sums.hpp"

namespace pcsp {

namespace {

bool can_monotone(Monotonicity m) { return m != Monotonicity::Antimonotone; }
bool can_antimonotone(Monotonicity m) { return m != Monotonicity::Monotone; }

void merge_verdict(std::optional<bool>& verdict, bool branch, int i, int j) {
  if (!verdict) {
    verdict = branch;
    return;
  }
  if (*verdict != branch)
    throw InvariantError("preorder branches disagree on pair (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
}

void check_preorder_axioms(const CoordinatePreorder& pre) {
  int n = pre.arity;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!pre.less(i, j) && !pre.less(j, i))
        throw InvariantError("preorder is not total on pair (" +
                             std::to_string(i) + ", " + std::to_string(j) +
                             ")");
      for (int k = 1; k <= n && pre.less(i, j); ++k)
        if (pre.less(j, k) && !pre.less(i, k))
          throw InvariantError("preorder is not transitive");
    }
}

/// Table-route evaluation of the four definitional branches.
class TableOracle {
public:
  explicit TableOracle(const BooleanFunction& f) : f_(f) {}

  // forall settings z: f(i=1, j=0, z) <= f(i=0, j=1, z).
  bool swap_le(int i, int j) const {
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    for (std::uint32_t x = 0; x < f_.table.size(); ++x) {
      if (!(x & bi) || (x & bj))
        continue;
      if (f_.eval(x) > f_.eval((x ^ bi) | bj))
        return false;
    }
    return true;
  }

  // The identified coordinate {ij} of f_ij is monotone.
  bool merged_monotone(int i, int j) const {
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    for (std::uint32_t x = 0; x < f_.table.size(); ++x) {
      if ((x & bi) || (x & bj))
        continue;
      if (f_.eval(x) > f_.eval(x | bi | bj))
        return false;
    }
    return true;
  }

  bool merged_antimonotone(int i, int j) const {
    std::uint32_t bi = 1u << (i - 1), bj = 1u << (j - 1);
    for (std::uint32_t x = 0; x < f_.table.size(); ++x) {
      if ((x & bi) || (x & bj))
        continue;
      if (f_.eval(x) < f_.eval(x | bi | bj))
        return false;
    }
    return true;
  }

private:
  const BooleanFunction& f_;
};

/// Presentation-route evaluation: the function is x -> [<w|x> > t] (total
/// in both forms), so each branch reduces to emptiness of an achievable-sum
/// interval over the remaining coordinates.
class PresentationOracle {
public:
  explicit PresentationOracle(const LtfPresentation& p) : p_(p) {}

  Monotonicity coordinate_monotonicity(int i) const {
    SubsetSums others(p_.weights, std::vector<int>{i - 1});
    const Rational& w = p_.weights[i - 1];
    bool monotone = !others.any_in(p_.threshold, p_.threshold - w);
    bool antimonotone = !others.any_in(p_.threshold - w, p_.threshold);
    if (monotone && antimonotone)
      return Monotonicity::Both;
    if (monotone)
      return Monotonicity::Monotone;
    if (antimonotone)
      return Monotonicity::Antimonotone;
    throw InvariantError("presentation coordinate neither monotone nor "
                         "antimonotone");
  }

  bool swap_le(int i, int j, const SubsetSums& others) const {
    return !others.any_in(p_.threshold - p_.weights[i - 1],
                          p_.threshold - p_.weights[j - 1]);
  }

  bool merged_monotone(int i, int j, const SubsetSums& others) const {
    Rational merged = p_.weights[i - 1] + p_.weights[j - 1];
    return !others.any_in(p_.threshold, p_.threshold - merged);
  }

  bool merged_antimonotone(int i, int j, const SubsetSums& others) const {
    Rational merged = p_.weights[i - 1] + p_.weights[j - 1];
    return !others.any_in(p_.threshold - merged, p_.threshold);
  }

private:
  const LtfPresentation& p_;
};

/// Shared pair logic: evaluate every branch whose monotonicity
/// requirements hold, assert agreement.
template <typename SwapLe, typename MergedMono, typename MergedAnti>
bool pair_less(int i, int j, Monotonicity mi, Monotonicity mj,
               SwapLe&& swap_le, MergedMono&& merged_mono,
               MergedAnti&& merged_anti) {
  std::optional<bool> verdict;
  if (can_monotone(mi) && can_monotone(mj))
    merge_verdict(verdict, swap_le(i, j), i, j);
  if (can_antimonotone(mi) && can_antimonotone(mj))
    merge_verdict(verdict, swap_le(j, i), i, j);
  if (can_monotone(mi) && can_antimonotone(mj))
    merge_verdict(verdict, merged_anti(i, j), i, j);
  if (can_antimonotone(mi) && can_monotone(mj))
    merge_verdict(verdict, merged_mono(i, j), i, j);
  if (!verdict)
    throw InvariantError("no preorder branch applies");
  return *verdict;
}

} // namespace

std::vector<std::vector<int>> CoordinatePreorder::classes_ascending() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> assigned(arity + 1, false);
  for (int i = 1; i <= arity; ++i) {
    if (assigned[i])
      continue;
    std::vector<int> cls;
    for (int j = i; j <= arity; ++j)
      if (!assigned[j] && equivalent(i, j)) {
        cls.push_back(j);
        assigned[j] = true;
      }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (strictly_less(a[0], b[0]))
                return true;
              if (strictly_less(b[0], a[0]))
                return false;
              return a[0] < b[0];
            });
  return classes;
}

std::vector<int> CoordinatePreorder::ranked_descending() const {
  auto classes = classes_ascending();
  std::vector<int> ranked;
  ranked.reserve(arity);
  for (auto it = classes.rbegin(); it != classes.rend(); ++it)
    for (int c : *it)
      ranked.push_back(c);
  return ranked;
}

CoordinatePreorder compute_preorder(const BooleanFunction& f) {
  CoordinatePreorder pre;
  pre.arity = f.arity;
  pre.mono.resize(f.arity + 1);
  for (int i = 1; i <= f.arity; ++i)
    pre.mono[i] = monotonicity(f, i);
  pre.less_matrix.assign(std::size_t(f.arity) * f.arity, false);
  TableOracle oracle(f);
  for (int i = 1; i <= f.arity; ++i)
    for (int j = 1; j <= f.arity; ++j) {
      bool value =
          i == j ||
          pair_less(
              i, j, pre.mono[i], pre.mono[j],
              [&](int a, int b) { return oracle.swap_le(a, b); },
              [&](int a, int b) { return oracle.merged_monotone(a, b); },
              [&](int a, int b) { return oracle.merged_antimonotone(a, b); });
      pre.less_matrix[std::size_t(i - 1) * f.arity + (j - 1)] = value;
    }
  pre.mono.erase(pre.mono.begin());
  check_preorder_axioms(pre);
  return pre;
}

CoordinatePreorder compute_preorder(const LtfPresentation& p) {
  if (p.form == LtfForm::Strict && !is_total(p))
    throw TotalityError("preorder of a partial presentation");
  int n = p.arity();
  CoordinatePreorder pre;
  pre.arity = n;
  pre.mono.resize(n + 1);
  PresentationOracle oracle(p);
  for (int i = 1; i <= n; ++i)
    pre.mono[i] = oracle.coordinate_monotonicity(i);
  pre.less_matrix.assign(std::size_t(n) * n, false);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i == j) {
        pre.less_matrix[std::size_t(i - 1) * n + (j - 1)] = true;
        continue;
      }
      SubsetSums others(p.weights, {i - 1, j - 1});
      auto swap_le = [&](int a, int b) { return oracle.swap_le(a, b, others); };
      auto merged_mono = [&](int a, int b) {
        return oracle.merged_monotone(a, b, others);
      };
      auto merged_anti = [&](int a, int b) {
        return oracle.merged_antimonotone(a, b, others);
      };
      pre.less_matrix[std::size_t(i - 1) * n + (j - 1)] = pair_less(
          i, j, pre.mono[i], pre.mono[j], swap_le, merged_mono, merged_anti);
      pre.less_matrix[std::size_t(j - 1) * n + (i - 1)] = pair_less(
          j, i, pre.mono[j], pre.mono[i], swap_le, merged_mono, merged_anti);
    }
  pre.mono.erase(pre.mono.begin());
  check_preorder_axioms(pre);
  return pre;
}

namespace {

constexpr int kCanonicalVerifyCap = 16;

bool sign_nonneg(const Rational& v) { return v >= 0; }

} // namespace

LtfPresentation canonical_presentation(const LtfPresentation& input) {
  LtfPresentation p = input.form == LtfForm::Weak
                          ? convert_form(input, LtfForm::Strict)
                          : input;
  if (!is_total(p))
    throw TotalityError("canonical presentation requires a total function");
  int n = p.arity();
  if (n > kCanonicalVerifyCap)
    throw CapacityError("canonical presentation verification cap exceeded");
  {
    Rational total = 0;
    for (const auto& w : p.weights)
      total += w;
    bool zero_side = Rational(0) > p.threshold;
    bool one_side = total > p.threshold;
    if (zero_side == one_side)
      throw ParameterError(
          "canonical presentation requires a non-constant unary minor");
  }
  BooleanFunction before = truth_table(p);
  CoordinatePreorder pre = compute_preorder(before);

  for (const auto& cls : pre.classes_ascending()) {
    Rational avg = 0;
    for (int c : cls)
      avg += rational_abs(p.weights[c - 1]);
    avg /= cls.size();
    // Each pass moves one below-average coordinate exactly onto the
    // average; the class's absolute-value sum is preserved throughout.
    for (std::size_t step = 0; step <= cls.size(); ++step) {
      int low = 0, high = 0;
      for (int c : cls) {
        Rational a = rational_abs(p.weights[c - 1]);
        if (low == 0 && a < avg)
          low = c;
        if (high == 0 && a > avg)
          high = c;
      }
      if (low == 0 && high == 0)
        break;
      if (low == 0 || high == 0)
        throw InvariantError("class equalization lost its balance");
      if (step == cls.size())
        throw InvariantError("class equalization failed to terminate");
      Rational& wk = p.weights[low - 1];
      Rational& wl = p.weights[high - 1];
      Rational eps = avg - rational_abs(wk);
      if (sign_nonneg(wk) != sign_nonneg(wl)) {
        // Opposite signs: shift both weights and the threshold together.
        Rational delta = sign_nonneg(wk) ? eps : -eps;
        wk += delta;
        wl += delta;
        p.threshold += delta;
      } else if (sign_nonneg(wk)) {
        wk += eps;
        wl -= eps;
      } else {
        wk -= eps;
        wl += eps;
      }
    }
  }

  if (truth_table(p) != before)
    throw InvariantError("canonical tweaks changed the function");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rational ai = rational_abs(p.weights[i - 1]);
      Rational aj = rational_abs(p.weights[j - 1]);
      if ((ai < aj) != pre.strictly_less(i, j) ||
          (ai == aj) != pre.equivalent(i, j))
        throw InvariantError("canonical weights do not match the preorder");
    }
  return p;
}

} // namespace pcsp

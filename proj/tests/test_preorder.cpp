#include <doctest.h>

#include <random>

#include "pcsp/preorder.hpp"

using namespace pcsp;

namespace {

LtfPresentation weak(std::vector<Rational> w, Rational t) {
  return LtfPresentation(std::move(w), std::move(t), LtfForm::Weak);
}

LtfPresentation random_weak(std::mt19937_64& rng, int max_arity) {
  std::uniform_int_distribution<int> arity_dist(1, max_arity);
  std::uniform_int_distribution<int> weight_dist(-8, 8);
  int arity = arity_dist(rng);
  std::vector<Rational> w;
  for (int i = 0; i < arity; ++i)
    w.emplace_back(weight_dist(rng));
  // Half-integer threshold keeps strict conversions comfortable.
  std::uniform_int_distribution<int> t_dist(-8, 8);
  return weak(std::move(w), Rational(2 * t_dist(rng) + 1, 2));
}

bool non_constant_unary(const LtfPresentation& p) {
  Rational total = 0;
  for (const auto& w : p.weights)
    total += w;
  return (Rational(0) > p.threshold) != (total > p.threshold);
}

/// Applies one random weight-preserving tweak to an equivalent pair, if
/// any exists; returns true when a tweak was applied.
bool random_tweak(LtfPresentation& p, const CoordinatePreorder& pre,
                  std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> candidates;
  for (int i = 1; i <= p.arity(); ++i)
    for (int j = 1; j <= p.arity(); ++j)
      if (i != j && pre.equivalent(i, j))
        candidates.emplace_back(i, j);
  if (candidates.empty())
    return false;
  auto [i, j] = candidates[std::uniform_int_distribution<std::size_t>(
      0, candidates.size() - 1)(rng)];
  Rational& wi = p.weights[i - 1];
  Rational& wj = p.weights[j - 1];
  std::uniform_int_distribution<int> amount(1, 4);
  Rational eps(amount(rng), 8);
  bool i_nonneg = wi >= 0;
  bool j_nonneg = wj >= 0;
  if (i_nonneg != j_nonneg) {
    // Opposite signs: both weights and the threshold move together, with
    // the shift direction set by which absolute value is larger.
    const Rational& pos = i_nonneg ? wi : wj;
    const Rational& neg = i_nonneg ? wj : wi;
    if (rational_abs(pos) >= rational_abs(neg)) {
      eps = std::min(eps, rational_abs(pos) - rational_abs(neg));
      wi -= eps;
      wj -= eps;
      p.threshold -= eps;
    } else {
      eps = std::min(eps, rational_abs(neg) - rational_abs(pos));
      wi += eps;
      wj += eps;
      p.threshold += eps;
    }
  } else {
    Rational& big = rational_abs(wi) >= rational_abs(wj) ? wi : wj;
    Rational& small = rational_abs(wi) >= rational_abs(wj) ? wj : wi;
    eps = std::min(eps, rational_abs(big) - rational_abs(small));
    if (i_nonneg) {
      big -= eps;
      small += eps;
    } else {
      big += eps;
      small -= eps;
    }
  }
  return true;
}

} // namespace

TEST_CASE("the ternary generator has one equivalence class") {
  auto f = truth_table(weak({1, 2, -2}, 0));
  auto pre = compute_preorder(f);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pre.equivalent(i, j));
  // Cross-check against an alternative presentation of the same function.
  auto alt = weak({2, 2, -2}, 1);
  REQUIRE(truth_table(alt) == f);
  auto pre_alt = compute_preorder(alt);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pre_alt.equivalent(i, j) == pre.equivalent(i, j));
}

TEST_CASE("dummy coordinates sit strictly below essential ones") {
  auto p = weak({1, 3}, 2); // projection on 2 with a dummy
  auto f = truth_table(p);
  CHECK(f.eval(0b01) == 0);
  CHECK(f.eval(0b10) == 1);
  auto pre = compute_preorder(f);
  CHECK(pre.strictly_less(1, 2));
  CHECK_FALSE(pre.less(2, 1));
}

TEST_CASE("symmetric majority is one class") {
  auto pre = compute_preorder(truth_table(weak({1, 1, 1}, Rational(3, 2))));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(pre.equivalent(i, j));
}

TEST_CASE("presentation and table preorders agree") {
  std::mt19937_64 rng(8101);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_weak(rng, 7);
    auto from_table = compute_preorder(truth_table(p));
    auto from_presentation = compute_preorder(p);
    REQUIRE(from_table.arity == from_presentation.arity);
    for (int i = 1; i <= from_table.arity; ++i) {
      CHECK(from_table.mono[i - 1] == from_presentation.mono[i - 1]);
      for (int j = 1; j <= from_table.arity; ++j)
        CHECK(from_table.less(i, j) == from_presentation.less(i, j));
    }
  }
}

TEST_CASE("canonical presentation of the ternary generator") {
  auto canonical = canonical_presentation(weak({1, 2, -2}, 0));
  CHECK(canonical.form == LtfForm::Strict);
  CHECK(canonical.weights ==
        std::vector<Rational>{Rational(5, 3), Rational(5, 3),
                              Rational(-5, 3)});
  CHECK(truth_table(canonical) == truth_table(weak({1, 2, -2}, 0)));
}

TEST_CASE("already-equalized presentations are fixed points") {
  LtfPresentation majority({1, 1, 1}, Rational(3, 2), LtfForm::Strict);
  CHECK(canonical_presentation(majority) == majority);

  LtfPresentation identity({1}, Rational(1, 2), LtfForm::Strict);
  CHECK(canonical_presentation(identity) == identity);
}

TEST_CASE("canonical soundness on random presentations") {
  std::mt19937_64 rng(8102);
  int done = 0;
  while (done < 150) {
    auto p = random_weak(rng, 8);
    if (!non_constant_unary(p))
      continue;
    ++done;
    auto canonical = canonical_presentation(p);
    auto f = truth_table(p);
    CHECK(truth_table(canonical) == f);
    auto pre = compute_preorder(f);
    for (int i = 1; i <= p.arity(); ++i)
      for (int j = 1; j <= p.arity(); ++j) {
        Rational ai = rational_abs(canonical.weights[i - 1]);
        Rational aj = rational_abs(canonical.weights[j - 1]);
        CHECK((ai < aj) == pre.strictly_less(i, j));
        CHECK((ai == aj) == pre.equivalent(i, j));
      }
  }
}

TEST_CASE("every presentation of a function respects the strict order") {
  std::mt19937_64 rng(8103);
  int done = 0;
  while (done < 120) {
    auto p = random_weak(rng, 7);
    if (!non_constant_unary(p))
      continue;
    ++done;
    auto strict = convert_form(p, LtfForm::Strict);
    auto f = truth_table(p);
    auto pre = compute_preorder(f);

    // The original presentation and tweaked variants all obey i < j =>
    // |a_i| < |a_j|.
    std::vector<LtfPresentation> variants{strict};
    LtfPresentation tweaked = strict;
    for (int round = 0; round < 3; ++round)
      if (random_tweak(tweaked, pre, rng))
        variants.push_back(tweaked);
    for (const auto& q : variants) {
      REQUIRE(truth_table(q) == f);
      for (int i = 1; i <= q.arity(); ++i)
        for (int j = 1; j <= q.arity(); ++j)
          if (pre.strictly_less(i, j))
            CHECK(rational_abs(q.weights[i - 1]) <
                  rational_abs(q.weights[j - 1]));
    }
  }
}

TEST_CASE("untouched coordinates keep their order under minors") {
  std::mt19937_64 rng(8104);
  int done = 0;
  while (done < 150) {
    auto p = random_weak(rng, 6);
    if (p.arity() < 3)
      continue;
    ++done;
    int n = p.arity();
    std::uniform_int_distribution<int> to_dist(2, n);
    int to = to_dist(rng);
    std::uniform_int_distribution<int> value(1, to);
    std::vector<int> map(n);
    for (int& v : map)
      v = value(rng);
    // Pick two coordinates and force singleton preimages onto fresh
    // targets so the map leaves them untouched.
    std::uniform_int_distribution<int> coord(1, n);
    int i = coord(rng), j = coord(rng);
    if (i == j)
      continue;
    int extended = to;
    map[i - 1] = ++extended;
    map[j - 1] = ++extended;
    MinorMap pi(n, extended, map);
    auto pre = compute_preorder(truth_table(p));
    auto minor_pre = compute_preorder(truth_table(presentation_minor(p, pi)));
    if (pre.less(i, j))
      CHECK(minor_pre.less(pi(i), pi(j)));
    if (pre.less(j, i))
      CHECK(minor_pre.less(pi(j), pi(i)));
  }
}

#include <doctest.h>

#include <random>
#include <set>

#include "pcsp/ltf.hpp"
#include "pcsp/minions.hpp"

using namespace pcsp;

namespace {

LtfPresentation weak(std::vector<Rational> w, Rational t) {
  return LtfPresentation(std::move(w), std::move(t), LtfForm::Weak);
}

LtfPresentation strict(std::vector<Rational> w, Rational t) {
  return LtfPresentation(std::move(w), std::move(t), LtfForm::Strict);
}

/// Brute-force achievable sums, independent of SubsetSums.
std::set<Rational> sums_oracle(const std::vector<Rational>& w) {
  std::set<Rational> sums;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((mask >> i) & 1)
        s += w[i];
    sums.insert(s);
  }
  return sums;
}

LtfPresentation random_presentation(std::mt19937_64& rng, int max_arity) {
  std::uniform_int_distribution<int> arity_dist(1, max_arity);
  std::uniform_int_distribution<int> weight_dist(-8, 8);
  std::uniform_int_distribution<int> den_dist(1, 4);
  int arity = arity_dist(rng);
  std::vector<Rational> w;
  for (int i = 0; i < arity; ++i)
    w.emplace_back(weight_dist(rng), den_dist(rng));
  Rational t(weight_dist(rng), 2 * den_dist(rng));
  return weak(std::move(w), std::move(t));
}

MinorMap random_map(std::mt19937_64& rng, int from, int to) {
  std::uniform_int_distribution<int> dist(1, to);
  std::vector<int> values(from);
  for (int& v : values)
    v = dist(rng);
  return MinorMap(from, to, values);
}

} // namespace

TEST_CASE("evaluate weak and strict presentations") {
  auto p = weak({1, 2, -2}, 0);
  CHECK(evaluate(p, {0, 0, 1}) == 0);
  CHECK(evaluate(p, {1, 1, 0}) == 1);

  auto half = strict({Rational(1, 2), Rational(1, 2)}, 0);
  CHECK_FALSE(evaluate(half, {0, 0}).has_value());
  CHECK(evaluate(half, {1, 0}) == 1);

  CHECK(evaluate(weak({1}, 0), {1}) == 1);
  CHECK_THROWS_AS(evaluate(p, {0, 1}), ParameterError);
}

TEST_CASE("convert_form picks the midpoint threshold") {
  auto p = weak({1, 2, -2}, 0);
  auto sums = sums_oracle(p.weights);
  CHECK(sums == std::set<Rational>{-2, -1, 0, 1, 2, 3});

  auto s = convert_form(p, LtfForm::Strict);
  CHECK(s.form == LtfForm::Strict);
  CHECK(s.threshold == Rational(1, 2)); // midpoint of 0 and 1
  CHECK(truth_table(s) == truth_table(p));

  CHECK(convert_form(weak({1}, 0), LtfForm::Strict).threshold ==
        Rational(1, 2));
  // Constant zero: no achievable sum above t, so max + 1.
  CHECK(convert_form(weak({1}, 1), LtfForm::Strict).threshold == Rational(2));

  CHECK_THROWS_AS(convert_form(strict({1, 1}, 1), LtfForm::Weak),
                  TotalityError);
}

TEST_CASE("form conversion round-trips the truth table") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_presentation(rng, 8);
    auto s = convert_form(p, LtfForm::Strict);
    auto back = convert_form(s, LtfForm::Weak);
    CHECK(truth_table(p) == truth_table(s));
    CHECK(truth_table(back) == truth_table(p));
  }
}

TEST_CASE("presentation_minor merges weights") {
  auto p = weak({1, 2, -2, 4, -4}, 0);
  auto merged = presentation_minor(p, MinorMap(5, 4, {1, 2, 3, 4, 4}));
  CHECK(merged.weights == std::vector<Rational>{1, 2, -2, 0});
  CHECK(merged.threshold == 0);

  CHECK(presentation_minor(p, MinorMap::identity(5)) == p);

  auto forced = presentation_minor(weak({1, 2, -2}, 0),
                                   MinorMap(3, 2, {1, 2, 1}));
  CHECK(forced.weights == std::vector<Rational>{-1, 2});
}

TEST_CASE("scale examples and invariance") {
  auto p = weak({1, 2, -2}, 0);
  CHECK(scale(p, 2).weights == std::vector<Rational>{2, 4, -4});
  auto thirds = weak({Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                     Rational(1, 2));
  auto scaled = scale(thirds, 3);
  CHECK(scaled.weights == std::vector<Rational>{1, 1, 1});
  CHECK(scaled.threshold == Rational(3, 2));
  CHECK(scale(p, 1) == p);
  CHECK_THROWS_AS(scale(p, 0), ParameterError);
  CHECK_THROWS_AS(scale(p, -2), ParameterError);

  std::mt19937_64 rng(7002);
  std::uniform_int_distribution<int> num(1, 12), den(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    auto q = random_presentation(rng, 10);
    Rational c(num(rng), den(rng));
    CHECK(truth_table(scale(q, c)) == truth_table(q));
  }
}

TEST_CASE("truth_table matches hand arithmetic") {
  auto p = weak({1, 2, -2}, 0);
  auto table = truth_table(p);
  // Independent oracle: dot products computed inline.
  std::vector<Rational> w = p.weights;
  for (std::uint32_t x = 0; x < 8; ++x) {
    Rational sum = 0;
    for (int i = 0; i < 3; ++i)
      if ((x >> i) & 1)
        sum += w[i];
    CHECK(table.eval(x) == (sum > 0 ? 1 : 0));
  }
  // Ones exactly on 100, 010, 110, 111 (coordinate order x1 x2 x3).
  CHECK(table.table == std::vector<std::uint8_t>{0, 1, 1, 1, 0, 0, 0, 1});

  CHECK(truth_table(weak({1}, 0)).table == std::vector<std::uint8_t>{0, 1});
  CHECK(truth_table(weak({1, 1}, 2)).table ==
        std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(truth_table(strict({1, 1}, 1)), TotalityError);
}

TEST_CASE("minor commutation between presentations and tables") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_presentation(rng, 8);
    std::uniform_int_distribution<int> to_dist(1, 8);
    auto pi = random_map(rng, p.arity(), to_dist(rng));
    CHECK(truth_table(presentation_minor(p, pi)) ==
          truth_table(p).minor(pi));
  }
}

TEST_CASE("ltf_digest agrees with the materialized table") {
  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_presentation(rng, 9);
    CHECK(ltf_digest(p) == truth_table(p).digest());
  }
}

TEST_CASE("monotonicity classification") {
  auto table = truth_table(weak({1, 2, -2}, 0));
  CHECK(monotonicity(table, 1) == Monotonicity::Monotone);
  CHECK(monotonicity(table, 3) == Monotonicity::Antimonotone);

  BooleanFunction constant(2, {0, 0, 0, 0});
  CHECK(monotonicity(constant, 1) == Monotonicity::Both);
  CHECK(monotonicity(constant, 2) == Monotonicity::Both);

  BooleanFunction identity(1, {0, 1});
  CHECK(monotonicity(identity, 1) == Monotonicity::Monotone);

  BooleanFunction parity(2, {0, 1, 1, 0});
  CHECK_THROWS_AS(monotonicity(parity, 1), InvariantError);
}

TEST_CASE("fixing pairs") {
  auto ternary = truth_table(weak({1, 2, -2}, 0));
  auto pairs = find_fixing_pairs(ternary);
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair<int, int>(2, 3)) !=
        pairs.end());

  BooleanFunction proj1(2, {0, 1, 0, 1});
  auto proj_pairs = find_fixing_pairs(proj1);
  CHECK(std::find(proj_pairs.begin(), proj_pairs.end(),
                  std::pair<int, int>(1, 2)) != proj_pairs.end());

  auto majority = truth_table(weak({1, 1, 1}, Rational(3, 2)));
  CHECK(find_fixing_pairs(majority).empty());
}

TEST_CASE("presentation fixing pairs agree with the table route") {
  std::mt19937_64 rng(7005);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = random_presentation(rng, 7);
    if (p.arity() < 2)
      continue;
    CHECK(find_fixing_pairs(p) == find_fixing_pairs(truth_table(p)));
  }
}

TEST_CASE("no function has two disjoint fixing pairs") {
  // Exhaustive at arity 4.
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    std::vector<std::uint8_t> table(16);
    for (int i = 0; i < 16; ++i)
      table[i] = (bits >> i) & 1;
    auto pairs = find_fixing_pairs(BooleanFunction(4, table));
    for (const auto& [i1, j1] : pairs)
      for (const auto& [i2, j2] : pairs) {
        bool disjoint = i1 != i2 && i1 != j2 && j1 != i2 && j1 != j2;
        CHECK_FALSE(disjoint);
      }
  }
}

TEST_CASE("fixing pairs persist under injective minors") {
  std::mt19937_64 rng(7006);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> m_dist(1, 4);
    auto gen = st_generator(m_dist(rng));
    std::uniform_int_distribution<int> to_dist(2, gen.arity());
    auto pi = random_map(rng, gen.arity(), to_dist(rng));
    auto p = presentation_minor(gen, pi);
    if (p.arity() < 2)
      continue;
    auto f = truth_table(p);
    auto pairs = find_fixing_pairs(f);
    for (const auto& [i, j] : pairs) {
      std::uniform_int_distribution<int> target_dist(2, p.arity());
      auto sigma = random_map(rng, p.arity(), target_dist(rng));
      if (!sigma.injective_on({i, j}))
        continue;
      auto minor_pairs = find_fixing_pairs(f.minor(sigma));
      std::pair<int, int> image{sigma(i), sigma(j)};
      CHECK(std::find(minor_pairs.begin(), minor_pairs.end(), image) !=
            minor_pairs.end());
    }
  }
}

TEST_CASE("minor map properties") {
  auto gen = st_generator(2); // (1, 2, -2, 4, -4 | 0)
  auto props = minor_map_properties(MinorMap::identity(5), gen, {4, 5});
  CHECK(props.injective_on);
  CHECK(props.covered_by);
  CHECK(props.dominating);

  CHECK_FALSE(minor_map_properties(MinorMap::identity(5), gen, {1})
                  .dominating);

  auto merged = minor_map_properties(MinorMap(5, 4, {1, 2, 3, 4, 4}), gen,
                                     {4, 5});
  CHECK_FALSE(merged.injective_on);
}

#include <doctest.h>

#include <random>

#include "pcsp/minions.hpp"
#include "pcsp/tuple_minion.hpp"

using namespace pcsp;

namespace {

LtfPresentation weak(std::vector<Rational> w, Rational t) {
  return LtfPresentation(std::move(w), std::move(t), LtfForm::Weak);
}

} // namespace

TEST_CASE("grouping examples") {
  auto quarters = grouping({Rational(1, 4), Rational(1, 4), Rational(1, 4),
                            Rational(1, 4)},
                           4, Rational(1, 4));
  CHECK(quarters.map == std::vector<int>{1, 2, 3, 4});

  auto tenths = grouping({Rational(3, 10), Rational(3, 10), Rational(1, 5),
                          Rational(1, 5)},
                         2, Rational(3, 10));
  CHECK(tenths.map == std::vector<int>{1, 2, 1, 2});

  auto singleton = grouping({Rational(1)}, 1, Rational(1));
  CHECK(singleton.map == std::vector<int>{1});

  CHECK_THROWS_AS(grouping({Rational(1, 2)}, 2, Rational(1, 4)),
                  ParameterError);
  CHECK_THROWS_AS(grouping({Rational(-1, 4), Rational(1)}, 2, Rational(1, 2)),
                  ParameterError);
}

TEST_CASE("grouping postcondition on random inputs") {
  std::mt19937_64 rng(9201);
  std::uniform_int_distribution<int> eps_num(1, 8);
  std::uniform_int_distribution<int> m_dist(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    Rational eps(eps_num(rng), 8);
    std::vector<Rational> items;
    Rational total = 0;
    std::uniform_int_distribution<int> step(1, 8);
    while (total < 1 - eps) {
      Rational item = eps * Rational(step(rng), 8);
      if (total + item > Rational(1) + eps)
        item = Rational(1) + eps - total;
      if (item == 0)
        break;
      items.push_back(item);
      total += item;
    }
    if (items.empty())
      items.push_back(std::min(eps, Rational(1)));
    int m = m_dist(rng);
    auto pi = grouping(items, m, eps);
    std::vector<Rational> bins(m, Rational(0));
    for (std::size_t i = 0; i < items.size(); ++i)
      bins[pi(static_cast<int>(i) + 1) - 1] += items[i];
    for (const auto& bin : bins)
      CHECK(rational_abs(Rational(1, m) - bin) <= eps);
  }
}

TEST_CASE("threshold-target approximation merges exactly at matching sizes") {
  auto p = weak(std::vector<Rational>(6, Rational(1, 6)), Rational(1, 2));
  ThresholdTarget target{3, Rational(1), Rational(1, 2)};
  auto result = approximate_generator(p, target, Rational(1, 6));
  REQUIRE_FALSE(result.constant);
  CHECK(result.tuple->weights ==
        std::vector<Rational>(3, Rational(1, 3)));
  CHECK(result.tuple->threshold == Rational(1, 2));
  CHECK(result.distance == 0);
}

TEST_CASE("alternating-target approximation stays within eps") {
  auto p = weak({Rational(1, 4), Rational(1, 4), Rational(1, 4),
                 Rational(1, 4), Rational(-1, 2), Rational(1, 2)},
                Rational(0));
  auto result =
      approximate_generator(p, AlternatingTarget{2}, Rational(1, 2));
  REQUIRE_FALSE(result.constant);
  CHECK(result.tuple->arity() == 3);
  // Distance measured against (1/2, 1/2, -1 | 0).
  LtfPresentation goal({Rational(1, 2), Rational(1, 2), Rational(-1)},
                       Rational(0), LtfForm::Weak);
  CHECK(linf_distance(*result.tuple, goal) <= Rational(1, 2));
  CHECK(result.distance <= Rational(1, 2));
}

TEST_CASE("constant inputs are reported, not constructed") {
  auto p = weak(std::vector<Rational>(6, Rational(1, 6)), Rational(2));
  auto result = approximate_generator(
      p, ThresholdTarget{3, Rational(1), Rational(1, 2)}, Rational(1, 6));
  CHECK(result.constant);
  CHECK_FALSE(result.tuple.has_value());
}

TEST_CASE("approximation preconditions are enforced") {
  auto p = weak(std::vector<Rational>(6, Rational(1, 6)), Rational(1, 4));
  // |t - T| = 1/4 > S*eps = 1/12.
  CHECK_THROWS_AS(approximate_generator(
                      p, ThresholdTarget{3, Rational(1), Rational(1, 2)},
                      Rational(1, 12)),
                  ParameterError);
}

TEST_CASE("domination propagation") {
  auto small = st_generator(2);
  CHECK(domination_propagates(small, MinorMap::identity(5), {4, 5},
                              Rational(1), nullptr));

  auto gen = st_generator(4); // (1, 2, -2, 4, -4, 8, -8, 16, -16 | 0)
  MinorMap merge_into_image(9, 5, {1, 2, 2, 3, 3, 2, 3, 4, 5});
  CHECK(domination_propagates(gen, merge_into_image, {6, 7, 8, 9},
                              Rational(1, 2), nullptr));

  // Merging outside the image breaks the covered-by hypothesis.
  MinorMap outside(9, 6, {1, 2, 2, 3, 3, 4, 5, 6, 6});
  CHECK_THROWS_AS(domination_propagates(gen, outside, {6, 7},
                                        Rational(1), nullptr),
                  ParameterError);

  // |I| below 2/eps.
  CHECK_THROWS_AS(domination_propagates(small, MinorMap::identity(5), {4, 5},
                                        Rational(1, 2), nullptr),
                  ParameterError);

  // Membership oracle veto.
  auto reject = [](const LtfPresentation&) { return false; };
  CHECK_THROWS_AS(domination_propagates(small, MinorMap::identity(5), {4, 5},
                                        Rational(1), reject),
                  ParameterError);
}

#include <doctest.h>

#include <random>

#include "blp_testing.hpp"
#include "pcsp/blp.hpp"
#include "pcsp/ltf.hpp"

using namespace pcsp;
using pcsp::testing::random_one_in_three;

namespace {

BooleanStructure one_in_three_template() {
  return BooleanStructure{{make_relation(RelationKind::KInL, 1, 3)}};
}

BooleanStructure closure_template() {
  auto maj3 = truth_table(LtfPresentation({1, 1, 1}, Rational(3, 2),
                                          LtfForm::Weak));
  auto maj5 = truth_table(LtfPresentation(std::vector<Rational>(5, 1),
                                          Rational(5, 2), LtfForm::Weak));
  return BooleanStructure{{close_relation(
      make_relation(RelationKind::KInL, 1, 3), {maj3, maj5})}};
}

} // namespace

TEST_CASE("solve_lp on boxes and contradictions") {
  RationalLP box;
  box.variable_count = 1;
  box.nonnegative = {true};
  box.constraints = {{{Rational(1)}, LinRelation::LessEq, Rational(1)}};
  auto solution = solve_lp(box);
  REQUIRE(solution.feasible());
  CHECK(solution.assignment[0] >= 0);
  CHECK(solution.assignment[0] <= 1);

  RationalLP contradictory;
  contradictory.variable_count = 1;
  contradictory.nonnegative = {true};
  contradictory.constraints = {
      {{Rational(1)}, LinRelation::LessEq, Rational(0)},
      {{Rational(1)}, LinRelation::GreaterEq, Rational(1)}};
  CHECK_FALSE(solve_lp(contradictory).feasible());

  // Free variables pick up negative values through equalities.
  RationalLP free_var;
  free_var.variable_count = 1;
  free_var.constraints = {
      {{Rational(2)}, LinRelation::Equal, Rational(-3)}};
  auto negative = solve_lp(free_var);
  REQUIRE(negative.feasible());
  CHECK(negative.assignment[0] == Rational(-3, 2));
}

TEST_CASE("build_blp shapes") {
  auto tmpl = one_in_three_template();
  Instance inst;
  inst.variable_count = 3;
  inst.constraints = {{{1, 2, 3}, 1}};
  auto blp = build_blp(inst, tmpl);
  CHECK_FALSE(blp.infeasible_by_construction);
  CHECK(blp.lp.variable_count == 6); // 3 instance vars + 3 hull weights
  // 3 box rows + 1 convexity row + 3 coupling rows.
  CHECK(blp.lp.constraints.size() == 7);

  Instance loose;
  loose.variable_count = 2;
  auto boxes_only = build_blp(loose, tmpl);
  CHECK(boxes_only.lp.constraints.size() == 2);

  // A singleton relation pins its scope.
  BooleanStructure singleton{{BooleanRelation(2, {0b10})}};
  Instance forced;
  forced.variable_count = 2;
  forced.constraints = {{{1, 2}, 1}};
  auto lp = build_blp(forced, singleton);
  auto solution = solve_lp(lp.lp);
  REQUIRE(solution.feasible());
  CHECK(solution.assignment[0] == 0);
  CHECK(solution.assignment[1] == 1);

  // Empty relations mark the relaxation infeasible by construction.
  BooleanStructure empty{{BooleanRelation(2, {})}};
  CHECK(build_blp(forced, empty).infeasible_by_construction);
}

TEST_CASE("fixing the first variable") {
  auto tmpl = one_in_three_template();
  Instance inst;
  inst.variable_count = 3;
  inst.constraints = {{{1, 2, 3}, 1}};
  auto blp = build_blp(inst, tmpl);
  auto solution = solve_blp_with_fixing(blp, 0);
  REQUIRE(solution.feasible());
  CHECK(solution.assignment[0] == 0);
  CHECK(solution.assignment[1] + solution.assignment[2] == 1);
}

TEST_CASE("round_search on the closure template") {
  auto a = one_in_three_template();
  auto b = closure_template();
  REQUIRE(b.relations[0].tuples.size() == 4); // 1-in-3 plus the zero tuple

  Instance inst;
  inst.variable_count = 3;
  inst.constraints = {{{1, 2, 3}, 1}};
  auto h = round_search(inst, a, b);
  REQUIRE(h.has_value());
  CHECK(is_homomorphism(*h, inst, b));
}

TEST_CASE("round_search respects forced and impossible instances") {
  BooleanStructure force_one{{BooleanRelation(1, {1})}};
  Instance inst;
  inst.variable_count = 1;
  inst.constraints = {{{1}, 1}};
  auto h = round_search(inst, force_one, force_one);
  REQUIRE(h.has_value());
  CHECK((*h)[0] == 1);

  BooleanStructure two_unary{{BooleanRelation(1, {0}),
                              BooleanRelation(1, {1})}};
  Instance contradictory;
  contradictory.variable_count = 1;
  contradictory.constraints = {{{1}, 1}, {{1}, 2}};
  CHECK_FALSE(round_search(contradictory, two_unary, two_unary).has_value());
}

TEST_CASE("round_search solves random satisfiable instances") {
  auto a = one_in_three_template();
  auto b = closure_template();
  std::mt19937_64 rng(9601);
  for (int trial = 0; trial < 25; ++trial) {
    auto planted = random_one_in_three(rng, 12);
    REQUIRE(is_homomorphism(planted.planted, planted.instance, a));
    auto h = round_search(planted.instance, a, b);
    REQUIRE(h.has_value());
    CHECK(is_homomorphism(*h, planted.instance, b));
  }
}

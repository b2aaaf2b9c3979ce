#include "pcsp/blp.hpp"

#include <algorithm>

namespace pcsp {

BlpRelaxation build_blp(const Instance& inst, const BooleanStructure& a) {
  inst.validate_against(a);
  BlpRelaxation out;
  out.instance_variables = inst.variable_count;

  int vars = inst.variable_count;
  std::vector<std::pair<int, int>> alpha_range; // per constraint
  for (const auto& constraint : inst.constraints) {
    const auto& rel = a.relations[constraint.relation - 1];
    if (rel.tuples.empty()) {
      out.infeasible_by_construction = true;
      return out;
    }
    alpha_range.emplace_back(vars,
                             vars + static_cast<int>(rel.tuples.size()));
    vars += static_cast<int>(rel.tuples.size());
  }

  RationalLP& lp = out.lp;
  lp.variable_count = vars;
  lp.nonnegative.assign(vars, true);
  auto row = [&](std::vector<Rational> coeffs, LinRelation rel,
                 Rational bound) {
    lp.constraints.push_back({std::move(coeffs), rel, std::move(bound)});
  };

  // 0 <= x_v <= 1 (the lower bound is native).
  for (int v = 0; v < inst.variable_count; ++v) {
    std::vector<Rational> coeffs(vars, Rational(0));
    coeffs[v] = 1;
    row(std::move(coeffs), LinRelation::LessEq, Rational(1));
  }
  for (std::size_t c = 0; c < inst.constraints.size(); ++c) {
    const auto& constraint = inst.constraints[c];
    const auto& rel = a.relations[constraint.relation - 1];
    auto [alpha_begin, alpha_end] = alpha_range[c];
    // sum alpha = 1
    {
      std::vector<Rational> coeffs(vars, Rational(0));
      for (int col = alpha_begin; col < alpha_end; ++col)
        coeffs[col] = 1;
      row(std::move(coeffs), LinRelation::Equal, Rational(1));
    }
    // x_{v_j} = sum over tuples y of alpha_y * y_j
    for (std::size_t j = 0; j < constraint.scope.size(); ++j) {
      std::vector<Rational> coeffs(vars, Rational(0));
      coeffs[constraint.scope[j] - 1] = 1;
      for (std::size_t y = 0; y < rel.tuples.size(); ++y)
        if ((rel.tuples[y] >> j) & 1)
          coeffs[alpha_begin + y] = -1;
      row(std::move(coeffs), LinRelation::Equal, Rational(0));
    }
  }
  return out;
}

LPSolution solve_blp_with_fixing(const BlpRelaxation& blp, int fixed_value) {
  if (blp.infeasible_by_construction)
    return LPSolution{};
  if (fixed_value != 0 && fixed_value != 1)
    throw ParameterError("fixing value must be 0 or 1");
  RationalLP lp = blp.lp;
  std::vector<Rational> coeffs(lp.variable_count, Rational(0));
  coeffs[0] = 1;
  lp.constraints.push_back(
      {std::move(coeffs), LinRelation::Equal, Rational(fixed_value)});
  return solve_lp(lp);
}

std::optional<std::vector<int>>
round_search(const Instance& inst, const BooleanStructure& a,
             const BooleanStructure& b) {
  if (!a.similar_to(b))
    throw StructuralError("template structures must be similar");
  inst.validate_against(a);
  inst.validate_against(b);

  BlpRelaxation blp = build_blp(inst, a);
  if (blp.infeasible_by_construction)
    return std::nullopt;
  LPSolution solution = solve_blp_with_fixing(blp, 0);
  if (!solution.feasible())
    solution = solve_blp_with_fixing(blp, 1);
  if (!solution.feasible())
    return std::nullopt;

  std::vector<Rational> w(solution.assignment.begin(),
                          solution.assignment.begin() +
                              inst.variable_count);
  std::vector<Rational> candidates;
  candidates.push_back(Rational(0));
  for (const auto& value : w)
    candidates.push_back(value);

  for (const auto& q : candidates) {
    for (bool strict : {true, false}) {
      std::vector<int> h(inst.variable_count);
      for (int v = 0; v < inst.variable_count; ++v)
        h[v] = strict ? (w[v] > q ? 1 : 0) : (w[v] >= q ? 1 : 0);
      if (is_homomorphism(h, inst, b))
        return h;
    }
  }
  return std::nullopt;
}

} // namespace pcsp

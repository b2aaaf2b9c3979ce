#include "pcsp/lp.hpp"

#include <string>

namespace pcsp {

void RationalLP::validate() const {
  if (variable_count < 0)
    throw ParameterError("variable count must be nonnegative");
  if (!nonnegative.empty() &&
      static_cast<int>(nonnegative.size()) != variable_count)
    throw ParameterError("nonnegative flags must cover every variable");
  for (const auto& c : constraints)
    if (static_cast<int>(c.coeffs.size()) != variable_count)
      throw ParameterError("constraint width must equal the variable count");
}

namespace {

bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (c.coeffs[i] != 0)
      lhs += c.coeffs[i] * x[i];
  switch (c.relation) {
  case LinRelation::LessEq:
    return lhs <= c.bound;
  case LinRelation::Equal:
    return lhs == c.bound;
  case LinRelation::GreaterEq:
    return lhs >= c.bound;
  }
  return false;
}

} // namespace

LPSolution solve_lp(const RationalLP& lp) {
  lp.validate();
  int n = lp.variable_count;
  auto is_nonneg = [&](int v) {
    return !lp.nonnegative.empty() && lp.nonnegative[v];
  };

  // Column layout: one column per nonnegative variable, two (plus/minus)
  // per free variable, then one slack per inequality row.
  std::vector<int> col_of_var(n, -1);
  std::vector<int> neg_col_of_var(n, -1);
  int cols = 0;
  for (int v = 0; v < n; ++v) {
    col_of_var[v] = cols++;
    if (!is_nonneg(v))
      neg_col_of_var[v] = cols++;
  }
  int m = static_cast<int>(lp.constraints.size());
  int slack_base = cols;
  for (const auto& c : lp.constraints)
    if (c.relation != LinRelation::Equal)
      ++cols;

  // Rows with b normalized >= 0; artificial columns appended afterwards.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(m, 0);
  std::vector<int> basis(m, -1);
  {
    int slack = slack_base;
    for (int r = 0; r < m; ++r) {
      const auto& c = lp.constraints[r];
      Rational sign = 1;
      if (c.bound < 0)
        sign = -1;
      for (int v = 0; v < n; ++v) {
        a[r][col_of_var[v]] = sign * c.coeffs[v];
        if (neg_col_of_var[v] >= 0)
          a[r][neg_col_of_var[v]] = -sign * c.coeffs[v];
      }
      b[r] = sign * c.bound;
      if (c.relation != LinRelation::Equal) {
        Rational dir = c.relation == LinRelation::LessEq ? 1 : -1;
        a[r][slack] = sign * dir;
        if (a[r][slack] == 1)
          basis[r] = slack;
        ++slack;
      }
    }
  }
  int artificial_base = cols;
  for (int r = 0; r < m; ++r)
    if (basis[r] < 0) {
      for (auto& row : a)
        row.push_back(0);
      a[r][cols] = 1;
      basis[r] = cols;
      ++cols;
    }

  // Phase-one objective row: w = sum of artificial values, expressed in
  // the nonbasic variables. Reduce w by pivoting while any nonartificial
  // column has a positive coefficient (Bland's rule on both choices).
  std::vector<Rational> w(cols, 0);
  Rational w_value = 0;
  for (int r = 0; r < m; ++r)
    if (basis[r] >= artificial_base) {
      for (int j = 0; j < cols; ++j)
        if (j != basis[r])
          w[j] += a[r][j];
      w_value += b[r];
    }

  while (true) {
    int entering = -1;
    for (int j = 0; j < artificial_base && entering < 0; ++j)
      if (w[j] > 0)
        entering = j;
    if (entering < 0)
      break;
    int leaving = -1;
    Rational best_ratio = 0;
    for (int r = 0; r < m; ++r) {
      if (a[r][entering] <= 0)
        continue;
      Rational ratio = b[r] / a[r][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      throw InvariantError("phase-one objective unbounded");
    // Pivot on (leaving, entering).
    Rational pivot = a[leaving][entering];
    for (int j = 0; j < cols; ++j)
      a[leaving][j] /= pivot;
    b[leaving] /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leaving || a[r][entering] == 0)
        continue;
      Rational factor = a[r][entering];
      for (int j = 0; j < cols; ++j)
        a[r][j] -= factor * a[leaving][j];
      b[r] -= factor * b[leaving];
    }
    if (w[entering] != 0) {
      Rational factor = w[entering];
      for (int j = 0; j < cols; ++j)
        w[j] -= factor * a[leaving][j];
      w_value -= factor * b[leaving];
    }
    basis[leaving] = entering;
  }

  LPSolution solution;
  if (w_value != 0) {
    solution.status = LPSolution::Status::Infeasible;
    return solution;
  }
  std::vector<Rational> column_value(cols, 0);
  for (int r = 0; r < m; ++r)
    column_value[basis[r]] = b[r];
  solution.assignment.resize(n);
  for (int v = 0; v < n; ++v) {
    solution.assignment[v] = column_value[col_of_var[v]];
    if (neg_col_of_var[v] >= 0)
      solution.assignment[v] -= column_value[neg_col_of_var[v]];
  }
  for (const auto& c : lp.constraints)
    if (!satisfies(c, solution.assignment))
      throw InvariantError("simplex produced an infeasible point");
  solution.status = LPSolution::Status::Feasible;
  return solution;
}

} // namespace pcsp

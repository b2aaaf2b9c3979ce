#include "pcsp/boolean.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "pcsp/minor_map.hpp"

namespace pcsp {

namespace {

constexpr int kMaxRelationArity = 24;

void check_relation_arity(int arity) {
  if (arity < 1)
    throw ParameterError("relation arity must be positive");
  if (arity > kMaxRelationArity)
    throw CapacityError("relation arity " + std::to_string(arity) +
                        " above cap " + std::to_string(kMaxRelationArity));
}

std::uint32_t pack_bits(const std::vector<int>& bits) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i])
      mask |= 1u << i;
  return mask;
}

} // namespace

BooleanRelation::BooleanRelation(int a, std::vector<std::uint32_t> t)
    : arity(a), tuples(std::move(t)) {
  check_relation_arity(arity);
  for (std::uint32_t tuple : tuples)
    if (arity < 32 && (tuple >> arity) != 0)
      throw ParameterError("relation tuple has bits beyond its arity");
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

bool BooleanRelation::contains(std::uint32_t tuple) const {
  return std::binary_search(tuples.begin(), tuples.end(), tuple);
}

std::vector<int> BooleanStructure::signature() const {
  std::vector<int> arities;
  arities.reserve(relations.size());
  for (const auto& r : relations)
    arities.push_back(r.arity);
  return arities;
}

bool BooleanStructure::similar_to(const BooleanStructure& other) const {
  return signature() == other.signature();
}

void Instance::validate_against(const BooleanStructure& tmpl) const {
  if (variable_count < 1)
    throw StructuralError("instance must have at least one variable");
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto& constraint = constraints[c];
    if (constraint.relation < 1 ||
        constraint.relation > static_cast<int>(tmpl.relations.size()))
      throw StructuralError("constraint " + std::to_string(c + 1) +
                            " references relation " +
                            std::to_string(constraint.relation) +
                            " outside the template signature");
    const auto& rel = tmpl.relations[constraint.relation - 1];
    if (static_cast<int>(constraint.scope.size()) != rel.arity)
      throw StructuralError("constraint " + std::to_string(c + 1) +
                            " scope length does not match relation arity");
    for (int v : constraint.scope)
      if (v < 1 || v > variable_count)
        throw StructuralError("constraint " + std::to_string(c + 1) +
                              " uses variable " + std::to_string(v) +
                              " outside [1, " +
                              std::to_string(variable_count) + "]");
  }
}

BooleanFunction::BooleanFunction(int a, std::vector<std::uint8_t> t)
    : arity(a), table(std::move(t)) {
  if (arity < 1)
    throw ParameterError("function arity must be positive");
  if (table.size() != (std::size_t{1} << arity))
    throw ParameterError("truth table length must be 2^arity");
  for (auto v : table)
    if (v > 1)
      throw ParameterError("truth table entries must be 0 or 1");
}

bool BooleanFunction::is_idempotent() const {
  return table.front() == 0 && table.back() == 1;
}

bool BooleanFunction::is_projection(int* coordinate) const {
  for (int i = 0; i < arity; ++i) {
    bool matches = true;
    for (std::size_t x = 0; x < table.size(); ++x)
      if (table[x] != ((x >> i) & 1)) {
        matches = false;
        break;
      }
    if (matches) {
      if (coordinate)
        *coordinate = i + 1;
      return true;
    }
  }
  return false;
}

bool BooleanFunction::is_folded() const {
  std::size_t full = table.size() - 1;
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x] != 1 - table[full ^ x])
      return false;
  return true;
}

BooleanFunction BooleanFunction::minor(const MinorMap& pi) const {
  if (pi.from_arity != arity)
    throw ParameterError("minor map domain does not match function arity");
  std::vector<std::uint8_t> result(std::size_t{1} << pi.to_arity);
  for (std::size_t y = 0; y < result.size(); ++y) {
    std::uint32_t x = 0;
    for (int i = 1; i <= arity; ++i)
      if ((y >> (pi(i) - 1)) & 1)
        x |= 1u << (i - 1);
    result[y] = table[x];
  }
  return BooleanFunction(pi.to_arity, std::move(result));
}

BooleanFunction BooleanFunction::unary_minor() const {
  std::vector<int> all_ones(arity, 1);
  return minor(MinorMap(arity, 1, all_ones));
}

std::string BooleanFunction::digest() const {
  static const char* hex = "0123456789abcdef";
  std::string out = std::to_string(arity) + ":";
  int nibble = 0;
  int filled = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    nibble |= table[x] << filled;
    if (++filled == 4) {
      out += hex[nibble];
      nibble = 0;
      filled = 0;
    }
  }
  if (filled)
    out += hex[nibble];
  return out;
}

BooleanRelation make_relation(RelationKind kind, int k, int l) {
  switch (kind) {
  case RelationKind::Nae: {
    if (k < 1)
      throw ParameterError("NAE arity must be positive");
    check_relation_arity(k);
    std::vector<std::uint32_t> tuples;
    std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    for (std::uint32_t t = 0; t <= full; ++t)
      if (t != 0 && t != full)
        tuples.push_back(t);
    return BooleanRelation(k, std::move(tuples));
  }
  case RelationKind::KInL: {
    if (k < 0 || l < 1 || k > l)
      throw ParameterError("k-in-l requires 0 <= k <= l");
    check_relation_arity(l);
    std::vector<std::uint32_t> tuples;
    for (std::uint32_t t = 0; t < (1u << l); ++t)
      if (std::popcount(t) == k)
        tuples.push_back(t);
    return BooleanRelation(l, std::move(tuples));
  }
  case RelationKind::BuiltinR: {
    // Columns of the 6x5 display, read top to bottom.
    std::vector<std::vector<int>> columns = {
        {1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {1, 1, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    std::vector<std::uint32_t> tuples;
    for (const auto& col : columns)
      tuples.push_back(pack_bits(col));
    return BooleanRelation(6, std::move(tuples));
  }
  case RelationKind::Builtin2In4:
    return make_relation(RelationKind::KInL, 2, 4);
  }
  throw ParameterError("unknown relation kind");
}

BooleanStructure make_stl() {
  return BooleanStructure{{make_relation(RelationKind::BuiltinR),
                           make_relation(RelationKind::Builtin2In4)}};
}

BooleanStructure make_str() {
  return BooleanStructure{{make_relation(RelationKind::Nae, 6),
                           make_relation(RelationKind::Nae, 4)}};
}

bool is_homomorphism(const std::vector<int>& h, const Instance& inst,
                     const BooleanStructure& target) {
  inst.validate_against(target);
  if (static_cast<int>(h.size()) != inst.variable_count)
    throw StructuralError("assignment must be total on the variables");
  for (int v : h)
    if (v != 0 && v != 1)
      throw StructuralError("assignment values must be 0 or 1");
  for (const auto& constraint : inst.constraints) {
    const auto& rel = target.relations[constraint.relation - 1];
    std::uint32_t image = 0;
    for (std::size_t j = 0; j < constraint.scope.size(); ++j)
      if (h[constraint.scope[j] - 1])
        image |= 1u << j;
    if (!rel.contains(image))
      return false;
  }
  return true;
}

bool is_polymorphism(const BooleanFunction& f, const BooleanStructure& a,
                     const BooleanStructure& b) {
  if (!a.similar_to(b))
    throw StructuralError("structures must be similar");
  int n = f.arity;
  for (std::size_t r = 0; r < a.relations.size(); ++r) {
    const auto& ra = a.relations[r];
    const auto& rb = b.relations[r];
    if (ra.tuples.empty())
      continue;
    std::size_t count = ra.tuples.size();
    // Odometer over all n-element choices of tuples from ra.
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::uint32_t image = 0;
      for (int j = 0; j < ra.arity; ++j) {
        std::uint32_t input = 0;
        for (int i = 0; i < n; ++i)
          if ((ra.tuples[pick[i]] >> j) & 1)
            input |= 1u << i;
        if (f.eval(input))
          image |= 1u << j;
      }
      if (!rb.contains(image))
        return false;
      int pos = 0;
      while (pos < n && ++pick[pos] == count) {
        pick[pos] = 0;
        ++pos;
      }
      if (pos == n)
        break;
    }
  }
  return true;
}

BooleanRelation identify_coordinates(const BooleanRelation& relation,
                                     const MinorMap& pattern) {
  if (pattern.from_arity != relation.arity)
    throw ParameterError("pattern domain must equal the relation arity");
  check_relation_arity(pattern.to_arity);
  std::vector<std::uint32_t> result;
  for (std::uint32_t tuple : relation.tuples) {
    std::uint32_t image = 0;
    std::uint32_t seen = 0;
    bool consistent = true;
    for (int j = 1; j <= relation.arity && consistent; ++j) {
      std::uint32_t bit = (tuple >> (j - 1)) & 1;
      std::uint32_t target = 1u << (pattern(j) - 1);
      if (seen & target) {
        if (((image & target) != 0) != (bit != 0))
          consistent = false;
      } else {
        seen |= target;
        if (bit)
          image |= target;
      }
    }
    if (consistent)
      result.push_back(image);
  }
  return BooleanRelation(pattern.to_arity, std::move(result));
}

BooleanRelation close_relation(const BooleanRelation& relation,
                               const std::vector<BooleanFunction>& fns) {
  if (relation.tuples.empty())
    throw ParameterError("close_relation requires a nonempty relation");
  std::set<std::uint32_t> closed(relation.tuples.begin(),
                                 relation.tuples.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> snapshot(closed.begin(), closed.end());
    for (const auto& f : fns) {
      int n = f.arity;
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::uint32_t image = 0;
        for (int j = 0; j < relation.arity; ++j) {
          std::uint32_t input = 0;
          for (int i = 0; i < n; ++i)
            if ((snapshot[pick[i]] >> j) & 1)
              input |= 1u << i;
          if (f.eval(input))
            image |= 1u << j;
        }
        if (closed.insert(image).second)
          grew = true;
        int pos = 0;
        while (pos < n && ++pick[pos] == snapshot.size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == n)
          break;
      }
    }
  }
  return BooleanRelation(
      relation.arity, std::vector<std::uint32_t>(closed.begin(), closed.end()));
}

} // namespace pcsp

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcsp/errors.hpp"

namespace pcsp {

struct MinorMap;

/// A finite relation over {0,1}. Tuples are stored as packed bit masks
/// (coordinate j, 1-based, lives in bit j-1), kept sorted and deduplicated
/// so serialization is canonical.
struct BooleanRelation {
  int arity = 0;
  std::vector<std::uint32_t> tuples;

  BooleanRelation() = default;
  BooleanRelation(int arity, std::vector<std::uint32_t> tuples);

  bool contains(std::uint32_t tuple) const;
  bool operator==(const BooleanRelation&) const = default;
};

/// A relational structure over the fixed domain {0,1}: an ordered sequence
/// of relations. The signature is the sequence of arities.
struct BooleanStructure {
  std::vector<BooleanRelation> relations;

  std::vector<int> signature() const;
  bool similar_to(const BooleanStructure& other) const;
};

/// An input structure: variables 1..variable_count and constraints, each a
/// scope (1-based variable indices) plus a 1-based index into the template
/// signature.
struct Instance {
  struct Constraint {
    std::vector<int> scope;
    int relation = 1;
  };

  int variable_count = 0;
  std::vector<Constraint> constraints;

  /// Throws StructuralError unless every scope matches the arity of the
  /// referenced relation and all indices are in range.
  void validate_against(const BooleanStructure& tmpl) const;
};

/// A total Boolean function given by its truth table. Entry k of the table
/// is the value on the input whose coordinate i (1-based) equals bit i-1 of
/// k (little-endian indexing).
struct BooleanFunction {
  int arity = 0;
  std::vector<std::uint8_t> table;

  BooleanFunction() = default;
  BooleanFunction(int arity, std::vector<std::uint8_t> table);

  std::size_t size() const { return table.size(); }
  int eval(std::uint32_t input) const { return table[input]; }

  bool is_idempotent() const;
  bool is_projection(int* coordinate = nullptr) const;
  bool is_folded() const;

  /// The pi-minor computed by table re-indexing.
  BooleanFunction minor(const MinorMap& pi) const;
  /// f(x,...,x).
  BooleanFunction unary_minor() const;

  /// Stable identification string ("<arity>:<hex bits>"), used to key
  /// table-backed choice functions.
  std::string digest() const;

  bool operator==(const BooleanFunction&) const = default;
};

enum class RelationKind { Nae, KInL, BuiltinR, Builtin2In4 };

/// Families used throughout: NAE_k (all non-constant k-tuples), k-in-l (all
/// l-tuples with exactly k ones), and the two fixed 6-ary/4-ary relations
/// of the (STl, STr) template.
BooleanRelation make_relation(RelationKind kind, int k = 0, int l = 0);

BooleanStructure make_stl();
BooleanStructure make_str();

/// True iff h (values indexed by variable, 1-based) maps every constraint
/// scope of inst into the corresponding relation of target.
bool is_homomorphism(const std::vector<int>& h, const Instance& inst,
                     const BooleanStructure& target);

/// Exhaustive polymorphism test: every componentwise application of f to
/// tuples of each relation of A must land in the corresponding relation of
/// B. No sampling; cost is sum over relations of |R_A|^arity(f).
bool is_polymorphism(const BooleanFunction& f, const BooleanStructure& a,
                     const BooleanStructure& b);

/// Relation image under a coordinate-identification pattern: keeps exactly
/// the tuples whose entries agree within each identification class, mapped
/// onto the pattern's codomain.
BooleanRelation identify_coordinates(const BooleanRelation& relation,
                                     const MinorMap& pattern);

/// Smallest superset of `relation` closed under componentwise application
/// of every function in `fns`; computed to fixpoint.
BooleanRelation close_relation(const BooleanRelation& relation,
                               const std::vector<BooleanFunction>& fns);

} // namespace pcsp

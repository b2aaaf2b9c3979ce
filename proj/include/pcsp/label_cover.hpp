#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcsp/minor_map.hpp"
#include "pcsp/rational.hpp"

namespace pcsp {

/// A bipartite Label Cover instance: a biregular graph on Y u Z with a
/// total constraint map [l] -> [r] per edge.
struct BipartiteLC {
  int left_count = 0;   // |Y|
  int right_count = 0;  // |Z|
  int left_domain = 0;  // l
  int right_domain = 0; // r

  struct Edge {
    int y = 0;
    int z = 0;
    std::vector<int> map; // map[a-1] in [1, r]
  };
  std::vector<Edge> edges;

  /// Checks biregularity, uniqueness of edges, and totality of the maps.
  void validate() const;
};

/// A layered Label Cover instance with layers X_1..X_L, per-layer domains,
/// biregular edge sets E_{i,j} and a constraint per edge. Layerized
/// instances name variables by their tuple content for debuggability.
struct LayeredLC {
  int layers = 0;
  std::vector<int> layer_sizes;
  std::vector<int> domains;
  std::vector<std::vector<std::string>> names; // optional, may be empty

  struct Edge {
    int from = 0; // variable index in layer i
    int to = 0;   // variable index in layer j
    std::vector<int> map;
  };
  std::map<std::pair<int, int>, std::vector<Edge>> edges;

  /// Biregularity per layer pair plus transitivity of the edge relation.
  void validate() const;

  bool has_edge(int i, int j, int from, int to) const;
  const std::vector<int>* constraint(int i, int j, int from, int to) const;
};

/// One variable per layer with all pairs connected.
using Chain = std::vector<int>;

/// An assignment maps each variable of each layer to a label in the layer
/// domain (1-based), values[i-1][x-1].
using LayeredAssignment = std::vector<std::vector<int>>;

/// The least delta such that for every y and every S with |S| <= max_set,
/// the probability over neighbours that the image of S shrinks is at most
/// delta |S|^2. Exact enumeration, no sampling.
Rational measure_smoothness(const BipartiteLC& gamma, int max_set,
                            std::uint64_t cap = 10'000'000);

/// The layered construction: X_i = Z^i x Y^{L-i}, product domains and
/// constraints. Transitivity holds by construction and is re-verified.
LayeredLC layerize(const BipartiteLC& gamma, int layers,
                   std::uint64_t cap = 5'000'000);

/// Checks the adjacent-layer smoothness bound exhaustively: for every
/// layer i < L, variable x and label set S with 2 <= |S| <= max_set, the
/// fraction of neighbours in layer i+1 shrinking S is at most
/// delta |S|^2.
bool layered_smoothness_bound_holds(const LayeredLC& phi,
                                    const Rational& delta, int max_set,
                                    std::uint64_t cap = 50'000'000);

/// Lifts a satisfying bipartite assignment (sigma_y, sigma_z 1-based) to
/// the layerized instance.
LayeredAssignment lift_assignment(const BipartiteLC& gamma, int layers,
                                  const std::vector<int>& sigma_y,
                                  const std::vector<int>& sigma_z);

/// All chains (one variable per layer, pairwise connected).
std::vector<Chain> enumerate_chains(const LayeredLC& phi,
                                    std::uint64_t cap = 5'000'000);

/// The fraction of chains with at least one satisfied constraint; 1 when
/// the instance has no chains at all.
Rational weak_sat_fraction(const LayeredLC& phi,
                           const LayeredAssignment& sigma);

/// An abstract minor condition: one function symbol per variable, one
/// identity per edge (the to-symbol is the map-minor of the from-symbol).
struct MinorCondition {
  struct Symbol {
    std::string name;
    int arity = 0;
  };
  struct Identity {
    int from_layer = 0;
    int from = 0;
    int to_layer = 0;
    int to = 0;
    std::vector<int> map; // [arity(from)] -> [arity(to)]
  };
  int layers = 0;
  std::vector<std::vector<Symbol>> symbols;
  std::vector<Identity> identities;

  void validate() const;
};

MinorCondition to_minor_condition(const LayeredLC& phi);

/// A projection assignment satisfying every identity (one coordinate per
/// symbol), or nullopt. For conditions generated from a layered instance
/// this exists iff the instance is fully satisfiable.
std::optional<std::vector<std::vector<int>>>
minor_condition_trivial(const MinorCondition& sigma,
                        std::uint64_t cap = 10'000'000);

} // namespace pcsp

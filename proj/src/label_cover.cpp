#include "pcsp/label_cover.hpp"

#include <algorithm>
#include <set>

namespace pcsp {

void BipartiteLC::validate() const {
  if (left_count < 1 || right_count < 1 || left_domain < 1 ||
      right_domain < 1)
    throw StructuralError("bipartite instance needs nonempty sides and "
                          "domains");
  std::vector<int> deg_y(left_count + 1, 0), deg_z(right_count + 1, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.y < 1 || e.y > left_count || e.z < 1 || e.z > right_count)
      throw StructuralError("edge endpoint out of range");
    if (!seen.insert({e.y, e.z}).second)
      throw StructuralError("duplicate edge");
    if (static_cast<int>(e.map.size()) != left_domain)
      throw StructuralError("constraint map must be total on [l]");
    for (int v : e.map)
      if (v < 1 || v > right_domain)
        throw StructuralError("constraint value outside [r]");
    ++deg_y[e.y];
    ++deg_z[e.z];
  }
  for (int y = 1; y <= left_count; ++y)
    if (deg_y[y] != deg_y[1])
      throw StructuralError("left side is not regular");
  for (int z = 1; z <= right_count; ++z)
    if (deg_z[z] != deg_z[1])
      throw StructuralError("right side is not regular");
  if (edges.empty())
    throw StructuralError("instance needs at least one edge");
}

void LayeredLC::validate() const {
  if (layers < 2)
    throw StructuralError("layered instance needs at least two layers");
  if (static_cast<int>(layer_sizes.size()) != layers ||
      static_cast<int>(domains.size()) != layers)
    throw StructuralError("layer size/domain lists must match the layer "
                          "count");
  for (const auto& [key, list] : edges) {
    auto [i, j] = key;
    if (i < 1 || j <= i || j > layers)
      throw StructuralError("edge set with invalid layer pair");
    std::vector<int> deg_from(layer_sizes[i - 1] + 1, 0);
    std::vector<int> deg_to(layer_sizes[j - 1] + 1, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : list) {
      if (e.from < 1 || e.from > layer_sizes[i - 1] || e.to < 1 ||
          e.to > layer_sizes[j - 1])
        throw StructuralError("layered edge endpoint out of range");
      if (!seen.insert({e.from, e.to}).second)
        throw StructuralError("duplicate layered edge");
      if (static_cast<int>(e.map.size()) != domains[i - 1])
        throw StructuralError("layered constraint not total");
      for (int v : e.map)
        if (v < 1 || v > domains[j - 1])
          throw StructuralError("layered constraint value out of range");
      ++deg_from[e.from];
      ++deg_to[e.to];
    }
    for (int x = 1; x <= layer_sizes[i - 1]; ++x)
      if (deg_from[x] != deg_from[1])
        throw StructuralError("layer pair not biregular (from side)");
    for (int x = 1; x <= layer_sizes[j - 1]; ++x)
      if (deg_to[x] != deg_to[1])
        throw StructuralError("layer pair not biregular (to side)");
  }
  // Transitivity: edges (x_i, x_j) and (x_j, x_k) force (x_i, x_k).
  for (int i = 1; i <= layers; ++i)
    for (int j = i + 1; j <= layers; ++j)
      for (int k = j + 1; k <= layers; ++k) {
        auto ij = edges.find({i, j});
        auto jk = edges.find({j, k});
        if (ij == edges.end() || jk == edges.end())
          continue;
        for (const auto& a : ij->second)
          for (const auto& b : jk->second) {
            if (a.to != b.from)
              continue;
            if (!has_edge(i, k, a.from, b.to))
              throw StructuralError("layered instance is not transitive");
          }
      }
}

bool LayeredLC::has_edge(int i, int j, int from, int to) const {
  return constraint(i, j, from, to) != nullptr;
}

const std::vector<int>* LayeredLC::constraint(int i, int j, int from,
                                              int to) const {
  auto it = edges.find({i, j});
  if (it == edges.end())
    return nullptr;
  for (const auto& e : it->second)
    if (e.from == from && e.to == to)
      return &e.map;
  return nullptr;
}

namespace {

/// Enumerates subsets of [domain] of size 2..max_set, invoking the visitor
/// with each subset (1-based labels).
template <typename Visit>
void for_each_subset(int domain, int max_set, Visit&& visit) {
  std::vector<int> subset;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) >= 2)
      visit(subset);
    if (static_cast<int>(subset.size()) == max_set)
      return;
    for (int v = next; v <= domain; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 1);
}

std::uint64_t binomial_partial_sum(int n, int cap_k) {
  std::uint64_t total = 0;
  std::uint64_t choose = 1;
  for (int k = 1; k <= cap_k && k <= n; ++k) {
    choose = choose * (n - k + 1) / k;
    if (k >= 2)
      total += choose;
  }
  return total;
}

} // namespace

Rational measure_smoothness(const BipartiteLC& gamma, int max_set,
                            std::uint64_t cap) {
  gamma.validate();
  if (max_set < 2)
    throw ParameterError("smoothness needs max_set >= 2");
  std::uint64_t work = std::uint64_t(gamma.left_count) *
                       binomial_partial_sum(gamma.left_domain, max_set) *
                       (gamma.edges.size() / gamma.left_count);
  if (work > cap)
    throw CapacityError("smoothness enumeration exceeds the cap");

  Rational delta = 0;
  for (int y = 1; y <= gamma.left_count; ++y) {
    std::vector<const BipartiteLC::Edge*> incident;
    for (const auto& e : gamma.edges)
      if (e.y == y)
        incident.push_back(&e);
    int degree = static_cast<int>(incident.size());
    for_each_subset(gamma.left_domain, max_set, [&](const std::vector<int>&
                                                        subset) {
      int shrinking = 0;
      for (const auto* e : incident) {
        std::set<int> image;
        for (int a : subset)
          image.insert(e->map[a - 1]);
        if (static_cast<int>(image.size()) < static_cast<int>(subset.size()))
          ++shrinking;
      }
      if (shrinking > 0) {
        Rational needed =
            Rational(shrinking, degree) /
            Rational(static_cast<int>(subset.size() * subset.size()));
        if (needed > delta)
          delta = needed;
      }
    });
  }
  return delta;
}

namespace {

/// Tuple coding for layerized variables: layer i holds tuples
/// (z_1..z_i, y_{i+1}..y_L); position L varies fastest.
struct TupleCodec {
  int layers;
  int z_count;
  int y_count;

  std::uint64_t size(int layer) const {
    std::uint64_t s = 1;
    for (int k = 1; k <= layers; ++k)
      s *= (k <= layer) ? z_count : y_count;
    return s;
  }
  std::vector<int> decode(int layer, std::uint64_t index) const {
    std::vector<int> tuple(layers);
    for (int k = layers; k >= 1; --k) {
      int radix = (k <= layer) ? z_count : y_count;
      tuple[k - 1] = static_cast<int>(index % radix) + 1;
      index /= radix;
    }
    return tuple;
  }
  std::uint64_t encode(int layer, const std::vector<int>& tuple) const {
    std::uint64_t index = 0;
    for (int k = 1; k <= layers; ++k) {
      int radix = (k <= layer) ? z_count : y_count;
      index = index * radix + (tuple[k - 1] - 1);
    }
    return index;
  }
};

/// Same coding for the product domains [r]^i x [l]^{L-i}.
struct LabelCodec {
  int layers;
  int r;
  int l;

  std::uint64_t size(int layer) const {
    std::uint64_t s = 1;
    for (int k = 1; k <= layers; ++k)
      s *= (k <= layer) ? r : l;
    return s;
  }
  std::vector<int> decode(int layer, std::uint64_t index) const {
    std::vector<int> label(layers);
    for (int k = layers; k >= 1; --k) {
      int radix = (k <= layer) ? r : l;
      label[k - 1] = static_cast<int>(index % radix) + 1;
      index /= radix;
    }
    return label;
  }
  std::uint64_t encode(int layer, const std::vector<int>& label) const {
    std::uint64_t index = 0;
    for (int k = 1; k <= layers; ++k) {
      int radix = (k <= layer) ? r : l;
      index = index * radix + (label[k - 1] - 1);
    }
    return index;
  }
};

} // namespace

LayeredLC layerize(const BipartiteLC& gamma, int layers, std::uint64_t cap) {
  gamma.validate();
  if (layers < 2)
    throw ParameterError("layerize needs at least two layers");
  TupleCodec vars{layers, gamma.right_count, gamma.left_count};
  LabelCodec labels{layers, gamma.right_domain, gamma.left_domain};

  LayeredLC phi;
  phi.layers = layers;
  std::uint64_t total_work = 0;
  for (int i = 1; i <= layers; ++i) {
    std::uint64_t sz = vars.size(i);
    std::uint64_t dom = labels.size(i);
    if (sz > cap || dom > cap)
      throw CapacityError("layerized instance exceeds the cap");
    total_work += sz * dom;
    if (total_work > cap)
      throw CapacityError("layerized instance exceeds the cap");
    phi.layer_sizes.push_back(static_cast<int>(sz));
    phi.domains.push_back(static_cast<int>(dom));
  }

  // Variable names record the tuple content.
  phi.names.resize(layers);
  for (int i = 1; i <= layers; ++i) {
    phi.names[i - 1].reserve(phi.layer_sizes[i - 1]);
    for (std::uint64_t v = 0; v < vars.size(i); ++v) {
      auto tuple = vars.decode(i, v);
      std::string name;
      for (int k = 1; k <= layers; ++k) {
        name += (k <= i) ? 'z' : 'y';
        name += std::to_string(tuple[k - 1]);
        if (k < layers)
          name += '.';
      }
      phi.names[i - 1].push_back(std::move(name));
    }
  }

  // Constraint lookup for the bipartite instance.
  auto bip = [&](int y, int z) -> const std::vector<int>* {
    for (const auto& e : gamma.edges)
      if (e.y == y && e.z == z)
        return &e.map;
    return nullptr;
  };

  for (int i = 1; i <= layers; ++i) {
    for (int j = i + 1; j <= layers; ++j) {
      auto& list = phi.edges[{i, j}];
      for (std::uint64_t v = 0; v < vars.size(i); ++v) {
        std::vector<int> x = vars.decode(i, v);
        // Positions i+1..j swap from Y to Z along bipartite edges; the
        // rest carries over.
        std::vector<int> partners(layers + 1, 0);
        std::vector<std::vector<int>> options(layers + 1);
        for (int k = i + 1; k <= j; ++k) {
          for (const auto& e : gamma.edges)
            if (e.y == x[k - 1])
              options[k].push_back(e.z);
          std::sort(options[k].begin(), options[k].end());
        }
        std::vector<int> pick(layers + 1, 0);
        auto recurse = [&](auto&& self, int k) -> void {
          if (k > j) {
            std::vector<int> xp = x;
            for (int q = i + 1; q <= j; ++q)
              xp[q - 1] = pick[q];
            LayeredLC::Edge edge;
            edge.from = static_cast<int>(v) + 1;
            edge.to = static_cast<int>(vars.encode(j, xp)) + 1;
            edge.map.resize(labels.size(i));
            for (std::uint64_t a = 0; a < labels.size(i); ++a) {
              std::vector<int> label = labels.decode(i, a);
              for (int q = i + 1; q <= j; ++q) {
                const std::vector<int>* pi = bip(x[q - 1], pick[q]);
                label[q - 1] = (*pi)[label[q - 1] - 1];
              }
              edge.map[a] = static_cast<int>(labels.encode(j, label)) + 1;
            }
            list.push_back(std::move(edge));
            return;
          }
          for (int z : options[k]) {
            pick[k] = z;
            self(self, k + 1);
          }
        };
        recurse(recurse, i + 1);
      }
    }
  }
  phi.validate();
  return phi;
}

bool layered_smoothness_bound_holds(const LayeredLC& phi,
                                    const Rational& delta, int max_set,
                                    std::uint64_t cap) {
  if (max_set < 2)
    throw ParameterError("smoothness bound needs max_set >= 2");
  std::uint64_t work = 0;
  for (int i = 1; i < phi.layers; ++i) {
    auto it = phi.edges.find({i, i + 1});
    if (it == phi.edges.end())
      continue;
    work += std::uint64_t(phi.layer_sizes[i - 1]) *
            binomial_partial_sum(phi.domains[i - 1], max_set) *
            (it->second.size() / phi.layer_sizes[i - 1] + 1);
    if (work > cap)
      throw CapacityError("smoothness check exceeds the cap");
    for (int x = 1; x <= phi.layer_sizes[i - 1]; ++x) {
      std::vector<const LayeredLC::Edge*> incident;
      for (const auto& e : it->second)
        if (e.from == x)
          incident.push_back(&e);
      if (incident.empty())
        continue;
      bool ok = true;
      for_each_subset(phi.domains[i - 1], max_set,
                      [&](const std::vector<int>& subset) {
                        int shrinking = 0;
                        for (const auto* e : incident) {
                          std::set<int> image;
                          for (int a : subset)
                            image.insert(e->map[a - 1]);
                          if (image.size() < subset.size())
                            ++shrinking;
                        }
                        Rational pr(shrinking,
                                    static_cast<int>(incident.size()));
                        if (pr > delta * Rational(static_cast<int>(
                                             subset.size() * subset.size())))
                          ok = false;
                      });
      if (!ok)
        return false;
    }
  }
  return true;
}

LayeredAssignment lift_assignment(const BipartiteLC& gamma, int layers,
                                  const std::vector<int>& sigma_y,
                                  const std::vector<int>& sigma_z) {
  if (static_cast<int>(sigma_y.size()) != gamma.left_count ||
      static_cast<int>(sigma_z.size()) != gamma.right_count)
    throw ParameterError("assignment must be total on Y and Z");
  TupleCodec vars{layers, gamma.right_count, gamma.left_count};
  LabelCodec labels{layers, gamma.right_domain, gamma.left_domain};
  LayeredAssignment sigma(layers);
  for (int i = 1; i <= layers; ++i) {
    sigma[i - 1].resize(vars.size(i));
    for (std::uint64_t v = 0; v < vars.size(i); ++v) {
      std::vector<int> tuple = vars.decode(i, v);
      std::vector<int> label(layers);
      for (int k = 1; k <= layers; ++k)
        label[k - 1] = (k <= i) ? sigma_z[tuple[k - 1] - 1]
                                : sigma_y[tuple[k - 1] - 1];
      sigma[i - 1][v] = static_cast<int>(labels.encode(i, label)) + 1;
    }
  }
  return sigma;
}

std::vector<Chain> enumerate_chains(const LayeredLC& phi, std::uint64_t cap) {
  phi.validate();
  std::vector<Chain> chains;
  Chain current(phi.layers);
  auto recurse = [&](auto&& self, int layer) -> void {
    if (layer > phi.layers) {
      chains.push_back(current);
      if (chains.size() > cap)
        throw CapacityError("chain enumeration exceeds the cap");
      return;
    }
    for (int x = 1; x <= phi.layer_sizes[layer - 1]; ++x) {
      bool compatible = true;
      for (int prev = 1; prev < layer && compatible; ++prev)
        if (!phi.has_edge(prev, layer, current[prev - 1], x))
          compatible = false;
      if (compatible) {
        current[layer - 1] = x;
        self(self, layer + 1);
      }
    }
  };
  recurse(recurse, 1);
  return chains;
}

Rational weak_sat_fraction(const LayeredLC& phi,
                           const LayeredAssignment& sigma) {
  if (static_cast<int>(sigma.size()) != phi.layers)
    throw ParameterError("assignment must cover every layer");
  for (int i = 1; i <= phi.layers; ++i) {
    if (static_cast<int>(sigma[i - 1].size()) != phi.layer_sizes[i - 1])
      throw ParameterError("assignment must be total on layer " +
                           std::to_string(i));
    for (int value : sigma[i - 1])
      if (value < 1 || value > phi.domains[i - 1])
        throw ParameterError("assignment value outside the layer domain");
  }
  std::vector<Chain> chains = enumerate_chains(phi);
  if (chains.empty())
    return Rational(1);
  std::uint64_t satisfied = 0;
  for (const Chain& chain : chains) {
    bool weak = false;
    for (int i = 1; i <= phi.layers && !weak; ++i)
      for (int j = i + 1; j <= phi.layers && !weak; ++j) {
        const std::vector<int>* map =
            phi.constraint(i, j, chain[i - 1], chain[j - 1]);
        if (map &&
            (*map)[sigma[i - 1][chain[i - 1] - 1] - 1] ==
                sigma[j - 1][chain[j - 1] - 1])
          weak = true;
      }
    if (weak)
      ++satisfied;
  }
  return Rational(Integer(satisfied), Integer(chains.size()));
}

void MinorCondition::validate() const {
  if (layers < 2)
    throw StructuralError("minor condition needs at least two layers");
  if (static_cast<int>(symbols.size()) != layers)
    throw StructuralError("symbol table must match the layer count");
  for (const auto& id : identities) {
    if (id.from_layer < 1 || id.to_layer <= id.from_layer ||
        id.to_layer > layers)
      throw StructuralError("identity layers must satisfy i < j");
    if (id.from < 1 ||
        id.from > static_cast<int>(symbols[id.from_layer - 1].size()) ||
        id.to < 1 ||
        id.to > static_cast<int>(symbols[id.to_layer - 1].size()))
      throw StructuralError("identity references an unknown symbol");
    int from_arity = symbols[id.from_layer - 1][id.from - 1].arity;
    int to_arity = symbols[id.to_layer - 1][id.to - 1].arity;
    if (static_cast<int>(id.map.size()) != from_arity)
      throw StructuralError("identity map must be total on the from-arity");
    for (int v : id.map)
      if (v < 1 || v > to_arity)
        throw StructuralError("identity map value out of range");
  }
}

MinorCondition to_minor_condition(const LayeredLC& phi) {
  MinorCondition sigma;
  sigma.layers = phi.layers;
  sigma.symbols.resize(phi.layers);
  for (int i = 1; i <= phi.layers; ++i) {
    sigma.symbols[i - 1].reserve(phi.layer_sizes[i - 1]);
    for (int x = 1; x <= phi.layer_sizes[i - 1]; ++x) {
      std::string name =
          (!phi.names.empty() &&
           static_cast<int>(phi.names[i - 1].size()) >= x)
              ? "f_" + phi.names[i - 1][x - 1]
              : "f_" + std::to_string(i) + "_" + std::to_string(x);
      sigma.symbols[i - 1].push_back({name, phi.domains[i - 1]});
    }
  }
  for (const auto& [key, list] : phi.edges)
    for (const auto& e : list)
      sigma.identities.push_back(
          {key.first, e.from, key.second, e.to, e.map});
  sigma.validate();
  return sigma;
}

std::optional<std::vector<std::vector<int>>>
minor_condition_trivial(const MinorCondition& sigma, std::uint64_t cap) {
  sigma.validate();
  // Backtracking in (layer, symbol) order. Identities are functional:
  // assigning a from-side forces its to-side, so forced values propagate
  // eagerly and conflicts surface immediately. The cap bounds the number
  // of search nodes, not the raw product of arities.
  struct Slot {
    int layer;
    int index;
    int arity;
  };
  std::vector<Slot> slots;
  for (int i = 1; i <= sigma.layers; ++i)
    for (int s = 1; s <= static_cast<int>(sigma.symbols[i - 1].size()); ++s)
      slots.push_back({i, s, sigma.symbols[i - 1][s - 1].arity});
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t k = 0; k < slots.size(); ++k)
    slot_of[{slots[k].layer, slots[k].index}] = static_cast<int>(k);

  std::vector<std::vector<const MinorCondition::Identity*>> outgoing(
      slots.size());
  std::vector<std::vector<const MinorCondition::Identity*>> incoming(
      slots.size());
  for (const auto& id : sigma.identities) {
    outgoing[slot_of[{id.from_layer, id.from}]].push_back(&id);
    incoming[slot_of[{id.to_layer, id.to}]].push_back(&id);
  }

  std::vector<int> assignment(slots.size(), 0);
  std::uint64_t nodes = 0;

  // Assign slot k := v, propagating forced to-sides; records everything
  // set on the trail so branches can unwind.
  auto propagate = [&](auto&& self, int k, int v,
                       std::vector<int>& trail) -> bool {
    if (assignment[k] != 0)
      return assignment[k] == v;
    assignment[k] = v;
    trail.push_back(k);
    for (const auto* id : incoming[k]) {
      int from = slot_of[{id->from_layer, id->from}];
      if (assignment[from] != 0 && id->map[assignment[from] - 1] != v)
        return false;
    }
    for (const auto* id : outgoing[k]) {
      int to = slot_of[{id->to_layer, id->to}];
      if (!self(self, to, id->map[v - 1], trail))
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int k) -> bool {
    while (k < static_cast<int>(slots.size()) && assignment[k] != 0)
      ++k;
    if (k == static_cast<int>(slots.size()))
      return true;
    for (int v = 1; v <= slots[k].arity; ++v) {
      if (++nodes > cap)
        throw CapacityError("projection search exceeded its node cap");
      std::vector<int> trail;
      if (propagate(propagate, k, v, trail) && self(self, k + 1))
        return true;
      for (int t : trail)
        assignment[t] = 0;
    }
    return false;
  };
  if (!search(search, 0))
    return std::nullopt;

  std::vector<std::vector<int>> result(sigma.layers);
  for (std::size_t k = 0; k < slots.size(); ++k)
    result[slots[k].layer - 1].push_back(assignment[k]);
  return result;
}

} // namespace pcsp

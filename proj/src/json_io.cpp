#include "pcsp/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>

namespace pcsp {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object())
    throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(path + ": missing field '" + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer())
    throw SchemaError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key,
                        const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array())
    throw SchemaError(path + "." + key + ": expected an array");
  return v;
}

std::string string_field(const Json& j, const char* key,
                         const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string())
    throw SchemaError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

Rational rational_field(const Json& v, const std::string& path) {
  if (v.is_number_integer())
    return Rational(v.get<long long>());
  if (!v.is_string())
    throw SchemaError(path + ": expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::vector<int> int_array(const Json& v, const std::string& path) {
  if (!v.is_array())
    throw SchemaError(path + ": expected an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer())
      throw SchemaError(path + "[" + std::to_string(i) +
                        "]: expected an integer");
    out.push_back(v[i].get<int>());
  }
  return out;
}

template <typename Build>
auto check(const std::string& path, Build&& build)
    -> decltype(build()) {
  try {
    return build();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

} // namespace

Json to_json(const BooleanRelation& relation) {
  Json tuples = Json::array();
  for (std::uint32_t t : relation.tuples) {
    Json tuple = Json::array();
    for (int j = 0; j < relation.arity; ++j)
      tuple.push_back(static_cast<int>((t >> j) & 1));
    tuples.push_back(std::move(tuple));
  }
  return Json{{"arity", relation.arity}, {"tuples", std::move(tuples)}};
}

BooleanRelation relation_from_json(const Json& j, const std::string& path) {
  int arity = int_field(j, "arity", path);
  const Json& tuples = array_field(j, "tuples", path);
  std::vector<std::uint32_t> packed;
  packed.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::string tuple_path = path + ".tuples[" + std::to_string(t) + "]";
    std::vector<int> bits = int_array(tuples[t], tuple_path);
    if (static_cast<int>(bits.size()) != arity)
      throw SchemaError(tuple_path + ": tuple length " +
                        std::to_string(bits.size()) +
                        " does not match arity " + std::to_string(arity));
    std::uint32_t mask = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if (bits[b] != 0 && bits[b] != 1)
        throw SchemaError(tuple_path + "[" + std::to_string(b) +
                          "]: entries must be 0 or 1");
      if (bits[b])
        mask |= 1u << b;
    }
    packed.push_back(mask);
  }
  return check(path, [&] { return BooleanRelation(arity, packed); });
}

Json to_json(const BooleanStructure& structure) {
  Json relations = Json::array();
  for (const auto& r : structure.relations)
    relations.push_back(to_json(r));
  return Json{{"relations", std::move(relations)}};
}

BooleanStructure structure_from_json(const Json& j, const std::string& path) {
  const Json& relations = array_field(j, "relations", path);
  BooleanStructure out;
  for (std::size_t i = 0; i < relations.size(); ++i)
    out.relations.push_back(relation_from_json(
        relations[i], path + ".relations[" + std::to_string(i) + "]"));
  return out;
}

Json to_json(const Instance& instance) {
  Json constraints = Json::array();
  for (const auto& c : instance.constraints)
    constraints.push_back(Json{{"scope", c.scope}, {"relation", c.relation}});
  return Json{{"variables", instance.variable_count},
              {"constraints", std::move(constraints)}};
}

Instance instance_from_json(const Json& j, const std::string& path) {
  Instance out;
  out.variable_count = int_field(j, "variables", path);
  const Json& constraints = array_field(j, "constraints", path);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    std::string cpath = path + ".constraints[" + std::to_string(i) + "]";
    Instance::Constraint c;
    c.scope = int_array(field(constraints[i], "scope", cpath),
                        cpath + ".scope");
    c.relation = int_field(constraints[i], "relation", cpath);
    out.constraints.push_back(std::move(c));
  }
  return out;
}

Json to_json(const BooleanFunction& function) {
  std::string bits;
  bits.reserve(function.table.size());
  for (auto b : function.table)
    bits.push_back(b ? '1' : '0');
  return Json{{"arity", function.arity}, {"table", std::move(bits)}};
}

BooleanFunction function_from_json(const Json& j, const std::string& path) {
  int arity = int_field(j, "arity", path);
  std::string bits = string_field(j, "table", path);
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw SchemaError(path + ".table[" + std::to_string(i) +
                        "]: expected '0' or '1'");
    table.push_back(bits[i] == '1');
  }
  return check(path, [&] { return BooleanFunction(arity, table); });
}

Json to_json(const LtfPresentation& p) {
  Json weights = Json::array();
  for (const auto& w : p.weights)
    weights.push_back(rational_to_string(w));
  return Json{{"weights", std::move(weights)},
              {"threshold", rational_to_string(p.threshold)},
              {"form", p.form == LtfForm::Weak ? "weak" : "strict"}};
}

LtfPresentation ltf_from_json(const Json& j, const std::string& path) {
  const Json& weights = array_field(j, "weights", path);
  std::vector<Rational> parsed;
  parsed.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    parsed.push_back(rational_field(
        weights[i], path + ".weights[" + std::to_string(i) + "]"));
  Rational threshold =
      rational_field(field(j, "threshold", path), path + ".threshold");
  std::string form = string_field(j, "form", path);
  if (form != "weak" && form != "strict")
    throw SchemaError(path + ".form: expected 'weak' or 'strict'");
  return check(path, [&] {
    return LtfPresentation(parsed, threshold,
                           form == "weak" ? LtfForm::Weak : LtfForm::Strict);
  });
}

Json to_json(const MinorMap& map) {
  return Json{{"from", map.from_arity}, {"to", map.to_arity},
              {"map", map.map}};
}

MinorMap minor_map_from_json(const Json& j, const std::string& path) {
  int from = int_field(j, "from", path);
  int to = int_field(j, "to", path);
  std::vector<int> values =
      int_array(field(j, "map", path), path + ".map");
  return check(path, [&] { return MinorMap(from, to, values); });
}

Json to_json(const MinorChain& chain) {
  Json functions = Json::array();
  for (const auto& f : chain.functions)
    functions.push_back(to_json(f));
  Json maps = Json::array();
  for (const auto& m : chain.maps)
    maps.push_back(to_json(m));
  return Json{{"functions", std::move(functions)},
              {"maps", std::move(maps)}};
}

MinorChain chain_from_json(const Json& j, const std::string& path) {
  MinorChain chain;
  const Json& functions = array_field(j, "functions", path);
  for (std::size_t i = 0; i < functions.size(); ++i)
    chain.functions.push_back(ltf_from_json(
        functions[i], path + ".functions[" + std::to_string(i) + "]"));
  const Json& maps = array_field(j, "maps", path);
  for (std::size_t i = 0; i < maps.size(); ++i)
    chain.maps.push_back(minor_map_from_json(
        maps[i], path + ".maps[" + std::to_string(i) + "]"));
  check(path, [&] {
    chain.verify();
    return 0;
  });
  return chain;
}

ChoiceFunction choice_from_json(const Json& j, const std::string& path) {
  std::string kind = string_field(j, "kind", path);
  if (kind == "dictator")
    return ChoiceFunction::dictator();
  if (kind == "top3n")
    return check(path,
                 [&] { return ChoiceFunction::top3n(int_field(j, "n", path)); });
  if (kind == "top_ranked")
    return check(path, [&] {
      return ChoiceFunction::top_ranked(int_field(j, "count", path));
    });
  if (kind == "table") {
    const Json& entries = array_field(j, "entries", path);
    std::map<std::string, std::vector<int>> table;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::string epath = path + ".entries[" + std::to_string(i) + "]";
      std::string digest = string_field(entries[i], "digest", epath);
      table[digest] =
          int_array(field(entries[i], "set", epath), epath + ".set");
    }
    return ChoiceFunction::table(std::move(table));
  }
  throw SchemaError(path + ".kind: unknown choice kind '" + kind + "'");
}

Json to_json(const BipartiteLC& gamma) {
  Json edges = Json::array();
  for (const auto& e : gamma.edges)
    edges.push_back(Json{{"y", e.y}, {"z", e.z}, {"map", e.map}});
  return Json{{"left", gamma.left_count},
              {"right", gamma.right_count},
              {"left_domain", gamma.left_domain},
              {"right_domain", gamma.right_domain},
              {"edges", std::move(edges)}};
}

BipartiteLC bipartite_from_json(const Json& j, const std::string& path) {
  BipartiteLC gamma;
  gamma.left_count = int_field(j, "left", path);
  gamma.right_count = int_field(j, "right", path);
  gamma.left_domain = int_field(j, "left_domain", path);
  gamma.right_domain = int_field(j, "right_domain", path);
  const Json& edges = array_field(j, "edges", path);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string epath = path + ".edges[" + std::to_string(i) + "]";
    BipartiteLC::Edge e;
    e.y = int_field(edges[i], "y", epath);
    e.z = int_field(edges[i], "z", epath);
    e.map = int_array(field(edges[i], "map", epath), epath + ".map");
    gamma.edges.push_back(std::move(e));
  }
  check(path, [&] {
    gamma.validate();
    return 0;
  });
  return gamma;
}

Json to_json(const LayeredLC& phi) {
  Json edges = Json::array();
  for (const auto& [key, list] : phi.edges)
    for (const auto& e : list)
      edges.push_back(Json{{"i", key.first},
                           {"j", key.second},
                           {"from", e.from},
                           {"to", e.to},
                           {"map", e.map}});
  Json out{{"layers", phi.layers},
           {"layer_sizes", phi.layer_sizes},
           {"domains", phi.domains},
           {"edges", std::move(edges)}};
  if (!phi.names.empty())
    out["names"] = phi.names;
  return out;
}

LayeredLC layered_from_json(const Json& j, const std::string& path) {
  LayeredLC phi;
  phi.layers = int_field(j, "layers", path);
  phi.layer_sizes =
      int_array(field(j, "layer_sizes", path), path + ".layer_sizes");
  phi.domains = int_array(field(j, "domains", path), path + ".domains");
  if (j.contains("names")) {
    const Json& names = j.at("names");
    if (!names.is_array())
      throw SchemaError(path + ".names: expected an array");
    for (const auto& layer : names) {
      std::vector<std::string> list;
      for (const auto& name : layer)
        list.push_back(name.get<std::string>());
      phi.names.push_back(std::move(list));
    }
  }
  const Json& edges = array_field(j, "edges", path);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string epath = path + ".edges[" + std::to_string(e) + "]";
    int i = int_field(edges[e], "i", epath);
    int jj = int_field(edges[e], "j", epath);
    LayeredLC::Edge edge;
    edge.from = int_field(edges[e], "from", epath);
    edge.to = int_field(edges[e], "to", epath);
    edge.map = int_array(field(edges[e], "map", epath), epath + ".map");
    phi.edges[{i, jj}].push_back(std::move(edge));
  }
  check(path, [&] {
    phi.validate();
    return 0;
  });
  return phi;
}

Json to_json(const MinorCondition& sigma) {
  Json symbols = Json::array();
  for (const auto& layer : sigma.symbols) {
    Json list = Json::array();
    for (const auto& s : layer)
      list.push_back(Json{{"name", s.name}, {"arity", s.arity}});
    symbols.push_back(std::move(list));
  }
  Json identities = Json::array();
  for (const auto& id : sigma.identities)
    identities.push_back(Json{{"from_layer", id.from_layer},
                              {"from", id.from},
                              {"to_layer", id.to_layer},
                              {"to", id.to},
                              {"map", id.map}});
  return Json{{"layers", sigma.layers},
              {"symbols", std::move(symbols)},
              {"identities", std::move(identities)}};
}

MinorCondition condition_from_json(const Json& j, const std::string& path) {
  MinorCondition sigma;
  sigma.layers = int_field(j, "layers", path);
  const Json& symbols = array_field(j, "symbols", path);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    std::string lpath = path + ".symbols[" + std::to_string(i) + "]";
    if (!symbols[i].is_array())
      throw SchemaError(lpath + ": expected an array");
    std::vector<MinorCondition::Symbol> layer;
    for (std::size_t s = 0; s < symbols[i].size(); ++s) {
      std::string spath = lpath + "[" + std::to_string(s) + "]";
      layer.push_back({string_field(symbols[i][s], "name", spath),
                       int_field(symbols[i][s], "arity", spath)});
    }
    sigma.symbols.push_back(std::move(layer));
  }
  const Json& identities = array_field(j, "identities", path);
  for (std::size_t i = 0; i < identities.size(); ++i) {
    std::string ipath = path + ".identities[" + std::to_string(i) + "]";
    MinorCondition::Identity id;
    id.from_layer = int_field(identities[i], "from_layer", ipath);
    id.from = int_field(identities[i], "from", ipath);
    id.to_layer = int_field(identities[i], "to_layer", ipath);
    id.to = int_field(identities[i], "to", ipath);
    id.map = int_array(field(identities[i], "map", ipath), ipath + ".map");
    sigma.identities.push_back(std::move(id));
  }
  check(path, [&] {
    sigma.validate();
    return 0;
  });
  return sigma;
}

LayeredAssignment layered_assignment_from_json(const Json& j,
                                               const std::string& path) {
  const Json& values = array_field(j, "values", path);
  LayeredAssignment sigma;
  for (std::size_t i = 0; i < values.size(); ++i)
    sigma.push_back(
        int_array(values[i], path + ".values[" + std::to_string(i) + "]"));
  return sigma;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out)
    throw SchemaError("cannot write '" + path + "'");
  out << dump_canonical(j) << "\n";
}

std::string dump_canonical(const Json& j) { return j.dump(2); }

} // namespace pcsp

#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "pcsp/blp.hpp"
#include "pcsp/boolean.hpp"
#include "pcsp/choice.hpp"
#include "pcsp/label_cover.hpp"
#include "pcsp/ltf.hpp"
#include "pcsp/minions.hpp"

namespace pcsp {

using Json = nlohmann::json;

// Serializers; output is canonical (sorted keys, rationals as strings).
Json to_json(const BooleanRelation& relation);
Json to_json(const BooleanStructure& structure);
Json to_json(const Instance& instance);
Json to_json(const BooleanFunction& function);
Json to_json(const LtfPresentation& p);
Json to_json(const MinorMap& map);
Json to_json(const MinorChain& chain);
Json to_json(const BipartiteLC& gamma);
Json to_json(const LayeredLC& phi);
Json to_json(const MinorCondition& sigma);

// Parsers validate every invariant at load time and name the offending
// field path in SchemaError diagnostics.
BooleanRelation relation_from_json(const Json& j,
                                   const std::string& path = "$");
BooleanStructure structure_from_json(const Json& j,
                                     const std::string& path = "$");
Instance instance_from_json(const Json& j, const std::string& path = "$");
BooleanFunction function_from_json(const Json& j,
                                   const std::string& path = "$");
LtfPresentation ltf_from_json(const Json& j, const std::string& path = "$");
MinorMap minor_map_from_json(const Json& j, const std::string& path = "$");
MinorChain chain_from_json(const Json& j, const std::string& path = "$");
ChoiceFunction choice_from_json(const Json& j,
                                const std::string& path = "$");
BipartiteLC bipartite_from_json(const Json& j,
                                const std::string& path = "$");
LayeredLC layered_from_json(const Json& j, const std::string& path = "$");
MinorCondition condition_from_json(const Json& j,
                                   const std::string& path = "$");
LayeredAssignment layered_assignment_from_json(const Json& j,
                                               const std::string& path = "$");

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump_canonical(const Json& j);

} // namespace pcsp

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "pcsp/blp.hpp"
#include "pcsp/json_io.hpp"
#include "pcsp/minions.hpp"
#include "pcsp/preorder.hpp"
#include "pcsp/tuple_minion.hpp"

namespace {

using pcsp::Json;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << pcsp::dump_canonical(j) << "\n";
  else
    pcsp::write_json_file(out_path, j);
}

pcsp::LtfPresentation load_ltf(const std::string& path) {
  return pcsp::ltf_from_json(pcsp::load_json_file(path));
}

Json membership_json(const pcsp::StMembership& result) {
  Json j{{"member", result.member}};
  if (result.m)
    j["m"] = *result.m;
  if (result.rho)
    j["rho"] = pcsp::to_json(*result.rho);
  return j;
}

Json preorder_json(const pcsp::CoordinatePreorder& pre) {
  Json mono = Json::array();
  for (auto m : pre.mono)
    mono.push_back(m == pcsp::Monotonicity::Monotone       ? "monotone"
                   : m == pcsp::Monotonicity::Antimonotone ? "antimonotone"
                                                           : "both");
  Json less = Json::array();
  for (int i = 1; i <= pre.arity; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= pre.arity; ++j)
      row.push_back(pre.less(i, j));
    less.push_back(std::move(row));
  }
  return Json{{"arity", pre.arity},
              {"monotonicity", std::move(mono)},
              {"less", std::move(less)},
              {"classes_ascending", pre.classes_ascending()}};
}

Json verdicts_json(const std::vector<pcsp::ConditionVerdict>& verdicts,
                   const std::string& variant) {
  Json out = Json::array();
  for (const auto& v : verdicts) {
    Json j{{"chain", v.chain},
           {"variant", variant},
           {"satisfied", v.satisfied}};
    if (v.witness)
      j["witness"] = Json{{"i", v.witness->first}, {"j", v.witness->second}};
    if (v.vacuous)
      j["vacuous"] = true;
    out.push_back(std::move(j));
  }
  return Json{{"verdicts", std::move(out)}};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcsp - linear-threshold minions, label cover constructions, "
               "and exact LP rounding for Boolean promise CSPs"};
  app.require_subcommand(1);
  std::uint64_t seed = 20240601;
  app.add_option("--seed", seed,
                 "seed for randomized sweeps (outputs are deterministic "
                 "given inputs and seed)");

  std::string ltf_path, function_path, out_path, method = "all";
  auto* st_member = app.add_subcommand(
      "st-member", "decide membership in the ST minion three ways");
  st_member->add_option("--ltf", ltf_path, "presentation JSON");
  st_member->add_option("--function", function_path, "truth table JSON");
  st_member->add_option("--method", method,
                        "all|recursive|template|bruteforce");
  st_member->add_option("--out", out_path, "output file");

  int wp_m = 1, symmetric_arity = 0;
  std::string bound = "1/80";
  auto* wp_check = app.add_subcommand(
      "wp-check", "heavy-coordinate bound and symmetric-minor search over "
                  "a WP generator");
  wp_check->add_option("--m", wp_m, "generator index")->required();
  wp_check->add_option("--symmetric-arity", symmetric_arity,
                       "search for a symmetric minor of this arity");
  wp_check->add_option("--bound", bound, "heavy-coordinate bound");
  wp_check->add_option("--out", out_path, "output file");

  auto* canonical = app.add_subcommand(
      "canonical", "canonical presentation of a threshold function");
  canonical->add_option("--ltf", ltf_path, "presentation JSON")->required();
  canonical->add_option("--out", out_path, "output file");

  auto* preorder = app.add_subcommand(
      "preorder", "coordinate preorder of a threshold function");
  preorder->add_option("--ltf", ltf_path, "presentation JSON")->required();
  preorder->add_option("--out", out_path, "output file");

  auto* fixing = app.add_subcommand("fixing-pairs",
                                    "all fixing pairs of a function");
  fixing->add_option("--ltf", ltf_path, "presentation JSON");
  fixing->add_option("--function", function_path, "truth table JSON");
  fixing->add_option("--out", out_path, "output file");

  std::string minion = "st", choice_path;
  int refute_m = 2, choice_n = 1, choice_count = 0;
  std::string choice_kind = "top_ranked";
  auto* refute = app.add_subcommand(
      "refute-choice", "build the WP multiple-choice or ST layered "
                       "refutation for a choice function");
  refute->add_option("--minion", minion, "wp|st")->required();
  refute->add_option("--M", refute_m, "size bound")->required();
  refute->add_option("--choice", choice_path, "choice function JSON");
  refute->add_option("--choice-kind", choice_kind,
                     "top_ranked|top3n|dictator (when no --choice file)");
  refute->add_option("--n", choice_n, "N for top3n");
  refute->add_option("--count", choice_count, "count for top_ranked");
  refute->add_option("--out", out_path, "output file");

  std::string chains_path, variant = "layered";
  int cond_m = 1;
  auto* check = app.add_subcommand(
      "check-condition", "evaluate a hardness condition on chain families");
  check->add_option("--chains", chains_path, "chains JSON")->required();
  check->add_option("--choice", choice_path, "choice function JSON")
      ->required();
  check->add_option("--variant", variant,
                    "single|multiple|layered|injective_layered");
  check->add_option("--M", cond_m, "size bound")->required();
  check->add_option("--out", out_path, "output file");

  auto* lc = app.add_subcommand("lc", "label cover constructions");
  lc->require_subcommand(1);
  std::string instance_path, layered_path, condition_path;
  int max_set = 2, layers = 2;
  auto* lc_smooth = lc->add_subcommand("smooth", "measure delta-smoothness");
  lc_smooth->add_option("--instance", instance_path, "bipartite JSON")
      ->required();
  lc_smooth->add_option("--max-set", max_set, "largest set size");
  lc_smooth->add_option("--out", out_path, "output file");
  auto* lc_layerize = lc->add_subcommand("layerize",
                                         "build the layered instance");
  lc_layerize->add_option("--instance", instance_path, "bipartite JSON")
      ->required();
  lc_layerize->add_option("--layers", layers, "layer count")->required();
  lc_layerize->add_option("--out", out_path, "output file");
  auto* lc_mcgen = lc->add_subcommand("mc-gen",
                                      "minor condition of a layered "
                                      "instance");
  lc_mcgen->add_option("--layered", layered_path, "layered JSON")->required();
  lc_mcgen->add_option("--out", out_path, "output file");
  auto* lc_trivial = lc->add_subcommand(
      "mc-trivial", "projection satisfiability of a minor condition");
  lc_trivial->add_option("--condition", condition_path, "condition JSON")
      ->required();
  lc_trivial->add_option("--out", out_path, "output file");

  std::string template_path;
  auto* solve = app.add_subcommand(
      "solve", "search a homomorphism via the BLP relaxation and threshold "
               "rounding");
  solve->add_option("--template", template_path,
                    "JSON with the structure pair {\"A\":..., \"B\":...}")
      ->required();
  solve->add_option("--instance", instance_path, "instance JSON")->required();
  solve->add_option("--out", out_path, "output file")->required();

  std::string relation_path, functions_path;
  auto* close = app.add_subcommand("close-relation",
                                   "componentwise closure of a relation");
  close->add_option("--relation", relation_path, "relation JSON")->required();
  close->add_option("--functions", functions_path,
                    "JSON {\"functions\": [truth tables]}")
      ->required();
  close->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*st_member) {
      pcsp::BooleanFunction f =
          !function_path.empty()
              ? pcsp::function_from_json(pcsp::load_json_file(function_path))
              : pcsp::truth_table(load_ltf(ltf_path));
      if (method == "all") {
        auto recursive = pcsp::st_membership(f, pcsp::StMethod::Recursive);
        auto templ = pcsp::st_membership(f, pcsp::StMethod::Template);
        auto brute = pcsp::st_membership(f, pcsp::StMethod::Bruteforce);
        if (recursive.member != templ.member ||
            templ.member != brute.member)
          throw pcsp::InvariantError("membership methods disagree");
        emit(membership_json(brute), out_path);
      } else if (method == "recursive" || method == "template" ||
                 method == "bruteforce") {
        pcsp::StMethod m = method == "recursive" ? pcsp::StMethod::Recursive
                           : method == "template"
                               ? pcsp::StMethod::Template
                               : pcsp::StMethod::Bruteforce;
        emit(membership_json(pcsp::st_membership(f, m)), out_path);
      } else {
        throw pcsp::ParameterError("unknown method '" + method + "'");
      }
    } else if (*wp_check) {
      auto generator = pcsp::wp_generator(wp_m);
      Json j{{"m", wp_m}};
      pcsp::Rational b = pcsp::parse_rational(bound);
      j["heavy_bound"] = Json{
          {"bound", pcsp::rational_to_string(b)},
          {"holds",
           pcsp::heavy_coordinate_bound(
               pcsp::canonical_presentation(generator), b)}};
      if (symmetric_arity > 0) {
        auto found = pcsp::symmetric_minor_search(generator, symmetric_arity);
        Json s{{"arity", symmetric_arity}, {"found", found.has_value()}};
        if (found)
          s["map"] = pcsp::to_json(*found);
        j["symmetric_minor"] = std::move(s);
      }
      emit(j, out_path);
    } else if (*canonical) {
      emit(pcsp::to_json(pcsp::canonical_presentation(load_ltf(ltf_path))),
           out_path);
    } else if (*preorder) {
      emit(preorder_json(pcsp::compute_preorder(load_ltf(ltf_path))),
           out_path);
    } else if (*fixing) {
      auto pairs =
          !function_path.empty()
              ? pcsp::find_fixing_pairs(pcsp::function_from_json(
                    pcsp::load_json_file(function_path)))
              : pcsp::find_fixing_pairs(load_ltf(ltf_path));
      Json list = Json::array();
      for (const auto& [i, j] : pairs)
        list.push_back(Json::array({i, j}));
      emit(Json{{"pairs", std::move(list)}}, out_path);
    } else if (*refute) {
      pcsp::ChoiceFunction choice = pcsp::ChoiceFunction::top_ranked(
          choice_count > 0 ? choice_count : refute_m);
      if (!choice_path.empty())
        choice = pcsp::choice_from_json(pcsp::load_json_file(choice_path));
      else if (choice_kind == "top3n")
        choice = pcsp::ChoiceFunction::top3n(choice_n);
      else if (choice_kind == "dictator")
        choice = pcsp::ChoiceFunction::dictator();
      else if (choice_kind != "top_ranked")
        throw pcsp::ParameterError("unknown choice kind '" + choice_kind +
                                   "'");
      if (minion == "wp") {
        auto result = pcsp::build_multichoice_refutation(choice, refute_m);
        emit(Json{{"f", pcsp::to_json(result.f)},
                  {"pi", pcsp::to_json(result.pi)},
                  {"g", pcsp::to_json(result.g)},
                  {"choice_of_f", result.choice_of_f},
                  {"choice_of_g", result.choice_of_g},
                  {"target", result.target}},
             out_path);
      } else if (minion == "st") {
        auto chain = pcsp::build_layered_refutation(choice, refute_m);
        emit(pcsp::to_json(chain), out_path);
      } else {
        throw pcsp::ParameterError("unknown minion '" + minion + "'");
      }
    } else if (*check) {
      Json j = pcsp::load_json_file(chains_path);
      if (!j.is_object() || !j.contains("chains") || !j["chains"].is_array())
        throw pcsp::SchemaError("$.chains: expected an array");
      std::vector<pcsp::MinorChain> chains;
      for (std::size_t i = 0; i < j["chains"].size(); ++i)
        chains.push_back(pcsp::chain_from_json(
            j["chains"][i], "$.chains[" + std::to_string(i) + "]"));
      auto choice =
          pcsp::choice_from_json(pcsp::load_json_file(choice_path));
      pcsp::ConditionVariant v;
      if (variant == "single")
        v = pcsp::ConditionVariant::Single;
      else if (variant == "multiple")
        v = pcsp::ConditionVariant::Multiple;
      else if (variant == "layered")
        v = pcsp::ConditionVariant::Layered;
      else if (variant == "injective_layered")
        v = pcsp::ConditionVariant::InjectiveLayered;
      else
        throw pcsp::ParameterError("unknown variant '" + variant + "'");
      emit(verdicts_json(pcsp::check_condition(chains, choice, cond_m, v),
                         variant),
           out_path);
    } else if (*lc_smooth) {
      auto gamma =
          pcsp::bipartite_from_json(pcsp::load_json_file(instance_path));
      emit(Json{{"delta", pcsp::rational_to_string(
                              pcsp::measure_smoothness(gamma, max_set))}},
           out_path);
    } else if (*lc_layerize) {
      auto gamma =
          pcsp::bipartite_from_json(pcsp::load_json_file(instance_path));
      emit(pcsp::to_json(pcsp::layerize(gamma, layers)), out_path);
    } else if (*lc_mcgen) {
      auto phi = pcsp::layered_from_json(pcsp::load_json_file(layered_path));
      emit(pcsp::to_json(pcsp::to_minor_condition(phi)), out_path);
    } else if (*lc_trivial) {
      auto sigma =
          pcsp::condition_from_json(pcsp::load_json_file(condition_path));
      auto witness = pcsp::minor_condition_trivial(sigma);
      Json j{{"trivial", witness.has_value()}};
      if (witness)
        j["assignment"] = *witness;
      emit(j, out_path);
    } else if (*solve) {
      Json t = pcsp::load_json_file(template_path);
      if (!t.is_object() || !t.contains("A") || !t.contains("B"))
        throw pcsp::SchemaError("$: template needs fields 'A' and 'B'");
      auto a = pcsp::structure_from_json(t["A"], "$.A");
      auto b = pcsp::structure_from_json(t["B"], "$.B");
      auto inst =
          pcsp::instance_from_json(pcsp::load_json_file(instance_path));
      auto h = pcsp::round_search(inst, a, b);
      if (!h)
        return 1;
      pcsp::write_json_file(out_path, Json{{"values", *h}});
      return 0;
    } else if (*close) {
      auto rel =
          pcsp::relation_from_json(pcsp::load_json_file(relation_path));
      Json fj = pcsp::load_json_file(functions_path);
      if (!fj.is_object() || !fj.contains("functions") ||
          !fj["functions"].is_array())
        throw pcsp::SchemaError("$.functions: expected an array");
      std::vector<pcsp::BooleanFunction> fns;
      for (std::size_t i = 0; i < fj["functions"].size(); ++i)
        fns.push_back(pcsp::function_from_json(
            fj["functions"][i], "$.functions[" + std::to_string(i) + "]"));
      emit(pcsp::to_json(pcsp::close_relation(rel, fns)), out_path);
    }
  } catch (const pcsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

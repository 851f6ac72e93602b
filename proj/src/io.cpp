#include "ramur/io.hpp"

#include <fstream>
#include <sstream>

namespace ramur {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("failed writing file: " + path);
}

namespace {

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("\"" + field + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("\"" + field + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const Json& require(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) {
    throw ParseError("missing field \"" + field + "\"");
  }
  return j.at(field);
}

}  // namespace

Json dataset_to_json(const Scf& scf) {
  const GroundSet& g = scf.ground();
  Json j;
  j["alternatives"] = g.ids();
  Json menus = Json::array();
  for (Mask menu : menus_in_order(scf.n())) {
    Json row;
    row["menu"] = g.id_list(menu);
    Json probs = Json::object();
    for (int a : mask_members(menu)) probs[g.id(a)] = rational_str(scf.prob(a, menu));
    row["probs"] = probs;
    menus.push_back(std::move(row));
  }
  j["menus"] = std::move(menus);
  return j;
}

RawDataset dataset_from_json(const Json& j) {
  RawDataset raw;
  raw.alternatives = string_list(require(j, "alternatives"), "alternatives");
  const Json& menus = require(j, "menus");
  if (!menus.is_array()) throw ParseError("\"menus\" must be an array");
  for (const auto& row : menus) {
    RawMenuRow out;
    out.menu = string_list(require(row, "menu"), "menu");
    const Json& probs = require(row, "probs");
    if (!probs.is_object()) throw ParseError("\"probs\" must be an object");
    for (const auto& [id, value] : probs.items()) {
      if (!value.is_string()) throw ParseError("probability of \"" + id + "\" must be a string");
      out.probs[id] = value.get<std::string>();
    }
    raw.menus.push_back(std::move(out));
  }
  return raw;
}

Scf load_dataset_file(const std::string& path) {
  return validate_scf(dataset_from_json(parse_json(read_text_file(path), path)));
}

void write_dataset_file(const std::string& path, const Scf& scf) {
  write_text_file(path, canonical_dump(dataset_to_json(scf)));
}

Json report_to_json(const AxiomReport& report) {
  Json j;
  j["axiom"] = axiom_name(report.axiom);
  j["passed"] = report.passed;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json fields = Json::object();
    for (const auto& [key, value] : w.fields) {
      if (std::holds_alternative<std::string>(value)) {
        fields[key] = std::get<std::string>(value);
      } else if (std::holds_alternative<std::vector<std::string>>(value)) {
        fields[key] = std::get<std::vector<std::string>>(value);
      } else {
        fields[key] = rational_str(std::get<Rational>(value));
      }
    }
    witnesses.push_back(std::move(fields));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

namespace {

Json attention_to_json(const AttentionFunction& att) {
  const GroundSet& g = att.ground();
  Json menus = Json::array();
  for (Mask menu : menus_in_order(g.size())) {
    Json row;
    row["menu"] = g.id_list(menu);
    Json sets = Json::array();
    for (const auto& [set, mass] : att.entries(menu)) {
      Json entry;
      entry["D"] = g.id_list(set);
      entry["p"] = rational_str(mass);
      sets.push_back(std::move(entry));
    }
    row["sets"] = std::move(sets);
    menus.push_back(std::move(row));
  }
  return menus;
}

std::vector<int> ranking_from_ids(const GroundSet& g, const std::vector<std::string>& ids) {
  if (ids.size() != static_cast<std::size_t>(g.size())) {
    throw ParseError("\"preference\" must rank every alternative exactly once");
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  std::vector<int> ranking;
  for (const auto& id : ids) {
    auto idx = g.find(id);
    if (!idx || seen[static_cast<std::size_t>(*idx)]) {
      throw ParseError("\"preference\" must rank every alternative exactly once");
    }
    seen[static_cast<std::size_t>(*idx)] = true;
    ranking.push_back(*idx);
  }
  return ranking;
}

}  // namespace

Json ramur_model_to_json(const RamUrModel& model) {
  const GroundSet& g = model.ground();
  Json j;
  j["E"] = g.id_list(model.reference_set);
  Json pref = Json::array();
  for (int x : model.preference.ranking()) pref.push_back(g.id(x));
  j["preference"] = std::move(pref);
  j["attention"] = attention_to_json(model.attention);
  return j;
}

Json ramur_representation_to_json(const RamUrRepresentation& rep) {
  const GroundSet& g = rep.model.ground();
  Json j = ramur_model_to_json(rep.model);
  Json pairs = Json::array();
  for (auto [x, y] : rep.identification.revealed_relation.pairs()) {
    pairs.push_back(Json::array({g.id(x), g.id(y)}));
  }
  j["P"] = std::move(pairs);
  Json dominates = Json::array();
  for (int x : rep.identification.dominates_default) dominates.push_back(g.id(x));
  j["dominates_default"] = std::move(dominates);
  j["extensions"] = rep.identification.extension_count;
  return j;
}

RamUrModel ramur_model_from_json(const Json& j) {
  auto preference_ids = string_list(require(j, "preference"), "preference");
  GroundSet ground(preference_ids);
  auto ranking = ranking_from_ids(ground, preference_ids);
  Mask refs = ground.mask_of(string_list(require(j, "E"), "E"));
  AttentionFunction att(ground, refs);
  const Json& menus = require(j, "attention");
  if (!menus.is_array()) throw ParseError("\"attention\" must be an array");
  for (const auto& row : menus) {
    Mask menu = ground.mask_of(string_list(require(row, "menu"), "menu"));
    const Json& sets = require(row, "sets");
    if (!sets.is_array()) throw ParseError("\"sets\" must be an array");
    for (const auto& entry : sets) {
      Mask set = ground.mask_of(string_list(require(entry, "D"), "D"));
      const Json& p = require(entry, "p");
      if (!p.is_string()) throw ParseError("attention mass must be a string rational");
      att.set(set, menu, parse_rational(p.get<std::string>()));
    }
  }
  return RamUrModel(refs, PreferenceRelation::chain(ranking), std::move(att));
}

Json ira_model_to_json(const RamUrIraModel& model) {
  const GroundSet& g = model.ground;
  Json j;
  Json gamma = Json::object();
  for (int x = 0; x < g.size(); ++x) {
    gamma[g.id(x)] = rational_str(model.gamma[static_cast<std::size_t>(x)]);
  }
  j["gamma"] = std::move(gamma);
  Json pref = Json::array();
  for (int x : model.preference.ranking()) pref.push_back(g.id(x));
  j["preference"] = std::move(pref);
  return j;
}

RamUrIraModel ira_model_from_json(const Json& j) {
  const Json& gamma_obj = require(j, "gamma");
  if (!gamma_obj.is_object()) throw ParseError("\"gamma\" must be an object");
  std::vector<std::string> ids;
  for (const auto& [id, value] : gamma_obj.items()) {
    (void)value;
    ids.push_back(id);
  }
  GroundSet ground(ids);
  std::vector<Rational> gamma(static_cast<std::size_t>(ground.size()));
  for (const auto& [id, value] : gamma_obj.items()) {
    if (!value.is_string()) throw ParseError("gamma of \"" + id + "\" must be a string rational");
    gamma[static_cast<std::size_t>(ground.index_of(id))] = parse_rational(value.get<std::string>());
  }
  auto ranking = ranking_from_ids(ground, string_list(require(j, "preference"), "preference"));
  return RamUrIraModel(std::move(ground), PreferenceRelation::chain(ranking), std::move(gamma));
}

Json rum_to_json(const RumModel& rum) {
  Json orders = Json::array();
  for (std::size_t i = 0; i < rum.orders.size(); ++i) {
    Json entry;
    entry["rank"] = rum.rank_ids(i);
    entry["nu"] = rational_str(rum.orders[i].second);
    orders.push_back(std::move(entry));
  }
  Json j;
  j["orders"] = std::move(orders);
  return j;
}

Json samplerun_to_json(const SampleRun& run) {
  const GroundSet& g = run.ground();
  Json j;
  j["seed"] = run.seed();
  j["draws_per_menu"] = run.draws_per_menu();
  Json menus = Json::array();
  for (Mask menu : menus_in_order(g.size())) {
    Json row;
    row["menu"] = g.id_list(menu);
    Json freqs = Json::object();
    for (int a : mask_members(menu)) freqs[g.id(a)] = rational_str(run.frequency(a, menu));
    freqs[kDefaultId] = rational_str(run.frequency(g.size(), menu));
    row["freqs"] = std::move(freqs);
    menus.push_back(std::move(row));
  }
  j["menus"] = std::move(menus);
  return j;
}

}  // namespace ramur

#include "ramur/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ramur/identify_ira.hpp"
#include "ramur/io.hpp"
#include "ramur/oracle.hpp"

namespace ramur::cli {

namespace {

std::string menu_text(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + "}";
}

std::string witness_text(const Witness& w) {
  std::string out;
  for (const auto& [key, value] : w.fields) {
    if (!out.empty()) out += " ";
    out += key + "=";
    if (std::holds_alternative<std::string>(value)) {
      out += std::get<std::string>(value);
    } else if (std::holds_alternative<std::vector<std::string>>(value)) {
      out += menu_text(std::get<std::vector<std::string>>(value));
    } else {
      out += rational_str(std::get<Rational>(value));
    }
  }
  return out;
}

void print_reports(const std::vector<AxiomReport>& reports, std::ostream& out) {
  constexpr std::size_t kMaxShown = 3;
  for (const auto& report : reports) {
    out << axiom_name(report.axiom) << ": " << (report.passed ? "PASS" : "FAIL");
    if (!report.passed) {
      out << " (" << report.witnesses.size() << " witness"
          << (report.witnesses.size() == 1 ? "" : "es") << ")";
    }
    out << "\n";
    for (std::size_t i = 0; i < report.witnesses.size() && i < kMaxShown; ++i) {
      out << "  " << witness_text(report.witnesses[i]) << "\n";
    }
    if (report.witnesses.size() > kMaxShown) {
      out << "  ... " << report.witnesses.size() - kMaxShown << " more\n";
    }
  }
}

std::string failing_names(const std::vector<AxiomReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    if (r.passed) continue;
    if (!out.empty()) out += ", ";
    out += axiom_name(r.axiom);
  }
  return out;
}

void emit(const Json& j, const std::optional<std::string>& out_path, std::ostream& out) {
  if (out_path) {
    write_text_file(*out_path, canonical_dump(j));
  } else {
    out << canonical_dump(j);
  }
}

struct CheckOptions {
  std::string dataset;
  std::string model = "ramur";
  std::string eps = "0";
  bool json = false;
};

int run_check(const CheckOptions& opt, std::ostream& out) {
  Scf scf = load_dataset_file(opt.dataset);
  Rational eps = parse_rational(opt.eps);
  auto general = ramur_axioms(scf, eps);
  auto ira = ira_axioms(scf, eps);
  bool general_ok = all_passed(general);
  bool ira_ok = all_passed(ira);
  std::string classification = general_ok && ira_ok ? "both"
                               : general_ok         ? "RAM-UR-representable"
                               : ira_ok             ? "RAM-UR-IRA-representable"
                                                    : "neither";
  if (opt.json) {
    Json j;
    Json axioms = Json::array();
    for (const auto& r : general) axioms.push_back(report_to_json(r));
    for (const auto& r : ira) axioms.push_back(report_to_json(r));
    j["axioms"] = std::move(axioms);
    j["ramur_pass"] = general_ok;
    j["ira_pass"] = ira_ok;
    j["classification"] = classification;
    out << canonical_dump(j);
  } else {
    print_reports(general, out);
    print_reports(ira, out);
    out << "RAM-UR: " << (general_ok ? "PASS" : "FAIL (" + failing_names(general) + ")") << "; "
        << "RAM-UR-IRA: " << (ira_ok ? "PASS" : "FAIL (" + failing_names(ira) + ")") << "\n";
    out << "classification: " << classification << "\n";
  }
  bool selected_ok = opt.model == "ira" ? ira_ok : general_ok;
  return selected_ok ? kExitOk : kExitFailure;
}

struct IdentifyOptions {
  std::string dataset;
  std::string model;
  std::optional<std::string> out_path;
};

int run_identify(const IdentifyOptions& opt, std::ostream& out, std::ostream& err) {
  Scf scf = load_dataset_file(opt.dataset);
  try {
    if (opt.model == "ramur") {
      auto rep = represent_ramur(scf);
      emit(ramur_representation_to_json(rep), opt.out_path, out);
    } else {
      auto model = represent_ira(scf);
      emit(ira_model_to_json(model), opt.out_path, out);
    }
  } catch (const AxiomFailure& failure) {
    err << "identification rejected the dataset:\n";
    print_reports(failure.reports(), err);
    return kExitFailure;
  } catch (const RepresentationMismatch& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct SimulateOptions {
  std::string model_path;
  bool exact = false;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
};

int run_simulate(const SimulateOptions& opt, std::ostream& out) {
  Json j = Json::parse(read_text_file(opt.model_path), nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON: " + opt.model_path);
  Scf scf = [&] {
    if (j.contains("gamma")) {
      RamUrIraModel model = ira_model_from_json(j);
      return opt.exact ? eval_ira(model) : sample_choices(model, opt.seed, opt.sample).to_scf();
    }
    if (j.contains("attention")) {
      RamUrModel model = ramur_model_from_json(j);
      return opt.exact ? eval_ramur(model) : sample_choices(model, opt.seed, opt.sample).to_scf();
    }
    throw ParseError("model file has neither \"gamma\" nor \"attention\": " + opt.model_path);
  }();
  emit(dataset_to_json(scf), opt.out_path, out);
  return kExitOk;
}

struct RumOptions {
  std::string model_path;
  std::optional<std::string> out_path;
};

int run_rum(const RumOptions& opt, std::ostream& out, std::ostream& err) {
  Json j = Json::parse(read_text_file(opt.model_path), nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON: " + opt.model_path);
  if (!j.contains("gamma")) {
    throw ParseError("random utility construction needs an independent-attention model file");
  }
  RamUrIraModel model = ira_model_from_json(j);
  RumModel rum = build_rum(model);
  Rational total(0);
  for (const auto& [rank, weight] : rum.orders) total += weight;
  RumDiagnostic diag = verify_rum_restrictions(rum, model);
  std::ostream& summary = opt.out_path ? out : err;
  summary << "orders in support: " << rum.orders.size() << "\n";
  summary << "weights sum to one: " << (total == 1 ? "yes" : "NO") << "\n";
  summary << "support restrictions: " << (diag.all_ok() ? "hold" : "VIOLATED") << "\n";
  for (const auto& note : diag.notes) summary << "  " << note << "\n";
  emit(rum_to_json(rum), opt.out_path, out);
  return total == 1 && diag.all_ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"axiom testing, identification and simulation for stochastic choice data "
               "generated under random attention with unobserved references"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* cmd_check = app.add_subcommand("check", "run the axiom suites against a dataset");
  cmd_check->add_option("dataset", check.dataset, "dataset JSON file")->required();
  cmd_check->add_option("--model", check.model, "which suite decides the exit code")
      ->check(CLI::IsMember({"ramur", "ira"}));
  cmd_check->add_option("--eps", check.eps, "tolerance for comparisons (rational, default 0)");
  cmd_check->add_flag("--json", check.json, "structured report");

  IdentifyOptions identify;
  auto* cmd_identify = app.add_subcommand("identify", "recover a representing model");
  cmd_identify->add_option("dataset", identify.dataset, "dataset JSON file")->required();
  cmd_identify->add_option("--model", identify.model, "model class to recover")
      ->required()
      ->check(CLI::IsMember({"ramur", "ira"}));
  std::string identify_out;
  auto* identify_out_opt = cmd_identify->add_option("--out", identify_out, "output model file");

  SimulateOptions simulate;
  auto* cmd_simulate = app.add_subcommand("simulate", "produce a dataset from a model");
  cmd_simulate->add_option("model", simulate.model_path, "model JSON file")->required();
  auto* exact_flag = cmd_simulate->add_flag("--exact", simulate.exact, "exact probabilities");
  auto* sample_opt = cmd_simulate->add_option("--sample", simulate.sample,
                                              "empirical frequencies from N draws per menu");
  cmd_simulate->add_option("--seed", simulate.seed, "sampling seed (default 0)");
  std::string simulate_out;
  auto* simulate_out_opt = cmd_simulate->add_option("--out", simulate_out, "output dataset file");
  exact_flag->excludes(sample_opt);

  RumOptions rum;
  auto* cmd_rum = app.add_subcommand("rum", "random utility representation of an "
                                            "independent-attention model");
  cmd_rum->add_option("model", rum.model_path, "model JSON file")->required();
  std::string rum_out;
  auto* rum_out_opt = cmd_rum->add_option("--out", rum_out, "output RUM file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cmd_check->parsed()) return run_check(check, out);
    if (cmd_identify->parsed()) {
      if (*identify_out_opt) identify.out_path = identify_out;
      return run_identify(identify, out, err);
    }
    if (cmd_simulate->parsed()) {
      if (!simulate.exact && simulate.sample == 0) {
        err << "simulate needs --exact or --sample N\n";
        return kExitInputError;
      }
      if (*simulate_out_opt) simulate.out_path = simulate_out;
      return run_simulate(simulate, out);
    }
    if (cmd_rum->parsed()) {
      if (*rum_out_opt) rum.out_path = rum_out;
      return run_rum(rum, out, err);
    }
  } catch (const ValidationError& e) {
    err << "invalid dataset: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ramur::cli

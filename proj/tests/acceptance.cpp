// Acceptance suite: end-to-end checks with pinned tolerances and runtime
// limits. Prints one line per criterion; exits nonzero if any fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ramur/cli.hpp"
#include "ramur/forward.hpp"
#include "ramur/identify_ira.hpp"
#include "ramur/identify_ramur.hpp"
#include "ramur/io.hpp"
#include "ramur/oracle.hpp"
#include "ramur/rum.hpp"

using namespace ramur;

namespace {

struct Checker {
  bool passed = true;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 8) failures.push_back(what);
  }
};

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("ramur_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

int g_failed = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<void(Checker&)>& body) {
  Checker checker;
  auto start = std::chrono::steady_clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.require(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    checker.require(seconds < limit_seconds,
                    "runtime " + std::to_string(seconds) + "s exceeds " +
                        std::to_string(limit_seconds) + "s");
  }
  std::printf("criterion %d [%s] %s (%.2fs)\n", number, checker.passed ? "PASS" : "FAIL",
              name.c_str(), seconds);
  for (const auto& f : checker.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  if (!checker.passed) ++g_failed;
}

GroundSet letters(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(ids);
}

}  // namespace

int main() {
  criterion(1, "demo dataset: axiom reports, identification, exact reproduction", 1.0,
            [](Checker& c) {
              TempDir dir;
              Scf demo = fixture::demo_scf();
              write_dataset_file(dir.file("demo.json"), demo);

              std::string out;
              int code = run_cli({"check", dir.file("demo.json"), "--json"}, &out);
              c.require(code == cli::kExitOk, "check exit code " + std::to_string(code));
              Json report = Json::parse(out);
              bool reg_ok = false;
              for (const auto& axiom : report["axioms"]) {
                std::string name = axiom["axiom"];
                if (name == "EDA" || name == "C-WARP" || name == "EXP") {
                  c.require(axiom["passed"] == true, name + " should pass");
                }
                if (name == "REG") {
                  c.require(axiom["passed"] == false, "REG should fail");
                  c.require(axiom["witnesses"].size() == 1, "REG needs exactly one witness");
                  const Json& w = axiom["witnesses"][0];
                  reg_ok = w["alt"] == "b" && w["A"] == Json::array({"b", "c"}) &&
                           w["B"] == Json::array({"a", "b", "c"}) && w["pA"] == "1/4" &&
                           w["pB"] == "1/2";
                }
              }
              c.require(reg_ok, "REG witness is not (b, {b,c}, {a,b,c}, 1/4, 1/2)");

              code = run_cli({"identify", dir.file("demo.json"), "--model", "ramur", "--out",
                              dir.file("model.json")});
              c.require(code == cli::kExitOk, "identify exit code " + std::to_string(code));
              Json model_json = Json::parse(read_text_file(dir.file("model.json")));
              c.require(model_json["E"] == Json::array({"a"}), "references must be {a}");
              c.require(model_json["P"] == Json::array({Json::array({"b", "a"}),
                                                        Json::array({"c", "a"})}),
                        "revealed relation must be {(b,a),(c,a)}");
              c.require(model_json["extensions"] == 2, "exactly 2 linear extensions");

              RamUrModel model = ramur_model_from_json(model_json);
              c.require(eval_ramur(model) == demo, "re-evaluation must reproduce every probability");
            });

  criterion(2, "dual attention table reproduces the demo data and is monotone", 0,
            [](Checker& c) {
              AttentionFunction att = fixture::demo_dual_attention();
              RamUrModel model(att.reference_set(), fixture::demo_dual_preference(), att);
              c.require(eval_ramur(model) == fixture::demo_scf(),
                        "dual table must reproduce the data exactly");
              auto diag = check_attention(att, att.reference_set());
              c.require(diag.sums_to_one && diag.full_support, "dual table must be a valid "
                                                               "reference-dependent distribution");
              c.require(diag.monotone, "dual table must be monotone");
            });

  criterion(3, "200 independent-attention round trips recover (E, order, gamma) exactly", 30.0,
            [](Checker& c) {
              int done = 0;
              for (int size = 2; size <= 6; ++size) {
                for (std::uint64_t seed = 1; seed <= 40; ++seed) {
                  auto model = random_ira_model(size, seed * 7919 + static_cast<std::uint64_t>(size));
                  Scf scf = eval_ira(model);
                  auto recovered = represent_ira(scf);
                  bool ok = recovered.preference == model.preference &&
                            recovered.gamma == model.gamma &&
                            recovered.reference_set() == model.reference_set();
                  c.require(ok, "round trip failed at size " + std::to_string(size) + " seed " +
                                    std::to_string(seed));
                  ++done;
                }
              }
              c.require(done == 200, "expected 200 trials");
            });

  criterion(4, "necessity: 200 general + 200 independent random models pass their axioms", 60.0,
            [](Checker& c) {
              int general_trials = 0;
              int ira_trials = 0;
              for (int size = 2; size <= 6; ++size) {
                auto general = exhaustive_necessity(ModelKind::RamUr, size, 40,
                                                    1000 + static_cast<std::uint64_t>(size));
                general_trials += general.trials;
                for (const auto& f : general.failures) {
                  c.require(false, "general model seed " + std::to_string(f.seed) +
                                       " violated " + f.axiom);
                }
                auto independent = exhaustive_necessity(ModelKind::Ira, size, 40,
                                                        2000 + static_cast<std::uint64_t>(size));
                ira_trials += independent.trials;
                for (const auto& f : independent.failures) {
                  c.require(false, "independent model seed " + std::to_string(f.seed) +
                                       " violated " + f.axiom);
                }
              }
              c.require(general_trials == 200 && ira_trials == 200, "expected 200 + 200 trials");
            });

  criterion(5, "brute-force compatible orders equal the revealed relation's extensions", 120.0,
            [](Checker& c) {
              int done = 0;
              for (int size = 2; size <= 5; ++size) {
                int trials = size <= 3 ? 13 : 12;
                for (int t = 0; t < trials; ++t) {
                  std::uint64_t seed = 3000 + static_cast<std::uint64_t>(size * 100 + t);
                  auto model = random_ramur_model(size, seed);
                  Scf scf = eval_ramur(model);
                  auto pairs = compatible_orders(scf);
                  c.require(!pairs.empty(), "no compatible order at seed " + std::to_string(seed));

                  Mask refs = reveal_references(scf);
                  for (const auto& [r, order] : pairs) {
                    c.require(r == refs, "reference set must be unique across compatible pairs");
                  }
                  PreferenceRelation revealed =
                      refs == kEmptyMask ? PreferenceRelation(size)
                                         : build_revealed_relation(scf, refs).relation;
                  auto extensions = linear_extensions(revealed);
                  bool equal = pairs.size() == extensions.size();
                  if (equal) {
                    for (std::size_t i = 0; i < pairs.size(); ++i) {
                      equal = equal && pairs[i].second == extensions[i];
                    }
                  }
                  c.require(equal, "compatible orders differ from the extensions at seed " +
                                       std::to_string(seed));
                  ++done;
                }
              }
              c.require(done == 50, "expected 50 datasets");
            });

  criterion(6, "random utility construction matches the closed form on a 50-instance suite", 0,
            [](Checker& c) {
              int done = 0;
              for (int size = 1; size <= 5; ++size) {
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                  auto model = random_ira_model(size, 4000 + seed * 31 + static_cast<std::uint64_t>(size));
                  RumModel rum = build_rum(model);
                  Rational total(0);
                  for (const auto& [rank, weight] : rum.orders) total += weight;
                  c.require(total == 1, "weights must sum to one");

                  Scf exact = eval_ira(model);
                  for (Mask menu : menus_in_order(size)) {
                    auto probs = eval_rum(rum, menu);
                    for (int a : mask_members(menu)) {
                      c.require(probs[static_cast<std::size_t>(a)] == exact.prob(a, menu),
                                "choice probability mismatch");
                    }
                    c.require(probs[static_cast<std::size_t>(size)] == exact.default_prob(menu),
                              "abstention probability mismatch");
                  }
                  auto diag = verify_rum_restrictions(rum, model);
                  c.require(diag.default_never_beats_reference && diag.reference_dominance,
                            "support restrictions violated");
                  c.require(diag.marginals_match && diag.pairwise_match,
                            "marginal restrictions violated");
                  ++done;
                }
              }
              c.require(done == 50, "expected 50 instances");
            });

  criterion(7, "boundary nesting: full and empty reference sets", 0, [](Checker& c) {
    // full reference set: deterministic choice of the best member everywhere
    GroundSet g = letters(4);
    RamUrIraModel rational_model(g, fixture::pref(g, {"c", "a", "d", "b"}),
                                 {Rational(1), Rational(1), Rational(1), Rational(1)});
    Scf det = eval_ira(rational_model);
    for (Mask menu : menus_in_order(4)) {
      int best = -1;
      for (int x : mask_members(menu)) {
        if (best < 0 || rational_model.preference.prefers(x, best)) best = x;
      }
      c.require(det.prob(best, menu) == 1, "best member must be certain");
      c.require(det.default_prob(menu) == 0, "no abstention under a full reference set");
    }
    auto det_recovered = represent_ira(det);
    c.require(det_recovered.reference_set() == g.full(), "recovered references must be the "
                                                         "whole ground set");
    c.require(det_recovered.preference == rational_model.preference,
              "recovered order must match");

    // empty reference set: pure independent attention comes back exactly
    RamUrIraModel pure(g, fixture::pref(g, {"b", "d", "a", "c"}),
                       {rat(3, 8), rat(1, 2), rat(5, 8), rat(1, 4)});
    Scf scf = eval_ira(pure);
    c.require(reveal_references_ira(scf) == kEmptyMask, "no references must be revealed");
    auto recovered = represent_ira(scf);
    c.require(recovered.reference_set() == kEmptyMask, "recovered reference set must be empty");
    c.require(recovered.preference == pure.preference && recovered.gamma == pure.gamma,
              "pure model must be recovered exactly");
  });

  criterion(8, "100000 draws per menu stay within 0.01 and pass the five axioms at eps 1/50",
            30.0, [](Checker& c) {
              GroundSet g = letters(4);
              RamUrIraModel model(g, fixture::pref(g, {"b", "a", "c", "d"}),
                                  {Rational(1), rat(3, 4), rat(1, 2), rat(1, 4)});
              Scf exact = eval_ira(model);
              SampleRun run = sample_choices(model, 7, 100000);
              Rational bound = rat(1, 100);
              for (Mask menu : menus_in_order(4)) {
                for (int a : mask_members(menu)) {
                  c.require(abs(run.frequency(a, menu) - exact.prob(a, menu)) <= bound,
                            "frequency off by more than 0.01");
                }
                c.require(abs(run.frequency(4, menu) - exact.default_prob(menu)) <= bound,
                          "abstention frequency off by more than 0.01");
              }

              TempDir dir;
              write_dataset_file(dir.file("sampled.json"), run.to_scf());
              int code = run_cli({"check", dir.file("sampled.json"), "--model", "ira", "--eps",
                                  "1/50"});
              c.require(code == cli::kExitOk, "sampled dataset must pass the five axioms at "
                                              "eps 1/50");
            });

  if (g_failed == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failed);
  return 1;
}

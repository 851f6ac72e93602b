#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ramur/errors.hpp"
#include "ramur/rational.hpp"
#include "ramur/scf.hpp"

namespace ramur {

enum class Axiom { Eda, CWarp, Exp, RAsym, RInd, Nt, EdaStar, Reg, Riia };

std::string axiom_name(Axiom axiom);  // "EDA", "C-WARP", "EXP", ...

// A counterexample is a flat list of labeled values: an alternative id (the
// default spelled as "DEFAULT"), a menu, or a rational. Field order is part
// of the report format.
using WitnessValue = std::variant<std::string, std::vector<std::string>, Rational>;

struct Witness {
  std::vector<std::pair<std::string, WitnessValue>> fields;

  Witness& alt(const std::string& key, const std::string& id);
  Witness& menu(const std::string& key, std::vector<std::string> ids);
  Witness& value(const std::string& key, Rational v);

  const WitnessValue& get(const std::string& key) const;  // throws Error
  const std::string& get_alt(const std::string& key) const;
  const std::vector<std::string>& get_menu(const std::string& key) const;
  const Rational& get_value(const std::string& key) const;
};

struct AxiomReport {
  Axiom axiom;
  bool passed = true;
  std::vector<Witness> witnesses;  // sorted: menu cardinality, then lexicographic
};

/// Bundle of failed axiom reports thrown by the identification pipelines.
class AxiomFailure : public Error {
 public:
  explicit AxiomFailure(std::vector<AxiomReport> failing);
  const std::vector<AxiomReport>& reports() const { return reports_; }

 private:
  std::vector<AxiomReport> reports_;
};

// Each checker scans the complete SCF and reports every violation as a
// structured witness. eps relaxes the comparisons for empirical data: an
// equality e1 = e2 becomes |e1 - e2| <= eps, "= 1" and "= 0" likewise, "> 0"
// becomes "> eps", and equalities between ratios are compared after
// cross-multiplication so they stay in probability scale. eps = 0 is exact.

AxiomReport check_eda(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_cwarp(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_exp(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_rasym(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_rind(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_nt(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_eda_star(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_reg(const Scf& scf, const Rational& eps = Rational(0));
AxiomReport check_riia(const Scf& scf, const Rational& eps = Rational(0));

/// EDA, C-WARP, EXP — the general-model characterization.
std::vector<AxiomReport> ramur_axioms(const Scf& scf, const Rational& eps = Rational(0));

/// R-ASYM, R-IND, NT, EDA*, REG — the independent-attention characterization.
std::vector<AxiomReport> ira_axioms(const Scf& scf, const Rational& eps = Rational(0));

bool all_passed(const std::vector<AxiomReport>& reports);
std::vector<AxiomReport> failed_only(const std::vector<AxiomReport>& reports);

}  // namespace ramur

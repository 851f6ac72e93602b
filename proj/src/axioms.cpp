#include "ramur/axioms.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ramur {

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Eda: return "EDA";
    case Axiom::CWarp: return "C-WARP";
    case Axiom::Exp: return "EXP";
    case Axiom::RAsym: return "R-ASYM";
    case Axiom::RInd: return "R-IND";
    case Axiom::Nt: return "NT";
    case Axiom::EdaStar: return "EDA*";
    case Axiom::Reg: return "REG";
    case Axiom::Riia: return "RIIA";
  }
  return "?";
}

Witness& Witness::alt(const std::string& key, const std::string& id) {
  fields.emplace_back(key, WitnessValue{id});
  return *this;
}

Witness& Witness::menu(const std::string& key, std::vector<std::string> ids) {
  fields.emplace_back(key, WitnessValue{std::move(ids)});
  return *this;
}

Witness& Witness::value(const std::string& key, Rational v) {
  fields.emplace_back(key, WitnessValue{std::move(v)});
  return *this;
}

const WitnessValue& Witness::get(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw Error("witness has no field \"" + key + "\"");
}

const std::string& Witness::get_alt(const std::string& key) const {
  return std::get<std::string>(get(key));
}

const std::vector<std::string>& Witness::get_menu(const std::string& key) const {
  return std::get<std::vector<std::string>>(get(key));
}

const Rational& Witness::get_value(const std::string& key) const {
  return std::get<Rational>(get(key));
}

AxiomFailure::AxiomFailure(std::vector<AxiomReport> failing)
    : Error([&] {
        std::ostringstream out;
        out << "axiom failure:";
        for (const auto& r : failing) out << " " << axiom_name(r.axiom);
        return out.str();
      }()),
      reports_(std::move(failing)) {}

namespace {

// Comparison policy. With eps = 0 everything is exact; otherwise equalities
// widen to |a - b| <= eps, strict positivity to "> eps", and equalities of
// ratios are cross-multiplied so the slack stays in probability scale
// instead of being amplified by small denominators.
struct Cmp {
  Rational eps;

  bool eq(const Rational& a, const Rational& b) const { return abs(a - b) <= eps; }
  bool is_one(const Rational& p) const { return eq(p, Rational(1)); }
  bool is_zero(const Rational& p) const { return p <= eps; }
  bool positive(const Rational& p) const { return p > eps; }
  bool at_least(const Rational& a, const Rational& b) const { return a >= b - eps; }
  bool ratio_eq(const Rational& num1, const Rational& den1, const Rational& num2,
                const Rational& den2) const {
    return abs(num1 * den2 - num2 * den1) <= eps;
  }
  bool ratio_is_one(const Rational& num, const Rational& den) const { return eq(num, den); }
};

int value_order(const WitnessValue& v) { return static_cast<int>(v.index()); }

bool value_less(const WitnessValue& a, const WitnessValue& b) {
  if (value_order(a) != value_order(b)) return value_order(a) < value_order(b);
  if (std::holds_alternative<std::string>(a)) {
    return std::get<std::string>(a) < std::get<std::string>(b);
  }
  if (std::holds_alternative<std::vector<std::string>>(a)) {
    const auto& ma = std::get<std::vector<std::string>>(a);
    const auto& mb = std::get<std::vector<std::string>>(b);
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma < mb;
  }
  return std::get<Rational>(a) < std::get<Rational>(b);
}

bool value_equal(const WitnessValue& a, const WitnessValue& b) {
  return !value_less(a, b) && !value_less(b, a);
}

// Canonical witness order: field by field, menus by cardinality then
// lexicographic, ids and values by their natural order.
bool witness_less(const Witness& a, const Witness& b) {
  std::size_t n = std::min(a.fields.size(), b.fields.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!value_equal(a.fields[i].second, b.fields[i].second)) {
      return value_less(a.fields[i].second, b.fields[i].second);
    }
  }
  return a.fields.size() < b.fields.size();
}

void finalize(AxiomReport& report) {
  std::stable_sort(report.witnesses.begin(), report.witnesses.end(), witness_less);
  report.passed = report.witnesses.empty();
}

Mask bit(int x) { return Mask{1} << x; }

}  // namespace

AxiomReport check_eda(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::Eda, true, {}};
  const GroundSet& g = scf.ground();
  for (Mask A : menus_in_order(scf.n())) {
    for (int x : mask_members(A)) {
      if (!c.is_zero(scf.prob(x, A))) continue;
      bool dominated = false;
      for (int y : mask_members(A)) {
        if (y != x && c.is_one(scf.prob(y, bit(x) | bit(y)))) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        Witness w;
        w.menu("A", g.id_list(A)).alt("x", g.id(x));
        report.witnesses.push_back(std::move(w));
      }
    }
    if (c.is_zero(scf.default_prob(A))) {
      // For x = a* the binary menu {x, y} collapses to the singleton {y}.
      bool dominated = false;
      for (int y : mask_members(A)) {
        if (c.is_one(scf.prob(y, bit(y)))) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        Witness w;
        w.menu("A", g.id_list(A)).alt("x", kDefaultId);
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_cwarp(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::CWarp, true, {}};
  const GroundSet& g = scf.ground();
  auto menus = menus_in_order(scf.n());
  for (int y = 0; y < scf.n(); ++y) {
    std::vector<Mask> certain;
    for (Mask A : menus) {
      if ((A & bit(y)) && c.is_one(scf.prob(y, A))) certain.push_back(A);
    }
    if (certain.empty()) continue;
    // x = a*: any certain menu works as the antecedent.
    for (Mask Ap : menus) {
      if ((Ap & bit(y)) == 0) continue;
      Rational px = scf.default_prob(Ap);
      if (c.is_zero(px)) continue;
      Witness w;
      w.alt("y", g.id(y)).menu("A", g.id_list(certain.front()));
      w.alt("x", kDefaultId).menu("Aprime", g.id_list(Ap)).value("pX", px);
      report.witnesses.push_back(std::move(w));
    }
    for (int x = 0; x < scf.n(); ++x) {
      if (x == y) continue;
      std::optional<Mask> antecedent;
      for (Mask A : certain) {
        if (A & bit(x)) {
          antecedent = A;
          break;
        }
      }
      if (!antecedent) continue;
      for (Mask Ap : menus) {
        if ((Ap & bit(x)) == 0 || (Ap & bit(y)) == 0) continue;
        const Rational& px = scf.prob(x, Ap);
        if (c.is_zero(px)) continue;
        Witness w;
        w.alt("y", g.id(y)).menu("A", g.id_list(*antecedent));
        w.alt("x", g.id(x)).menu("Aprime", g.id_list(Ap)).value("pX", px);
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_exp(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::Exp, true, {}};
  const GroundSet& g = scf.ground();
  std::vector<std::pair<Mask, int>> certain;
  for (Mask A : menus_in_order(scf.n())) {
    for (int x : mask_members(A)) {
      if (c.is_one(scf.prob(x, A))) certain.emplace_back(A, x);
    }
  }
  for (std::size_t i = 0; i < certain.size(); ++i) {
    for (std::size_t j = i; j < certain.size(); ++j) {
      auto [A, x] = certain[i];
      auto [B, y] = certain[j];
      Mask U = A | B;
      if (c.is_one(scf.prob(x, U)) || c.is_one(scf.prob(y, U))) continue;
      Witness w;
      w.menu("A", g.id_list(A)).alt("x", g.id(x));
      w.menu("B", g.id_list(B)).alt("y", g.id(y));
      w.value("pX", scf.prob(x, U)).value("pY", scf.prob(y, U));
      report.witnesses.push_back(std::move(w));
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_rasym(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::RAsym, true, {}};
  const GroundSet& g = scf.ground();
  for (Mask A : menus_in_order(scf.n())) {
    auto members = mask_members(A);
    if (members.size() < 2) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        int a = members[i];
        int b = members[j];
        if (!c.positive(scf.prob(a, A)) || !c.positive(scf.prob(b, A))) continue;
        bool one_a = c.ratio_is_one(scf.prob(a, A & ~bit(b)), scf.prob(a, A));
        bool one_b = c.ratio_is_one(scf.prob(b, A & ~bit(a)), scf.prob(b, A));
        if (one_a || one_b) continue;
        Witness w;
        w.menu("A", g.id_list(A)).alt("a", g.id(a)).alt("b", g.id(b));
        w.value("ratioA", scf.prob(a, A & ~bit(b)) / scf.prob(a, A));
        w.value("ratioB", scf.prob(b, A & ~bit(a)) / scf.prob(b, A));
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_rind(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::RInd, true, {}};
  const GroundSet& g = scf.ground();
  auto menus = menus_in_order(scf.n());

  struct Ref {
    Mask menu;
    Rational num, den;
  };
  // The removal ratio for a fixed (a, b) must be the same in every menu where
  // it is defined; each menu is compared against the first eligible one.
  for (int b = 0; b < scf.n(); ++b) {
    for (int a = -1; a < scf.n(); ++a) {  // a == -1 stands for the default
      if (a == b) continue;
      std::optional<Ref> first;
      for (Mask A : menus) {
        if ((A & bit(b)) == 0) continue;
        if (a >= 0 && (A & bit(a)) == 0) continue;
        Rational den = a >= 0 ? scf.prob(a, A) : scf.default_prob(A);
        if (!c.positive(den)) continue;
        Mask without = A & ~bit(b);
        Rational num = a >= 0 ? scf.prob(a, without) : scf.default_prob(without);
        if (!first) {
          first = Ref{A, num, den};
          continue;
        }
        if (c.ratio_eq(first->num, first->den, num, den)) continue;
        Witness w;
        w.alt("a", a >= 0 ? g.id(a) : kDefaultId).alt("b", g.id(b));
        w.menu("A", g.id_list(first->menu)).menu("B", g.id_list(A));
        w.value("ratioA", first->num / first->den).value("ratioB", num / den);
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_nt(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::Nt, true, {}};
  const GroundSet& g = scf.ground();
  for (int x = 0; x < scf.n(); ++x) {
    const Rational& p = scf.prob(x, bit(x));
    if (!c.positive(p)) {
      Witness w;
      w.alt("x", g.id(x)).value("p", p);
      report.witnesses.push_back(std::move(w));
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_eda_star(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::EdaStar, true, {}};
  const GroundSet& g = scf.ground();
  for (Mask A : menus_in_order(scf.n())) {
    if (!c.is_zero(scf.default_prob(A))) continue;
    bool found = false;
    for (int x : mask_members(A)) {
      if (c.is_zero(scf.default_prob(bit(x)))) {
        found = true;
        break;
      }
    }
    if (!found) {
      Witness w;
      w.menu("A", g.id_list(A));
      report.witnesses.push_back(std::move(w));
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_reg(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::Reg, true, {}};
  const GroundSet& g = scf.ground();
  for (Mask B : menus_in_order(scf.n())) {
    if (mask_size(B) < 2) continue;
    for (Mask A : submasks_in_order(B)) {
      if (A == kEmptyMask || A == B) continue;
      for (int a : mask_members(A)) {
        if (c.at_least(scf.prob(a, A), scf.prob(a, B))) continue;
        Witness w;
        w.alt("alt", g.id(a)).menu("A", g.id_list(A)).menu("B", g.id_list(B));
        w.value("pA", scf.prob(a, A)).value("pB", scf.prob(a, B));
        report.witnesses.push_back(std::move(w));
      }
      if (!c.at_least(scf.default_prob(A), scf.default_prob(B))) {
        Witness w;
        w.alt("alt", kDefaultId).menu("A", g.id_list(A)).menu("B", g.id_list(B));
        w.value("pA", scf.default_prob(A)).value("pB", scf.default_prob(B));
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

AxiomReport check_riia(const Scf& scf, const Rational& eps) {
  Cmp c{eps};
  AxiomReport report{Axiom::Riia, true, {}};
  const GroundSet& g = scf.ground();
  for (Mask A : menus_in_order(scf.n())) {
    if (mask_size(A) < 2) continue;
    for (int a : mask_members(A)) {
      if (!c.is_zero(scf.prob(a, A))) continue;
      Mask without = A & ~bit(a);
      for (int b : mask_members(without)) {
        if (c.eq(scf.prob(b, without), scf.prob(b, A))) continue;
        Witness w;
        w.menu("A", g.id_list(A)).alt("a", g.id(a)).alt("b", g.id(b));
        w.value("pWithout", scf.prob(b, without)).value("pWith", scf.prob(b, A));
        report.witnesses.push_back(std::move(w));
      }
    }
  }
  finalize(report);
  return report;
}

std::vector<AxiomReport> ramur_axioms(const Scf& scf, const Rational& eps) {
  return {check_eda(scf, eps), check_cwarp(scf, eps), check_exp(scf, eps)};
}

std::vector<AxiomReport> ira_axioms(const Scf& scf, const Rational& eps) {
  return {check_rasym(scf, eps), check_rind(scf, eps), check_nt(scf, eps),
          check_eda_star(scf, eps), check_reg(scf, eps)};
}

bool all_passed(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.passed; });
}

std::vector<AxiomReport> failed_only(const std::vector<AxiomReport>& reports) {
  std::vector<AxiomReport> out;
  for (const auto& r : reports) {
    if (!r.passed) out.push_back(r);
  }
  return out;
}

}  // namespace ramur

#include "ramur/scf.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ramur {

StochasticChoiceFunction::StochasticChoiceFunction(GroundSet ground,
                                                   std::vector<std::vector<Rational>> table)
    : ground_(std::move(ground)), table_(std::move(table)) {}

StochasticChoiceFunction StochasticChoiceFunction::from_table(
    GroundSet ground, std::vector<std::vector<Rational>> table) {
  int n = ground.size();
  std::size_t rows = std::size_t{1} << n;
  if (table.size() != rows) throw Error("table must have one row per menu mask");
  std::vector<ValidationIssue> issues;
  for (Mask menu = 1; menu < rows; ++menu) {
    auto& row = table[menu];
    if (row.size() != static_cast<std::size_t>(n)) throw Error("table row has wrong width");
    Rational mass(0);
    for (int a = 0; a < n; ++a) {
      const Rational& p = row[static_cast<std::size_t>(a)];
      if ((menu & (Mask{1} << a)) == 0) {
        if (p != 0) {
          issues.push_back({IssueKind::UnknownAlternative, ground.id(a), ground.id_list(menu),
                            "probability assigned to an alternative outside the menu"});
        }
        continue;
      }
      if (p < 0) {
        issues.push_back({IssueKind::NegativeProbability, ground.id(a), ground.id_list(menu),
                          "p = " + rational_str(p)});
      }
      mass += p;
    }
    if (mass > 1) {
      issues.push_back({IssueKind::MassExceedsOne, "", ground.id_list(menu),
                        "menu mass = " + rational_str(mass)});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return StochasticChoiceFunction(std::move(ground), std::move(table));
}

const Rational& StochasticChoiceFunction::prob(int alt, Mask menu) const {
  static const Rational zero(0);
  if (menu == kEmptyMask || (menu & (Mask{1} << alt)) == 0) return zero;
  return table_[menu][static_cast<std::size_t>(alt)];
}

Rational StochasticChoiceFunction::default_prob(Mask menu) const {
  if (menu == kEmptyMask) return Rational(1);
  Rational mass(0);
  for (int a : mask_members(menu)) mass += table_[menu][static_cast<std::size_t>(a)];
  return Rational(1) - mass;
}

bool StochasticChoiceFunction::operator==(const StochasticChoiceFunction& other) const {
  if (!(ground_ == other.ground_)) return false;
  for (Mask menu = 1; menu < table_.size(); ++menu) {
    for (int a : mask_members(menu)) {
      if (prob(a, menu) != other.prob(a, menu)) return false;
    }
  }
  return true;
}

Scf validate_scf(const RawDataset& raw) {
  GroundSet ground(raw.alternatives);  // throws on bad ids
  int n = ground.size();
  std::vector<ValidationIssue> issues;

  std::vector<std::vector<Rational>> table(std::size_t{1} << n,
                                           std::vector<Rational>(static_cast<std::size_t>(n), 0));
  std::set<Mask> seen;
  for (const auto& row : raw.menus) {
    Mask menu = kEmptyMask;
    bool menu_ok = true;
    for (const auto& id : row.menu) {
      if (auto idx = ground.find(id)) {
        menu |= Mask{1} << *idx;
      } else {
        issues.push_back({IssueKind::UnknownAlternative, id, row.menu, "menu member not in ground set"});
        menu_ok = false;
      }
    }
    if (!menu_ok || menu == kEmptyMask) continue;
    if (!seen.insert(menu).second) {
      issues.push_back({IssueKind::DuplicateMenu, "", ground.id_list(menu), "menu listed twice"});
      continue;
    }
    Rational mass(0);
    for (const auto& [id, text] : row.probs) {
      auto idx = ground.find(id);
      if (!idx || (menu & (Mask{1} << *idx)) == 0) {
        issues.push_back({IssueKind::UnknownAlternative, id, ground.id_list(menu),
                          "probability for an alternative outside the menu"});
        continue;
      }
      Rational p;
      try {
        p = parse_rational(text);
      } catch (const ParseError& e) {
        issues.push_back({IssueKind::BadProbability, id, ground.id_list(menu), e.what()});
        continue;
      }
      if (p < 0) {
        issues.push_back({IssueKind::NegativeProbability, id, ground.id_list(menu),
                          "p = " + rational_str(p)});
      }
      table[menu][static_cast<std::size_t>(*idx)] = p;
      mass += p;
    }
    if (mass > 1) {
      issues.push_back({IssueKind::MassExceedsOne, "", ground.id_list(menu),
                        "menu mass = " + rational_str(mass)});
    }
  }
  for (Mask menu : menus_in_order(n)) {
    if (!seen.contains(menu)) {
      issues.push_back({IssueKind::MissingMenu, "", ground.id_list(menu), "menu row missing"});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return Scf::from_table(std::move(ground), std::move(table));
}

}  // namespace ramur

#include "ramur/identify_ira.hpp"

#include "ramur/forward.hpp"

namespace ramur {

namespace {

Mask bit(int x) { return Mask{1} << x; }

}  // namespace

Mask reveal_references_ira(const Scf& scf) {
  Mask from_menus = kEmptyMask;
  for (Mask menu : menus_in_order(scf.n())) {
    for (int x : mask_members(menu)) {
      if (scf.prob(x, menu) == 1) from_menus |= bit(x);
    }
  }
  Mask from_singletons = kEmptyMask;
  for (int x = 0; x < scf.n(); ++x) {
    if (scf.prob(x, bit(x)) == 1) from_singletons |= bit(x);
  }
  // Under regularity both computations agree.
  if (from_menus != from_singletons) {
    throw InconsistentReferences(
        "certain-choice references disagree with singleton references (regularity violation)");
  }
  return from_singletons;
}

std::vector<Rational> gamma_from_singletons(const Scf& scf) {
  std::vector<Rational> gamma;
  gamma.reserve(static_cast<std::size_t>(scf.n()));
  for (int x = 0; x < scf.n(); ++x) gamma.push_back(scf.prob(x, bit(x)));
  return gamma;
}

PreferenceRelation prefs_nonref(const Scf& scf, Mask refs) {
  int n = scf.n();
  PreferenceRelation rel(n);
  auto nonrefs = mask_members(scf.full() & ~refs);
  for (std::size_t i = 0; i < nonrefs.size(); ++i) {
    for (std::size_t j = i + 1; j < nonrefs.size(); ++j) {
      int x = nonrefs[i];
      int y = nonrefs[j];
      Mask pair = bit(x) | bit(y);
      // A better rival shrinks the singleton probability; an ignored one
      // leaves it alone. Both perspectives of the pair must agree.
      bool y_over_x = scf.prob(x, pair) < scf.prob(x, bit(x)) ||
                      scf.prob(y, pair) == scf.prob(y, bit(y));
      bool x_over_y = scf.prob(x, pair) == scf.prob(x, bit(x)) ||
                      scf.prob(y, pair) < scf.prob(y, bit(y));
      if (x_over_y == y_over_x) {
        throw IncoherentElicitation("binary comparison of " + scf.ground().id(x) + " and " +
                                    scf.ground().id(y) +
                                    (x_over_y ? " is revealed both ways" : " is revealed neither way"));
      }
      if (x_over_y) {
        rel.add(x, y);
      } else {
        rel.add(y, x);
      }
    }
  }
  return rel;
}

PreferenceRelation prefs_ref(const Scf& scf, Mask refs) {
  int n = scf.n();
  PreferenceRelation rel(n);
  for (int a : mask_members(refs)) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      if (scf.prob(a, bit(a) | bit(b)) == 1) {
        rel.add(a, b);
      } else {
        rel.add(b, a);
      }
    }
  }
  return rel;
}

RamUrIraModel represent_ira(const Scf& scf) {
  auto reports = ira_axioms(scf);
  if (!all_passed(reports)) throw AxiomFailure(failed_only(reports));

  Mask refs = reveal_references_ira(scf);
  auto gamma = gamma_from_singletons(scf);
  int n = scf.n();

  PreferenceRelation rel = prefs_nonref(scf, refs);
  if (refs != kEmptyMask) {
    for (auto [x, y] : prefs_ref(scf, refs).pairs()) rel.add(x, y);
  }
  if (!rel.is_strict_total_order()) {
    throw IncoherentElicitation("elicited preference is not a strict total order");
  }

  RamUrIraModel model(scf.ground(), rel, std::move(gamma));
  Scf reproduced = eval_ira(model);
  if (!(reproduced == scf)) {
    for (Mask menu : menus_in_order(n)) {
      for (int x : mask_members(menu)) {
        if (reproduced.prob(x, menu) != scf.prob(x, menu)) {
          throw RepresentationMismatch(
              "closed form disagrees with the data at (" + scf.ground().id(x) + ", {" +
              [&] {
                std::string s;
                for (const auto& id : scf.ground().id_list(menu)) {
                  if (!s.empty()) s += ",";
                  s += id;
                }
                return s;
              }() +
              "}): model " + rational_str(reproduced.prob(x, menu)) + " vs data " +
              rational_str(scf.prob(x, menu)));
        }
      }
    }
    throw RepresentationMismatch("closed form disagrees with the data");
  }
  return model;
}

}  // namespace ramur

#include "ramur/identify_ramur.hpp"

#include <bit>
#include <numeric>

#include "ramur/forward.hpp"

namespace ramur {

namespace {

Mask bit(int x) { return Mask{1} << x; }

std::string place(const GroundSet& g, int x, Mask menu) {
  std::string out = "(" + g.id(x) + ", {";
  bool first = true;
  for (const auto& id : g.id_list(menu)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "})";
}

}  // namespace

Mask reveal_references(const Scf& scf) {
  Mask refs = kEmptyMask;
  for (int x = 0; x < scf.n(); ++x) {
    if (scf.prob(x, bit(x)) == 1) refs |= bit(x);
  }
  return refs;
}

RevealedRelation build_revealed_relation(const Scf& scf, Mask refs) {
  if (refs == kEmptyMask) throw Error("revealed relation needs a nonempty reference set");
  int n = scf.n();
  PreferenceRelation rel(n);
  // A reference beats whatever it wins against with certainty.
  for (int x : mask_members(refs)) {
    for (int y = 0; y < n; ++y) {
      if (y != x && scf.prob(x, bit(x) | bit(y)) == 1) rel.add(x, y);
    }
  }
  // A non-reference that survives against a reference beats it.
  for (int x : mask_members(scf.full() & ~refs)) {
    for (int y : mask_members(refs)) {
      if (scf.prob(x, bit(x) | bit(y)) > 0) rel.add(x, y);
    }
  }
  // Non-reference pairs compare only through a reference in between.
  PreferenceRelation base = rel;
  for (int x : mask_members(scf.full() & ~refs)) {
    for (int y : mask_members(scf.full() & ~refs)) {
      if (x == y) continue;
      for (int z : mask_members(refs)) {
        if (base.prefers(x, z) && base.prefers(z, y)) {
          rel.add(x, y);
          break;
        }
      }
    }
  }
  PreferenceRelation closed;
  try {
    closed = transitive_closure(rel);
  } catch (const CycleError& e) {
    throw NotPartialOrder("revealed relation is cyclic; the data contradicts the axioms",
                          e.cycle());
  }
  return {closed, mask_members(refs)};
}

AttentionFunction build_attention(const Scf& scf, Mask refs, const PreferenceRelation& order) {
  const GroundSet& g = scf.ground();
  if (order.size() != scf.n() || !order.is_strict_total_order()) {
    throw Error("build_attention needs a strict total order over the ground set");
  }
  AttentionFunction att(g, refs);
  for (Mask menu : menus_in_order(scf.n())) {
    Mask base_refs = menu & refs;
    for (int x : mask_members(menu)) {
      Mask weakly_below = bit(x) | order.beats(x);
      if (base_refs & ~weakly_below) {
        // A reference in the menu outranks x, so x may carry no probability.
        if (scf.prob(x, menu) != 0) {
          throw ConstructionFailure("order cannot carry positive probability at " +
                                    place(g, x, menu));
        }
        continue;
      }
      // Supported sets for x: everything between {x} ∪ (menu ∩ refs) and the
      // members of the menu x weakly beats. Full support forces p(x, A) > 0.
      if (scf.prob(x, menu) == 0) {
        throw ConstructionFailure("order leaves a support hole at " + place(g, x, menu));
      }
      Mask lo = bit(x) | base_refs;
      Mask hi = weakly_below & menu;
      Mask free = hi & ~lo;
      Rational share = scf.prob(x, menu) / (1 << std::popcount(free));
      Mask sub = free;
      while (true) {
        att.set(lo | sub, menu, share);
        if (sub == kEmptyMask) break;
        sub = (sub - 1) & free;
      }
    }
    Rational abstain = scf.default_prob(menu);
    if (base_refs == kEmptyMask) {
      if (abstain == 0) {
        throw ConstructionFailure("empty consideration set needs positive mass on menu without references");
      }
      att.set(kEmptyMask, menu, abstain);
    } else if (abstain != 0) {
      throw ConstructionFailure("default mass cannot coexist with a reference in the menu");
    }
  }
  return att;
}

RamUrRepresentation represent_ramur(const Scf& scf) {
  auto reports = ramur_axioms(scf);
  if (!all_passed(reports)) throw AxiomFailure(failed_only(reports));

  int n = scf.n();
  Mask refs = reveal_references(scf);
  RamUrIdentification ident;
  ident.revealed_references = refs;
  if (refs == kEmptyMask) {
    // Nothing is revealed; any strict total order represents the data. The
    // canonical pick is the id-sorted order, best first.
    ident.revealed_relation = PreferenceRelation(n);
    std::vector<int> lex(static_cast<std::size_t>(n));
    std::iota(lex.begin(), lex.end(), 0);
    ident.chosen_extension = PreferenceRelation::chain(lex);
    ident.extension_count = count_linear_extensions(ident.revealed_relation);
  } else {
    auto revealed = build_revealed_relation(scf, refs);
    ident.revealed_relation = revealed.relation;
    ident.dominates_default = std::move(revealed.dominates_default);
    ident.chosen_extension = lex_first_extension(ident.revealed_relation);
    ident.extension_count = count_linear_extensions(ident.revealed_relation);
  }

  RamUrModel model(refs, ident.chosen_extension, build_attention(scf, refs, ident.chosen_extension));
  if (!(eval_ramur(model) == scf)) {
    throw RepresentationMismatch("constructed attention function does not reproduce the data");
  }
  return {std::move(ident), std::move(model)};
}

}  // namespace ramur

#pragma once

#include <cstdint>
#include <vector>

#include "ramur/attention.hpp"
#include "ramur/axioms.hpp"
#include "ramur/relation.hpp"
#include "ramur/scf.hpp"

namespace ramur {

// Output of the general-model identification: the revealed reference set,
// the revealed strict partial order over X, and the canonical extension the
// representation was built with. Comparisons against the default are
// metadata; the preference objects rank X only.
struct RamUrIdentification {
  Mask revealed_references = kEmptyMask;
  PreferenceRelation revealed_relation;
  std::vector<int> dominates_default;  // x with x P a* (exactly the references)
  std::uint64_t extension_count = 0;
  PreferenceRelation chosen_extension;  // lexicographically first
};

struct RamUrRepresentation {
  RamUrIdentification identification;
  RamUrModel model;
};

/// Revealed references: the alternatives chosen with certainty from their
/// singleton menu.
Mask reveal_references(const Scf& scf);

struct RevealedRelation {
  PreferenceRelation relation;         // strict partial order over X
  std::vector<int> dominates_default;  // pairs x P a*, kept out of the order
};

/// Revealed relation over X given nonempty references: a reference beats y
/// when it is certain against y in the binary menu; a non-reference beats a
/// reference it survives against; non-reference pairs are compared through a
/// reference in between; then the transitive closure. Throws NotPartialOrder
/// with a witness cycle when the data contradicts the axioms.
RevealedRelation build_revealed_relation(const Scf& scf, Mask refs);

/// Equal-split attention: p(x, A) is divided evenly over the consideration
/// sets between {x} ∪ (A∩refs) and the members of A that x weakly beats; the
/// empty set carries the default mass on reference-free menus. Throws
/// ConstructionFailure when the order cannot carry the data (the result
/// always satisfies the distribution conditions).
AttentionFunction build_attention(const Scf& scf, Mask refs, const PreferenceRelation& order);

/// Full pipeline: checks EDA, C-WARP and EXP (throws AxiomFailure with the
/// failing reports), reveals the references and relation, fixes the
/// lexicographically-first extension, builds the equal-split attention and
/// verifies that evaluating the model reproduces the input exactly.
RamUrRepresentation represent_ramur(const Scf& scf);

}  // namespace ramur

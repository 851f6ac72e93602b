#pragma once

#include <vector>

#include "ramur/attention.hpp"
#include "ramur/axioms.hpp"
#include "ramur/relation.hpp"
#include "ramur/scf.hpp"

namespace ramur {

/// References for the independent-attention model: alternatives chosen with
/// certainty from some menu. Cross-checked against the singleton computation;
/// disagreement (a regularity violation) throws InconsistentReferences.
Mask reveal_references_ira(const Scf& scf);

/// gamma(x) = p(x, {x}) for every alternative.
std::vector<Rational> gamma_from_singletons(const Scf& scf);

/// Strict total order over the non-references, elicited from binary menus:
/// y beats x when removing y's presence raises x back to its singleton
/// probability fails — concretely, x's binary probability drops below its
/// singleton probability. Both perspectives of each pair must agree; throws
/// IncoherentElicitation otherwise.
PreferenceRelation prefs_nonref(const Scf& scf, Mask refs);

/// Pairs touching the references: a reference beats b exactly when it is
/// certain against b in the binary menu.
PreferenceRelation prefs_ref(const Scf& scf, Mask refs);

/// Full pipeline: checks R-ASYM, R-IND, NT, EDA* and REG (throws
/// AxiomFailure), recovers gamma from singletons and the preference from the
/// two elicitations, and verifies the closed form reproduces the data on
/// every menu. Throws RepresentationMismatch with the first offending pair,
/// and IncoherentElicitation when the combined relation is not a strict
/// total order. The recovered model is unique.
RamUrIraModel represent_ira(const Scf& scf);

}  // namespace ramur

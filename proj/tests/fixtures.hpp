#pragma once

#include <string>
#include <vector>

#include "ramur/attention.hpp"
#include "ramur/scf.hpp"

namespace ramur::fixture {

// Three-alternative dataset over {a, b, c} with one attention-privileged
// alternative: a is certain from its singleton, everything else is
// stochastic, and b gains probability when a joins {b, c}, so regularity
// fails while the general-model axioms hold. Used across the suites and
// mirrored by data/demo_dataset.json.
RawDataset demo_raw();
Scf demo_scf();

/// Strict total order from best-first ids.
PreferenceRelation pref(const GroundSet& ground, const std::vector<std::string>& best_first);

// Hand-built monotonic attention table over demo_scf()'s ground set that
// represents the same data under the preference c > b > a — the second of
// the two compatible orders.
AttentionFunction demo_dual_attention();
PreferenceRelation demo_dual_preference();

}  // namespace ramur::fixture

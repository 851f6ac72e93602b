#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramur/relation.hpp"
#include "ramur/scf.hpp"

namespace ramur {

inline constexpr int kDefaultOracleCap = 6;

/// Brute force over every strict total order: returns the (references,
/// order) pairs whose equal-split construction yields a valid attention
/// function that reproduces the data exactly. Throws TooLarge beyond cap.
std::vector<std::pair<Mask, PreferenceRelation>> compatible_orders(const Scf& scf,
                                                                   int cap = kDefaultOracleCap);

enum class ModelKind { RamUr, Ira };

struct NecessityFailure {
  std::uint64_t seed = 0;
  std::string axiom;
};

struct NecessityReport {
  int trials = 0;
  std::vector<NecessityFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

/// Generates `trials` seeded random models of the given kind and size,
/// evaluates each, and runs the axiom suite the model class must satisfy.
/// Any violation is reported with the generating seed.
NecessityReport exhaustive_necessity(ModelKind kind, int size, int trials,
                                     std::uint64_t seed0 = 1);

}  // namespace ramur

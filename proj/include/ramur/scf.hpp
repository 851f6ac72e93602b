#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramur/errors.hpp"
#include "ramur/ground.hpp"
#include "ramur/rational.hpp"

namespace ramur {

// File-shaped dataset before validation. Probabilities are rational text;
// a member missing from probs counts as zero. The default alternative never
// appears in files, its probability is always derived.
struct RawMenuRow {
  std::vector<std::string> menu;
  std::map<std::string, std::string> probs;
};

struct RawDataset {
  std::vector<std::string> alternatives;
  std::vector<RawMenuRow> menus;
};

// Complete stochastic choice data: a probability for every alternative in
// every nonempty menu of the ground set, with nonnegative entries and menu
// mass at most one. Immutable once built.
class StochasticChoiceFunction {
 public:
  /// table[menu mask][alternative index]; row 0 is ignored, entries for
  /// non-members must be zero. Throws ValidationError on any violation.
  static StochasticChoiceFunction from_table(GroundSet ground,
                                             std::vector<std::vector<Rational>> table);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }

  /// p(alt, menu); zero when alt is not a member of menu.
  const Rational& prob(int alt, Mask menu) const;

  /// p(a*, menu) = 1 - menu mass; 1 on the empty menu by convention.
  Rational default_prob(Mask menu) const;

  bool operator==(const StochasticChoiceFunction& other) const;

 private:
  StochasticChoiceFunction(GroundSet ground, std::vector<std::vector<Rational>> table);

  GroundSet ground_;
  std::vector<std::vector<Rational>> table_;
};

using Scf = StochasticChoiceFunction;

/// Parses and checks a raw dataset. Throws ValidationError carrying every
/// violated condition with the offending alternative and menu.
Scf validate_scf(const RawDataset& raw);

}  // namespace ramur

#pragma once

#include <map>
#include <vector>

#include "ramur/ground.hpp"
#include "ramur/rational.hpp"
#include "ramur/relation.hpp"

namespace ramur {

// Distribution over consideration sets, one per menu, tagged with the
// reference set it is meant to respect. Storage is permissive: the
// distribution conditions (mass one per menu, support exactly the sets
// between A∩E and A) are enforced by check_attention and by the evaluators,
// so diagnostics can inspect malformed tables.
class AttentionFunction {
 public:
  using MenuTable = std::map<Mask, Rational, MaskLexLess>;

  AttentionFunction(GroundSet ground, Mask reference_set);

  const GroundSet& ground() const { return ground_; }
  Mask reference_set() const { return reference_set_; }

  /// Stores mass for (consideration, menu). Requires consideration ⊆ menu,
  /// menu nonempty, mass in [0, 1]; zero mass erases the entry.
  void set(Mask consideration, Mask menu, Rational mass);

  /// Zero when no entry is stored.
  Rational mass(Mask consideration, Mask menu) const;

  /// Positive entries of one menu in canonical consideration-set order.
  const MenuTable& entries(Mask menu) const;

  bool operator==(const AttentionFunction& other) const = default;

 private:
  GroundSet ground_;
  Mask reference_set_;
  std::vector<MenuTable> table_;  // indexed by menu mask
};

// Reference set, strict total order, and a reference-dependent attention
// function over one ground set.
struct RamUrModel {
  Mask reference_set;
  PreferenceRelation preference;
  AttentionFunction attention;

  /// Checks structural consistency (matching reference set and ground set,
  /// total preference); distribution validity is checked on evaluation.
  RamUrModel(Mask reference_set, PreferenceRelation preference, AttentionFunction attention);

  const GroundSet& ground() const { return attention.ground(); }
};

// Independent random attention special case: a strict total order plus an
// attention parameter gamma(x) in (0, 1] per alternative. The reference set
// is derived as the alternatives with gamma equal to one.
struct RamUrIraModel {
  GroundSet ground;
  PreferenceRelation preference;
  std::vector<Rational> gamma;

  RamUrIraModel(GroundSet ground, PreferenceRelation preference, std::vector<Rational> gamma);

  Mask reference_set() const;
};

}  // namespace ramur

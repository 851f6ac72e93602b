#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ramur/ground.hpp"

namespace ramur {

// Strict binary relation over alternative indices 0..n-1, stored as one
// bitmask per alternative: prefers(x, y) means x beats y. Strict partial and
// total orders are the usual special cases.
class PreferenceRelation {
 public:
  PreferenceRelation() = default;  // empty relation over nothing
  explicit PreferenceRelation(int n);
  static PreferenceRelation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  /// Strict total order listing alternatives best-first.
  static PreferenceRelation chain(const std::vector<int>& best_first);

  int size() const { return n_; }
  bool prefers(int x, int y) const;
  void add(int x, int y);
  Mask beats(int x) const { return beats_[static_cast<std::size_t>(x)]; }
  Mask dominators(int x) const;  // everything that beats x

  std::vector<std::pair<int, int>> pairs() const;  // ascending (x, y)
  std::size_t pair_count() const;

  bool irreflexive() const;
  bool asymmetric() const;
  bool transitive() const;
  bool is_strict_partial_order() const;
  bool is_strict_total_order() const;
  bool contains(const PreferenceRelation& other) const;

  /// Best-first index sequence; requires a strict total order.
  std::vector<int> ranking() const;

  bool operator==(const PreferenceRelation& other) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> beats_;
};

/// Smallest transitive superset. Throws CycleError (with a witness cycle)
/// when the closure would have to be reflexive somewhere.
PreferenceRelation transitive_closure(const PreferenceRelation& rel);

inline constexpr int kDefaultExtensionCap = 10;

/// Every strict total order containing rel, in lexicographic order of the
/// best-first index sequences. Throws GroundSetTooLarge beyond the cap and
/// Error when rel is not a strict partial order.
std::vector<PreferenceRelation> linear_extensions(const PreferenceRelation& rel,
                                                  int cap = kDefaultExtensionCap);

std::uint64_t count_linear_extensions(const PreferenceRelation& rel);
PreferenceRelation lex_first_extension(const PreferenceRelation& rel);

}  // namespace ramur

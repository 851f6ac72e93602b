#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramur {

// Menus and consideration sets are bitmasks over the sorted ids of a ground
// set: bit i stands for the i-th id in ascending order.
using Mask = std::uint32_t;

inline constexpr Mask kEmptyMask = 0;

// A complete dataset must list every nonempty menu, so ground sets beyond
// this are rejected up front (65535 menus at the cap).
inline constexpr int kMaxAlternatives = 16;

// Reserved label for the default alternative a* (abstention). Never a member
// of a ground set; appears in reports, frequency tables and RUM rankings.
inline constexpr const char* kDefaultId = "DEFAULT";

class GroundSet {
 public:
  /// Sorts and validates the ids: unique, nonempty, no '/' or whitespace,
  /// and not the reserved default label. Throws ValidationError.
  explicit GroundSet(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  Mask full() const { return (Mask{1} << ids_.size()) - 1; }
  const std::string& id(int index) const { return ids_[static_cast<std::size_t>(index)]; }
  const std::vector<std::string>& ids() const { return ids_; }

  std::optional<int> find(const std::string& id) const;
  int index_of(const std::string& id) const;  // throws Error for unknown ids

  std::vector<std::string> id_list(Mask members) const;
  Mask mask_of(const std::vector<std::string>& members) const;  // throws Error

  bool operator==(const GroundSet& other) const = default;

 private:
  std::vector<std::string> ids_;
};

int mask_size(Mask m);
std::vector<int> mask_members(Mask m);

/// Canonical menu order: cardinality first, then the ascending index
/// sequences lexicographically. All report and file output uses it.
bool mask_lex_less(Mask a, Mask b);

struct MaskLexLess {
  bool operator()(Mask a, Mask b) const { return mask_lex_less(a, b); }
};

std::vector<Mask> menus_in_order(int n);        // all nonempty masks
std::vector<Mask> submasks_in_order(Mask m);    // all submasks, empty included

}  // namespace ramur

#include "ramur/ground.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ramur/errors.hpp"

namespace ramur {

namespace {

bool valid_id(const std::string& id) {
  if (id.empty() || id == kDefaultId) return false;
  for (char c : id) {
    if (c == '/' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  std::vector<ValidationIssue> issues;
  if (ids_.empty()) {
    issues.push_back({IssueKind::BadAlternativeId, "", {}, "ground set is empty"});
  }
  if (static_cast<int>(ids_.size()) > kMaxAlternatives) {
    throw GroundSetTooLarge("ground set has " + std::to_string(ids_.size()) +
                            " alternatives; the cap is " + std::to_string(kMaxAlternatives));
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!valid_id(ids_[i])) {
      issues.push_back({IssueKind::BadAlternativeId, ids_[i], {}, "invalid alternative id"});
    }
    if (i > 0 && ids_[i] == ids_[i - 1]) {
      issues.push_back({IssueKind::DuplicateAlternative, ids_[i], {}, "duplicate alternative id"});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::optional<int> GroundSet::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int GroundSet::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error("unknown alternative id: \"" + id + "\"");
}

std::vector<std::string> GroundSet::id_list(Mask members) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (members & (Mask{1} << i)) out.push_back(ids_[static_cast<std::size_t>(i)]);
  }
  return out;
}

Mask GroundSet::mask_of(const std::vector<std::string>& members) const {
  Mask m = kEmptyMask;
  for (const auto& id : members) m |= Mask{1} << index_of(id);
  return m;
}

int mask_size(Mask m) { return std::popcount(m); }

std::vector<int> mask_members(Mask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i) {
    if (m & (Mask{1} << i)) out.push_back(i);
  }
  return out;
}

bool mask_lex_less(Mask a, Mask b) {
  int ca = std::popcount(a);
  int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // Equal cardinality: the mask holding the lowest differing index comes
  // first in the index-sequence lexicographic order.
  Mask diff = a ^ b;
  Mask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

std::vector<Mask> menus_in_order(int n) {
  std::vector<Mask> menus;
  Mask full = (Mask{1} << n) - 1;
  menus.reserve(full);
  for (Mask m = 1; m <= full; ++m) menus.push_back(m);
  std::sort(menus.begin(), menus.end(), mask_lex_less);
  return menus;
}

std::vector<Mask> submasks_in_order(Mask m) {
  std::vector<Mask> subs;
  Mask s = m;
  while (true) {
    subs.push_back(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
  std::sort(subs.begin(), subs.end(), mask_lex_less);
  return subs;
}

}  // namespace ramur

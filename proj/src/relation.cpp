#include "ramur/relation.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "ramur/errors.hpp"

namespace ramur {

PreferenceRelation::PreferenceRelation(int n)
    : n_(n), beats_(static_cast<std::size_t>(n), kEmptyMask) {}

PreferenceRelation PreferenceRelation::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  PreferenceRelation rel(n);
  for (auto [x, y] : pairs) rel.add(x, y);
  return rel;
}

PreferenceRelation PreferenceRelation::chain(const std::vector<int>& best_first) {
  PreferenceRelation rel(static_cast<int>(best_first.size()));
  for (std::size_t i = 0; i < best_first.size(); ++i) {
    for (std::size_t j = i + 1; j < best_first.size(); ++j) {
      rel.add(best_first[i], best_first[j]);
    }
  }
  return rel;
}

bool PreferenceRelation::prefers(int x, int y) const {
  return (beats_[static_cast<std::size_t>(x)] & (Mask{1} << y)) != 0;
}

void PreferenceRelation::add(int x, int y) {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) throw Error("relation pair out of range");
  beats_[static_cast<std::size_t>(x)] |= Mask{1} << y;
}

Mask PreferenceRelation::dominators(int x) const {
  Mask dom = kEmptyMask;
  for (int y = 0; y < n_; ++y) {
    if (prefers(y, x)) dom |= Mask{1} << y;
  }
  return dom;
}

std::vector<std::pair<int, int>> PreferenceRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (prefers(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t PreferenceRelation::pair_count() const {
  std::size_t total = 0;
  for (int x = 0; x < n_; ++x) total += static_cast<std::size_t>(std::popcount(beats(x)));
  return total;
}

bool PreferenceRelation::irreflexive() const {
  for (int x = 0; x < n_; ++x) {
    if (prefers(x, x)) return false;
  }
  return true;
}

bool PreferenceRelation::asymmetric() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (prefers(x, y) && prefers(y, x)) return false;
    }
  }
  return true;
}

bool PreferenceRelation::transitive() const {
  for (int x = 0; x < n_; ++x) {
    Mask reach = beats(x);
    for (int y = 0; y < n_; ++y) {
      if ((reach & (Mask{1} << y)) && (beats(y) & ~reach)) return false;
    }
  }
  return true;
}

bool PreferenceRelation::is_strict_partial_order() const {
  return irreflexive() && asymmetric() && transitive();
}

bool PreferenceRelation::is_strict_total_order() const {
  if (!is_strict_partial_order()) return false;
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (!prefers(x, y) && !prefers(y, x)) return false;
    }
  }
  return true;
}

bool PreferenceRelation::contains(const PreferenceRelation& other) const {
  if (other.n_ != n_) return false;
  for (int x = 0; x < n_; ++x) {
    if (other.beats(x) & ~beats(x)) return false;
  }
  return true;
}

std::vector<int> PreferenceRelation::ranking() const {
  if (!is_strict_total_order()) throw Error("ranking requires a strict total order");
  std::vector<int> order(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    // The best alternative beats n-1 others, the worst none.
    order[static_cast<std::size_t>(n_ - 1 - std::popcount(beats(x)))] = x;
  }
  return order;
}

namespace {

// Shortest cycle through `start` over the original edges, for error reports.
std::vector<int> find_cycle(const PreferenceRelation& rel, int start) {
  std::vector<int> parent(static_cast<std::size_t>(rel.size()), -1);
  std::queue<int> queue;
  queue.push(start);
  std::vector<bool> seen(static_cast<std::size_t>(rel.size()), false);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int y : mask_members(rel.beats(x))) {
      if (y == start) {
        std::vector<int> cycle{start};
        for (int v = x; v != start && v != -1; v = parent[static_cast<std::size_t>(v)]) {
          cycle.push_back(v);
        }
        std::reverse(cycle.begin() + 1, cycle.end());
        cycle.push_back(start);
        return cycle;
      }
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        parent[static_cast<std::size_t>(y)] = x;
        queue.push(y);
      }
    }
  }
  return {start, start};
}

}  // namespace

PreferenceRelation transitive_closure(const PreferenceRelation& rel) {
  int n = rel.size();
  PreferenceRelation closed = rel;
  std::vector<Mask> reach(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) reach[static_cast<std::size_t>(x)] = rel.beats(x);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if (reach[static_cast<std::size_t>(x)] & (Mask{1} << k)) {
        reach[static_cast<std::size_t>(x)] |= reach[static_cast<std::size_t>(k)];
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (reach[static_cast<std::size_t>(x)] & (Mask{1} << x)) {
      throw CycleError("transitive closure is cyclic", find_cycle(rel, x));
    }
    for (int y : mask_members(reach[static_cast<std::size_t>(x)])) closed.add(x, y);
  }
  return closed;
}

namespace {

void extend_recursive(const PreferenceRelation& rel, const std::vector<Mask>& dominators,
                      Mask placed, std::vector<int>& prefix,
                      std::vector<PreferenceRelation>& out) {
  int n = rel.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(PreferenceRelation::chain(prefix));
    return;
  }
  for (int x = 0; x < n; ++x) {
    Mask bit = Mask{1} << x;
    if ((placed & bit) || (dominators[static_cast<std::size_t>(x)] & ~placed)) continue;
    prefix.push_back(x);
    extend_recursive(rel, dominators, placed | bit, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Mask> dominator_table(const PreferenceRelation& rel) {
  std::vector<Mask> dominators(static_cast<std::size_t>(rel.size()));
  for (int x = 0; x < rel.size(); ++x) dominators[static_cast<std::size_t>(x)] = rel.dominators(x);
  return dominators;
}

}  // namespace

std::vector<PreferenceRelation> linear_extensions(const PreferenceRelation& rel, int cap) {
  if (rel.size() > cap) {
    throw GroundSetTooLarge("linear extension enumeration over " + std::to_string(rel.size()) +
                            " alternatives exceeds the cap of " + std::to_string(cap));
  }
  if (!rel.is_strict_partial_order()) throw Error("relation is not a strict partial order");
  std::vector<PreferenceRelation> out;
  std::vector<int> prefix;
  extend_recursive(rel, dominator_table(rel), kEmptyMask, prefix, out);
  return out;
}

std::uint64_t count_linear_extensions(const PreferenceRelation& rel) {
  if (!rel.is_strict_partial_order()) throw Error("relation is not a strict partial order");
  int n = rel.size();
  auto dominators = dominator_table(rel);
  Mask full = (Mask{1} << n) - 1;
  // counts[placed] = number of ways to finish once `placed` is ranked.
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(full) + 1, 0);
  counts[full] = 1;
  for (std::int64_t p = static_cast<std::int64_t>(full) - 1; p >= 0; --p) {
    Mask placed = static_cast<Mask>(p);
    std::uint64_t total = 0;
    for (int x = 0; x < n; ++x) {
      Mask bit = Mask{1} << x;
      if ((placed & bit) || (dominators[static_cast<std::size_t>(x)] & ~placed)) continue;
      total += counts[placed | bit];
    }
    counts[placed] = total;
  }
  return counts[kEmptyMask];
}

PreferenceRelation lex_first_extension(const PreferenceRelation& rel) {
  if (!rel.is_strict_partial_order()) throw Error("relation is not a strict partial order");
  int n = rel.size();
  auto dominators = dominator_table(rel);
  Mask placed = kEmptyMask;
  std::vector<int> order;
  while (static_cast<int>(order.size()) < n) {
    for (int x = 0; x < n; ++x) {
      Mask bit = Mask{1} << x;
      if ((placed & bit) || (dominators[static_cast<std::size_t>(x)] & ~placed)) continue;
      order.push_back(x);
      placed |= bit;
      break;
    }
  }
  return PreferenceRelation::chain(order);
}

}  // namespace ramur

#include "ramur/rum.hpp"

#include <algorithm>

#include "ramur/errors.hpp"

namespace ramur {

namespace {

Mask bit(int x) { return Mask{1} << x; }

}  // namespace

std::vector<std::string> RumModel::rank_ids(std::size_t order_index) const {
  std::vector<std::string> ids;
  for (int x : orders[order_index].first) {
    ids.push_back(x == ground.size() ? std::string(kDefaultId) : ground.id(x));
  }
  return ids;
}

RumModel build_rum(const RamUrIraModel& model) {
  const GroundSet& g = model.ground;
  int n = g.size();
  RumModel rum{g, {}};
  auto ranking = model.preference.ranking();
  for (Mask considered = 0; considered <= g.full(); ++considered) {
    Rational weight(1);
    for (int x = 0; x < n; ++x) {
      if (considered & bit(x)) {
        weight *= model.gamma[static_cast<std::size_t>(x)];
      } else {
        weight *= Rational(1) - model.gamma[static_cast<std::size_t>(x)];
      }
      if (weight == 0) break;
    }
    if (weight == 0) continue;
    // The considered subset ranks above the default in preference order;
    // everything else goes below it, also in preference order.
    std::vector<int> rank;
    rank.reserve(static_cast<std::size_t>(n) + 1);
    for (int x : ranking) {
      if (considered & bit(x)) rank.push_back(x);
    }
    rank.push_back(n);
    for (int x : ranking) {
      if ((considered & bit(x)) == 0) rank.push_back(x);
    }
    rum.orders.emplace_back(std::move(rank), std::move(weight));
  }
  std::sort(rum.orders.begin(), rum.orders.end(),
            [&rum](const auto& a, const auto& b) {
              auto ids = [&rum](const std::vector<int>& rank) {
                std::vector<std::string> out;
                for (int x : rank) {
                  out.push_back(x == rum.ground.size() ? std::string(kDefaultId)
                                                       : rum.ground.id(x));
                }
                return out;
              };
              return ids(a.first) < ids(b.first);
            });
  return rum;
}

std::vector<Rational> eval_rum(const RumModel& rum, Mask menu) {
  int n = rum.ground.size();
  if (menu == kEmptyMask || (menu & ~rum.ground.full())) throw Error("bad menu mask");
  std::vector<Rational> probs(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [rank, weight] : rum.orders) {
    for (int x : rank) {
      if (x == n || (menu & bit(x))) {
        probs[static_cast<std::size_t>(x)] += weight;
        break;
      }
    }
  }
  return probs;
}

RumDiagnostic verify_rum_restrictions(const RumModel& rum, const RamUrIraModel& model) {
  RumDiagnostic diag;
  const GroundSet& g = model.ground;
  int n = g.size();
  Mask refs = model.reference_set();

  std::vector<Rational> above_default(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Rational>> pair_above(static_cast<std::size_t>(n),
                                                std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (const auto& [rank, weight] : rum.orders) {
    std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < rank.size(); ++i) {
      position[static_cast<std::size_t>(rank[i])] = static_cast<int>(i);
    }
    int default_pos = position[static_cast<std::size_t>(n)];
    for (int e : mask_members(refs)) {
      if (default_pos < position[static_cast<std::size_t>(e)]) {
        diag.default_never_beats_reference = false;
        diag.notes.push_back("support ranks " + std::string(kDefaultId) + " above reference " +
                             g.id(e));
      }
      for (int b = 0; b < n; ++b) {
        if (b != e && model.preference.prefers(e, b) &&
            position[static_cast<std::size_t>(b)] < position[static_cast<std::size_t>(e)]) {
          diag.reference_dominance = false;
          diag.notes.push_back("support ranks " + g.id(b) + " above dominating reference " +
                               g.id(e));
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      if (position[static_cast<std::size_t>(a)] < default_pos) {
        above_default[static_cast<std::size_t>(a)] += weight;
        for (int b = a + 1; b < n; ++b) {
          if (position[static_cast<std::size_t>(b)] < default_pos) {
            pair_above[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += weight;
          }
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (above_default[static_cast<std::size_t>(a)] != model.gamma[static_cast<std::size_t>(a)]) {
      diag.marginals_match = false;
      diag.notes.push_back("marginal of " + g.id(a) + " above " + kDefaultId + " is " +
                           rational_str(above_default[static_cast<std::size_t>(a)]) +
                           ", expected " +
                           rational_str(model.gamma[static_cast<std::size_t>(a)]));
    }
    for (int b = a + 1; b < n; ++b) {
      Rational expected =
          model.gamma[static_cast<std::size_t>(a)] * model.gamma[static_cast<std::size_t>(b)];
      if (pair_above[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != expected) {
        diag.pairwise_match = false;
        diag.notes.push_back("pairwise weight of " + g.id(a) + ", " + g.id(b) + " above " +
                             kDefaultId + " is off");
      }
    }
  }
  return diag;
}

}  // namespace ramur

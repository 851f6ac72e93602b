#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramur/attention.hpp"
#include "ramur/ground.hpp"
#include "ramur/rational.hpp"

namespace ramur {

// Distribution over strict total orders covering the alternatives and the
// default; an order is a best-first index sequence of length n+1 where index
// n stands for DEFAULT. Only positive weights are kept, sorted by the ranked
// id sequence.
struct RumModel {
  GroundSet ground;
  std::vector<std::pair<std::vector<int>, Rational>> orders;

  std::vector<std::string> rank_ids(std::size_t order_index) const;
};

/// One order per considered subset S: weight is the product of gamma over S
/// and (1 - gamma) off S; S ranks above DEFAULT in preference order and the
/// rest below it, also in preference order.
RumModel build_rum(const RamUrIraModel& model);

/// Choice probabilities over menu ∪ {DEFAULT} (default last): each order
/// contributes its weight to its best available element.
std::vector<Rational> eval_rum(const RumModel& rum, Mask menu);

struct RumDiagnostic {
  bool default_never_beats_reference = true;  // no support order ranks DEFAULT above a reference
  bool reference_dominance = true;            // no support order ranks b above a reference that beats b
  bool marginals_match = true;                // weight of {a above DEFAULT} equals gamma(a)
  bool pairwise_match = true;                 // weight of {a and b above DEFAULT} equals gamma(a)gamma(b)
  std::vector<std::string> notes;

  bool all_ok() const {
    return default_never_beats_reference && reference_dominance && marginals_match &&
           pairwise_match;
  }
};

RumDiagnostic verify_rum_restrictions(const RumModel& rum, const RamUrIraModel& model);

}  // namespace ramur

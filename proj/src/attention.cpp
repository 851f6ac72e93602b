#include "ramur/attention.hpp"

#include <utility>

#include "ramur/errors.hpp"

namespace ramur {

AttentionFunction::AttentionFunction(GroundSet ground, Mask reference_set)
    : ground_(std::move(ground)),
      reference_set_(reference_set),
      table_(std::size_t{1} << ground_.size()) {
  if (reference_set_ & ~ground_.full()) throw Error("reference set outside the ground set");
}

void AttentionFunction::set(Mask consideration, Mask menu, Rational mass) {
  if (menu == kEmptyMask || (menu & ~ground_.full())) throw Error("bad menu mask");
  if (consideration & ~menu) throw Error("consideration set is not a subset of the menu");
  if (mass < 0 || mass > 1) throw Error("attention mass outside [0, 1]");
  auto& row = table_[menu];
  if (mass == 0) {
    row.erase(consideration);
  } else {
    row[consideration] = std::move(mass);
  }
}

Rational AttentionFunction::mass(Mask consideration, Mask menu) const {
  if (menu == kEmptyMask || menu > ground_.full()) return Rational(0);
  const auto& row = table_[menu];
  auto it = row.find(consideration);
  return it == row.end() ? Rational(0) : it->second;
}

const AttentionFunction::MenuTable& AttentionFunction::entries(Mask menu) const {
  if (menu == kEmptyMask || menu > ground_.full()) throw Error("bad menu mask");
  return table_[menu];
}

RamUrModel::RamUrModel(Mask reference_set_in, PreferenceRelation preference_in,
                       AttentionFunction attention_in)
    : reference_set(reference_set_in),
      preference(std::move(preference_in)),
      attention(std::move(attention_in)) {
  if (attention.reference_set() != reference_set) {
    throw Error("attention function is tagged with a different reference set");
  }
  if (preference.size() != attention.ground().size() || !preference.is_strict_total_order()) {
    throw Error("preference must be a strict total order over the ground set");
  }
}

RamUrIraModel::RamUrIraModel(GroundSet ground_in, PreferenceRelation preference_in,
                             std::vector<Rational> gamma_in)
    : ground(std::move(ground_in)),
      preference(std::move(preference_in)),
      gamma(std::move(gamma_in)) {
  if (preference.size() != ground.size() || !preference.is_strict_total_order()) {
    throw Error("preference must be a strict total order over the ground set");
  }
  if (gamma.size() != static_cast<std::size_t>(ground.size())) {
    throw Error("gamma must assign a value to every alternative");
  }
  for (const auto& g : gamma) {
    if (g <= 0 || g > 1) throw Error("gamma values must lie in (0, 1]");
  }
}

Mask RamUrIraModel::reference_set() const {
  Mask refs = kEmptyMask;
  for (int x = 0; x < ground.size(); ++x) {
    if (gamma[static_cast<std::size_t>(x)] == 1) refs |= Mask{1} << x;
  }
  return refs;
}

}  // namespace ramur

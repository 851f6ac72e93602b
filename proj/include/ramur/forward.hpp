#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramur/attention.hpp"
#include "ramur/scf.hpp"

namespace ramur {

// Distribution validity of an attention table (mass one per menu, support
// exactly the interval between A∩E and A), plus the monotonicity diagnostic,
// which is reported separately because it is not part of validity.
struct AttentionDiagnostic {
  bool sums_to_one = true;
  bool full_support = true;
  bool monotone = true;
  std::vector<std::string> notes;

  bool valid() const { return sums_to_one && full_support; }
};

AttentionDiagnostic check_attention(const AttentionFunction& attention, Mask reference_set);

/// Plain random attention (empty reference set): chance that x is chosen from
/// A is the attention mass of the consideration sets where x is best.
/// Throws InvalidAttention when the table is not a valid distribution.
Scf eval_ram(const AttentionFunction& attention, const PreferenceRelation& order);

/// Reference-dependent evaluation; the default picks up the mass of the
/// empty consideration set. Throws InvalidAttention.
Scf eval_ramur(const RamUrModel& model);

/// Closed form p(x, A) = gamma(x) * prod over better y in A of (1 - gamma(y)).
Scf eval_ira(const RamUrIraModel& model);

/// Product-form attention table induced by gamma: independent inclusion of
/// each member. Zero-mass sets are omitted.
AttentionFunction ira_attention(const RamUrIraModel& model);

// Seeded Monte Carlo draws. Each menu gets its own deterministic stream
// (mt19937_64 seeded with seed XOR a stable hash of the menu ids), so results
// do not depend on menu evaluation order.
class SampleRun {
 public:
  SampleRun(GroundSet ground, std::uint64_t seed, std::uint64_t draws_per_menu);

  const GroundSet& ground() const { return ground_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws_per_menu() const { return draws_; }

  /// alt = ground index, or ground.size() for the default.
  std::uint64_t count(int alt, Mask menu) const;
  Rational frequency(int alt, Mask menu) const;

  void record(int alt, Mask menu);  // used by the samplers

  /// Empirical frequencies of the real alternatives as a dataset.
  Scf to_scf() const;

 private:
  GroundSet ground_;
  std::uint64_t seed_ = 0;
  std::uint64_t draws_ = 0;
  std::vector<std::vector<std::uint64_t>> counts_;
};

SampleRun sample_choices(const RamUrModel& model, std::uint64_t seed, std::uint64_t draws_per_menu);
SampleRun sample_choices(const RamUrIraModel& model, std::uint64_t seed, std::uint64_t draws_per_menu);

/// Stable 64-bit hash of a menu's member ids (FNV-1a over "a/b/c").
std::uint64_t menu_stream_hash(const GroundSet& ground, Mask menu);

// Seeded random model generators for the necessity and round-trip suites.
// Sizes are capped at 10. Attention masses and gamma values are small exact
// rationals so round trips stay cheap.
RamUrModel random_ramur_model(int size, std::uint64_t seed);
RamUrIraModel random_ira_model(int size, std::uint64_t seed);

}  // namespace ramur

#include "ramur/forward.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <utility>

#include "ramur/errors.hpp"

namespace ramur {

namespace {

Mask bit(int x) { return Mask{1} << x; }

// Best-first rank position per alternative; lower is better.
std::vector<int> rank_positions(const PreferenceRelation& order) {
  std::vector<int> pos(static_cast<std::size_t>(order.size()));
  auto ranking = order.ranking();
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    pos[static_cast<std::size_t>(ranking[r])] = static_cast<int>(r);
  }
  return pos;
}

int best_member(Mask set, const std::vector<int>& pos) {
  int best = -1;
  for (int x : mask_members(set)) {
    if (best < 0 || pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(best)]) {
      best = x;
    }
  }
  return best;
}

constexpr std::size_t kMaxNotes = 32;

void note(std::vector<std::string>& notes, const std::string& text) {
  if (notes.size() < kMaxNotes) notes.push_back(text);
}

std::string menu_str(const GroundSet& g, Mask m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& id : g.id_list(m)) {
    if (!first) out << ",";
    out << id;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

AttentionDiagnostic check_attention(const AttentionFunction& attention, Mask reference_set) {
  AttentionDiagnostic diag;
  const GroundSet& g = attention.ground();
  for (Mask menu : menus_in_order(g.size())) {
    Rational sum(0);
    for (const auto& [set, mass] : attention.entries(menu)) sum += mass;
    if (sum != 1) {
      diag.sums_to_one = false;
      note(diag.notes, "mass over " + menu_str(g, menu) + " sums to " + rational_str(sum));
    }
    Mask base = menu & reference_set;
    for (Mask set : submasks_in_order(menu)) {
      bool required = (set & base) == base;
      bool present = attention.mass(set, menu) > 0;
      if (required && !present) {
        diag.full_support = false;
        note(diag.notes, "no mass on " + menu_str(g, set) + " in " + menu_str(g, menu));
      }
      if (!required && present) {
        diag.full_support = false;
        note(diag.notes, "mass on " + menu_str(g, set) + " in " + menu_str(g, menu) +
                             " drops a reference");
      }
    }
  }
  // Monotonicity: removing an unconsidered alternative cannot lower the
  // chance of any nonempty consideration set.
  for (Mask menu : menus_in_order(g.size())) {
    if (mask_size(menu) < 2) continue;
    for (int a : mask_members(menu)) {
      Mask smaller = menu & ~bit(a);
      for (Mask set : submasks_in_order(smaller)) {
        if (set == kEmptyMask) continue;
        if (attention.mass(set, smaller) < attention.mass(set, menu)) {
          diag.monotone = false;
          note(diag.notes, "mass on " + menu_str(g, set) + " falls from " + menu_str(g, menu) +
                               " to " + menu_str(g, smaller));
        }
      }
    }
  }
  return diag;
}

Scf eval_ramur(const RamUrModel& model) {
  auto diag = check_attention(model.attention, model.reference_set);
  if (!diag.valid()) {
    throw InvalidAttention("attention function is not a valid distribution" +
                           (diag.notes.empty() ? std::string() : ": " + diag.notes.front()));
  }
  const GroundSet& g = model.ground();
  int n = g.size();
  auto pos = rank_positions(model.preference);
  std::vector<std::vector<Rational>> table(std::size_t{1} << n,
                                           std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (Mask menu : menus_in_order(n)) {
    for (const auto& [set, mass] : model.attention.entries(menu)) {
      if (set == kEmptyMask) continue;  // abstention; derived, never stored
      int winner = best_member(set, pos);
      table[menu][static_cast<std::size_t>(winner)] += mass;
    }
  }
  return Scf::from_table(g, std::move(table));
}

Scf eval_ram(const AttentionFunction& attention, const PreferenceRelation& order) {
  if (attention.reference_set() != kEmptyMask) {
    throw InvalidAttention("plain random attention requires an empty reference set");
  }
  return eval_ramur(RamUrModel(kEmptyMask, order, attention));
}

Scf eval_ira(const RamUrIraModel& model) {
  const GroundSet& g = model.ground;
  int n = g.size();
  std::vector<std::vector<Rational>> table(std::size_t{1} << n,
                                           std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (Mask menu : menus_in_order(n)) {
    for (int x : mask_members(menu)) {
      Rational p = model.gamma[static_cast<std::size_t>(x)];
      for (int y : mask_members(menu)) {
        if (model.preference.prefers(y, x)) p *= Rational(1) - model.gamma[static_cast<std::size_t>(y)];
      }
      table[menu][static_cast<std::size_t>(x)] = std::move(p);
    }
  }
  return Scf::from_table(g, std::move(table));
}

AttentionFunction ira_attention(const RamUrIraModel& model) {
  const GroundSet& g = model.ground;
  AttentionFunction att(g, model.reference_set());
  for (Mask menu : menus_in_order(g.size())) {
    for (Mask set : submasks_in_order(menu)) {
      Rational w(1);
      for (int x : mask_members(menu)) {
        if (set & bit(x)) {
          w *= model.gamma[static_cast<std::size_t>(x)];
        } else {
          w *= Rational(1) - model.gamma[static_cast<std::size_t>(x)];
        }
        if (w == 0) break;
      }
      if (w != 0) att.set(set, menu, std::move(w));
    }
  }
  return att;
}

SampleRun::SampleRun(GroundSet ground, std::uint64_t seed, std::uint64_t draws_per_menu)
    : ground_(std::move(ground)),
      seed_(seed),
      draws_(draws_per_menu),
      counts_(std::size_t{1} << ground_.size(),
              std::vector<std::uint64_t>(static_cast<std::size_t>(ground_.size()) + 1, 0)) {
  if (draws_ == 0) throw Error("draws_per_menu must be at least 1");
}

std::uint64_t SampleRun::count(int alt, Mask menu) const {
  return counts_[menu][static_cast<std::size_t>(alt)];
}

Rational SampleRun::frequency(int alt, Mask menu) const {
  Rational f(static_cast<unsigned long>(count(alt, menu)),
             static_cast<unsigned long>(draws_));
  f.canonicalize();
  return f;
}

void SampleRun::record(int alt, Mask menu) { ++counts_[menu][static_cast<std::size_t>(alt)]; }

Scf SampleRun::to_scf() const {
  int n = ground_.size();
  std::vector<std::vector<Rational>> table(std::size_t{1} << n,
                                           std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (Mask menu : menus_in_order(n)) {
    for (int a : mask_members(menu)) table[menu][static_cast<std::size_t>(a)] = frequency(a, menu);
  }
  return Scf::from_table(ground_, std::move(table));
}

std::uint64_t menu_stream_hash(const GroundSet& ground, Mask menu) {
  // FNV-1a over the sorted ids joined with '/'; ids cannot contain '/'.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  };
  bool first = true;
  for (const auto& id : ground.id_list(menu)) {
    if (!first) mix('/');
    for (char c : id) mix(c);
    first = false;
  }
  return h;
}

namespace {

const mpz_class& two_to_64() {
  static const mpz_class value = mpz_class(1) << 64;
  return value;
}

// Exact Bernoulli / categorical draws: a uniform 64-bit word v represents
// v / 2^64, compared against rational thresholds by cross-multiplication.
struct Threshold {
  mpz_class num_shifted;  // numerator * 2^64
  mpz_class den;
};

Threshold make_threshold(const Rational& p) {
  return {p.get_num() * two_to_64(), p.get_den()};
}

bool below(std::uint64_t v, const Threshold& t) {
  return mpz_class(static_cast<unsigned long>(v)) * t.den < t.num_shifted;
}

template <typename DrawSet>
SampleRun sample_impl(const GroundSet& ground, std::uint64_t seed, std::uint64_t draws,
                      const std::vector<int>& pos, DrawSet&& draw_set) {
  SampleRun run(ground, seed, draws);
  for (Mask menu : menus_in_order(ground.size())) {
    std::mt19937_64 eng(seed ^ menu_stream_hash(ground, menu));
    for (std::uint64_t d = 0; d < draws; ++d) {
      Mask set = draw_set(menu, eng);
      int winner = set == kEmptyMask ? ground.size() : best_member(set, pos);
      run.record(winner, menu);
    }
  }
  return run;
}

}  // namespace

SampleRun sample_choices(const RamUrModel& model, std::uint64_t seed, std::uint64_t draws_per_menu) {
  auto diag = check_attention(model.attention, model.reference_set);
  if (!diag.valid()) throw InvalidAttention("attention function is not a valid distribution");
  const GroundSet& g = model.ground();
  // Per menu: cumulative thresholds over the entries in canonical order.
  std::vector<std::vector<std::pair<Mask, Threshold>>> cdf(std::size_t{1} << g.size());
  for (Mask menu : menus_in_order(g.size())) {
    Rational cum(0);
    for (const auto& [set, mass] : model.attention.entries(menu)) {
      cum += mass;
      cdf[menu].emplace_back(set, make_threshold(cum));
    }
  }
  auto pos = rank_positions(model.preference);
  return sample_impl(g, seed, draws_per_menu, pos,
                     [&cdf](Mask menu, std::mt19937_64& eng) {
                       std::uint64_t v = eng();
                       for (const auto& [set, threshold] : cdf[menu]) {
                         if (below(v, threshold)) return set;
                       }
                       return cdf[menu].back().first;  // mass sums to one
                     });
}

SampleRun sample_choices(const RamUrIraModel& model, std::uint64_t seed,
                         std::uint64_t draws_per_menu) {
  const GroundSet& g = model.ground;
  std::vector<Threshold> inclusion;
  inclusion.reserve(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) {
    inclusion.push_back(make_threshold(model.gamma[static_cast<std::size_t>(x)]));
  }
  auto pos = rank_positions(model.preference);
  return sample_impl(g, seed, draws_per_menu, pos,
                     [&inclusion](Mask menu, std::mt19937_64& eng) {
                       Mask set = kEmptyMask;
                       for (int x : mask_members(menu)) {
                         if (below(eng(), inclusion[static_cast<std::size_t>(x)])) set |= bit(x);
                       }
                       return set;
                     });
}

namespace {

constexpr int kMaxRandomSize = 10;

GroundSet letters(int size) {
  std::vector<std::string> ids;
  for (int i = 0; i < size; ++i) ids.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(ids));
}

std::vector<int> random_permutation(std::mt19937_64& eng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(eng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

Mask random_subset(std::mt19937_64& eng, int n) {
  int k = static_cast<int>(eng() % static_cast<std::uint64_t>(n + 1));
  auto perm = random_permutation(eng, n);
  Mask m = kEmptyMask;
  for (int i = 0; i < k; ++i) m |= bit(perm[static_cast<std::size_t>(i)]);
  return m;
}

void check_random_size(int size) {
  if (size < 1 || size > kMaxRandomSize) {
    throw Error("random model size must be between 1 and " + std::to_string(kMaxRandomSize));
  }
}

}  // namespace

RamUrModel random_ramur_model(int size, std::uint64_t seed) {
  check_random_size(size);
  GroundSet ground = letters(size);
  std::mt19937_64 eng(seed);
  Mask refs = random_subset(eng, size);
  auto order = PreferenceRelation::chain(random_permutation(eng, size));
  AttentionFunction att(ground, refs);
  // Random integer masses over the supported sets, normalized exactly.
  for (Mask menu : menus_in_order(size)) {
    Mask base = menu & refs;
    Mask free = menu & ~refs;
    std::vector<std::pair<Mask, unsigned long>> masses;
    unsigned long total = 0;
    for (Mask sub : submasks_in_order(free)) {
      unsigned long m = 1 + static_cast<unsigned long>(eng() % 8);
      masses.emplace_back(base | sub, m);
      total += m;
    }
    for (const auto& [set, m] : masses) {
      Rational mass(m, total);
      mass.canonicalize();
      att.set(set, menu, mass);
    }
  }
  return RamUrModel(refs, order, att);
}

RamUrIraModel random_ira_model(int size, std::uint64_t seed) {
  check_random_size(size);
  GroundSet ground = letters(size);
  std::mt19937_64 eng(seed);
  Mask refs = random_subset(eng, size);
  auto order = PreferenceRelation::chain(random_permutation(eng, size));
  std::vector<Rational> gamma;
  gamma.reserve(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    if (refs & bit(x)) {
      gamma.emplace_back(1);
    } else {
      gamma.push_back(rat(static_cast<long>(1 + eng() % 64), 64));
    }
  }
  return RamUrIraModel(std::move(ground), order, std::move(gamma));
}

}  // namespace ramur

#include "ramur/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ramur/axioms.hpp"
#include "ramur/forward.hpp"
#include "ramur/identify_ramur.hpp"

namespace ramur {

std::vector<std::pair<Mask, PreferenceRelation>> compatible_orders(const Scf& scf, int cap) {
  if (scf.n() > cap) {
    throw TooLarge("order enumeration over " + std::to_string(scf.n()) +
                   " alternatives exceeds the cap of " + std::to_string(cap));
  }
  Mask refs = reveal_references(scf);
  std::vector<int> perm(static_cast<std::size_t>(scf.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<Mask, PreferenceRelation>> out;
  do {
    auto order = PreferenceRelation::chain(perm);
    try {
      RamUrModel model(refs, order, build_attention(scf, refs, order));
      if (eval_ramur(model) == scf) out.emplace_back(refs, std::move(order));
    } catch (const ConstructionFailure&) {
      // order cannot carry the data
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

NecessityReport exhaustive_necessity(ModelKind kind, int size, int trials, std::uint64_t seed0) {
  if (size > kDefaultOracleCap) {
    throw TooLarge("necessity suite size exceeds " + std::to_string(kDefaultOracleCap));
  }
  NecessityReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(t);
    std::vector<AxiomReport> reports;
    if (kind == ModelKind::RamUr) {
      reports = ramur_axioms(eval_ramur(random_ramur_model(size, seed)));
    } else {
      reports = ira_axioms(eval_ira(random_ira_model(size, seed)));
    }
    for (const auto& r : reports) {
      if (!r.passed) report.failures.push_back({seed, axiom_name(r.axiom)});
    }
  }
  return report;
}

}  // namespace ramur

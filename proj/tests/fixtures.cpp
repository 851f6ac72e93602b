#include "fixtures.hpp"

namespace ramur::fixture {

RawDataset demo_raw() {
  RawDataset raw;
  raw.alternatives = {"a", "b", "c"};
  raw.menus = {
      {{"a"}, {{"a", "1"}}},
      {{"b"}, {{"b", "1/2"}}},
      {{"c"}, {{"c", "1/2"}}},
      {{"a", "b"}, {{"a", "1/2"}, {"b", "1/2"}}},
      {{"a", "c"}, {{"a", "1/2"}, {"c", "1/2"}}},
      {{"b", "c"}, {{"b", "1/4"}, {"c", "1/2"}}},
      {{"a", "b", "c"}, {{"a", "1/4"}, {"b", "1/2"}, {"c", "1/4"}}},
  };
  return raw;
}

Scf demo_scf() { return validate_scf(demo_raw()); }

PreferenceRelation pref(const GroundSet& ground, const std::vector<std::string>& best_first) {
  std::vector<int> ranking;
  ranking.reserve(best_first.size());
  for (const auto& id : best_first) ranking.push_back(ground.index_of(id));
  return PreferenceRelation::chain(ranking);
}

AttentionFunction demo_dual_attention() {
  GroundSet ground({"a", "b", "c"});
  AttentionFunction att(ground, ground.mask_of({"a"}));
  auto set = [&](const std::vector<std::string>& consideration,
                 const std::vector<std::string>& menu, const std::string& mass) {
    att.set(ground.mask_of(consideration), ground.mask_of(menu), parse_rational(mass));
  };
  set({"a"}, {"a"}, "1");
  set({"b"}, {"b"}, "1/2");
  set({}, {"b"}, "1/2");
  set({"c"}, {"c"}, "1/2");
  set({}, {"c"}, "1/2");
  set({"a"}, {"a", "b"}, "1/2");
  set({"a", "b"}, {"a", "b"}, "1/2");
  set({"a"}, {"a", "c"}, "1/2");
  set({"a", "c"}, {"a", "c"}, "1/2");
  set({"b"}, {"b", "c"}, "1/4");
  set({"c"}, {"b", "c"}, "1/4");
  set({"b", "c"}, {"b", "c"}, "1/4");
  set({}, {"b", "c"}, "1/4");
  set({"a"}, {"a", "b", "c"}, "1/4");
  set({"a", "b"}, {"a", "b", "c"}, "1/2");
  set({"a", "c"}, {"a", "b", "c"}, "1/8");
  set({"a", "b", "c"}, {"a", "b", "c"}, "1/8");
  return att;
}

PreferenceRelation demo_dual_preference() {
  return pref(GroundSet({"a", "b", "c"}), {"c", "b", "a"});
}

}  // namespace ramur::fixture

#pragma once

#include <string>
#include <vector>

#include "bimod/catalog.hpp"
#include "bimod/io.hpp"

namespace bimod::testing {

struct Pair {
  std::string category;
  std::string algebra;  // "trivial" or a fixture file name
  std::string label() const { return category + " / " + algebra; }
};

inline AlgebraSpec simple_current_algebra(int g) {
  AlgebraSpec s;
  s.mult = {{0, 1}, {g, 1}};
  s.m = {{0, 0, 0, 0, 0, 0, 0, 1.0}, {0, 0, g, 0, g, 0, 0, 1.0}, {g, 0, 0, 0, g, 0, 0, 1.0}, {g, 0, g, 0, 0, 0, 0, 1.0}};
  s.eta = {{0, 1.0}};
  return s;
}

inline AlgebraSpec load_spec(const Pair& p, const MtcData& C) {
  if (p.algebra == "trivial") return trivial_algebra_spec();
  return parse_algebra(read_json_file(std::string(BIMOD_FIXTURE_DIR) + "/" + p.algebra), C);
}

/// The nontrivial algebras of the test and acceptance suites.
inline std::vector<Pair> nontrivial_pairs() {
  return {{"toric_code", "ze.alg.json"}, {"toric_code", "zm.alg.json"}, {"su2_2", "su2_2_psi.alg.json"},
          {"su2_4", "su2_4_d.alg.json"}};
}

inline std::vector<Pair> all_pairs() {
  std::vector<Pair> out;
  for (const auto& n : catalog_names()) out.push_back({n, "trivial"});
  for (const auto& p : nontrivial_pairs()) out.push_back(p);
  return out;
}

}  // namespace bimod::testing

#pragma once

// Brute-force oracles used only by the test suites; each one follows a
// definition literally (enumeration, no iterated operators) so it can
// cross-check the engine's computed routes.

#include "bilat/semantics.hpp"

namespace bt_oracle {

using namespace bilat;

// Stable by the closure definition: I equals the unique <=k-least cl-model
// of the support k-completion P + Sp_P(I), found by scanning all of FOUR^n.
inline bool stable_by_min_k_definition(const GroundProgram<four::Value>& g,
                                       const Interpretation<four::Value>& i) {
  auto kc = k_complete(g, support(g, i).support);
  std::vector<Interpretation<four::Value>> cl;
  std::uint64_t space = four_space_size(g.size());
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    auto j = four_interp_at(g.atoms, idx);
    if (is_cl_model(kc, j)) cl.push_back(j);
  }
  for (const auto& m : cl) {
    bool least = true;
    for (const auto& other : cl)
      if (!leq_k(m, other)) { least = false; break; }
    if (least) return m == i;
  }
  return false;  // no <=k-least cl-model found: counts as a divergence
}

}  // namespace bt_oracle

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bilat/generator.hpp"
#include "bilat/parser.hpp"
#include "bilat/serialize.hpp"

namespace bt {

using namespace bilat;
using FV = four::Value;
using IV = interval::Value;

inline constexpr FV F = FV::f();
inline constexpr FV T = FV::t();
inline constexpr FV B = FV::bot();
inline constexpr FV TOP = FV::top();

// The three worked fixture programs.
inline const char* kRunningSrc = "p <- p.\nq <- ~r.\nr <- ~q & ~p.\n";
inline const char* kIntervalSupportSrc =
    "a <- a & c.\nb <- b | ~c.\nc <- c | d.\nd <- [0.7,0.7].\n";
inline const char* kIntervalWfSrc =
    "a <- a | b.\nb <- (~c & a) | [0.3,0.5].\nc <- ~b | [0.2,0.4].\n";

inline GroundProgram<FV> running() {
  return build_pstar(parse_program<FV>(kRunningSrc));
}
inline GroundProgram<IV> interval_support_prog() {
  return build_pstar(parse_program<IV>(kIntervalSupportSrc));
}
inline GroundProgram<IV> interval_wf_prog() {
  return build_pstar(parse_program<IV>(kIntervalWfSrc));
}

template <BilatticeValue V>
Interpretation<V> interp_of(const GroundProgram<V>& g, const std::vector<V>& vals) {
  Interpretation<V> out(g.atoms, V::bot());
  size_t a = 0;
  for (const V& v : vals) out[a++] = v;
  return out;
}

template <BilatticeValue V>
Interpretation<V> interp_of(const GroundProgram<V>& g, std::initializer_list<V> vals) {
  return interp_of(g, std::vector<V>(vals));
}

inline IV iv(const char* lo, const char* hi) {
  return IV(*parse_rational(lo), *parse_rational(hi));
}

inline FV random_four(Rng& rng) { return FV::all()[rng.below(4)]; }

// Random endpoint with denominator up to 12 so both terminating-decimal and
// p/q printing paths occur; lo > hi (inconsistent) pairs arise naturally.
inline Rational random_unit_rational(Rng& rng) {
  long den = 1 + static_cast<long>(rng.below(12));
  long num = static_cast<long>(rng.below(static_cast<size_t>(den) + 1));
  return rat(num, den);
}

inline IV random_interval(Rng& rng) {
  return IV(random_unit_rational(rng), random_unit_rational(rng));
}

template <BilatticeValue V>
Interpretation<V> random_interp(Rng& rng, const std::shared_ptr<const AtomTable>& atoms);

template <>
inline Interpretation<FV> random_interp<FV>(Rng& rng,
                                            const std::shared_ptr<const AtomTable>& atoms) {
  Interpretation<FV> out(atoms, FV::bot());
  for (size_t a = 0; a < out.size(); ++a) out[a] = random_four(rng);
  return out;
}

template <>
inline Interpretation<IV> random_interp<IV>(Rng& rng,
                                            const std::shared_ptr<const AtomTable>& atoms) {
  Interpretation<IV> out(atoms, IV::bot());
  for (size_t a = 0; a < out.size(); ++a) out[a] = random_interval(rng);
  return out;
}

// Shrinks a failing program greedily: rule deletion candidates come first,
// then body pruning, as produced by shrink_candidates.
template <BilatticeValue V, typename Fails>
Program<V> shrink_failing(Program<V> prog, Fails&& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (Program<V>& candidate : shrink_candidates(prog)) {
      if (fails(candidate)) {
        prog = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return prog;
}

template <BilatticeValue V>
std::string program_to_string(const Program<V>& prog) {
  std::string out;
  for (const auto& r : prog.rules)
    out += r.head.key() + " <- " + formula_to_string(r.body) + ".\n";
  return out;
}

}  // namespace bt

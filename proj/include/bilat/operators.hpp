#pragma once

#include <functional>

#include "bilat/transforms.hpp"

namespace bilat {

// Exceeding the fuse signals an implementation bug, never silent
// truncation: the finitely generated value sublattice guarantees finite
// convergence for every supported kind.
inline constexpr int kIterationFuse = 10000;

enum class TraceOrder { t_increasing, k_increasing, k_decreasing };

// Iteration record of an operator run from its start value. The last two
// steps are equal exactly when the run converged.
template <BilatticeValue V>
struct FixpointTrace {
  std::vector<Interpretation<V>> steps;
  bool converged = false;
  TraceOrder order = TraceOrder::k_increasing;
};

namespace detail {

template <BilatticeValue V>
void check_step(const Interpretation<V>& prev, const Interpretation<V>& next,
                TraceOrder order) {
  bool ok = false;
  switch (order) {
    case TraceOrder::t_increasing: ok = leq_t(prev, next); break;
    case TraceOrder::k_increasing: ok = leq_k(prev, next); break;
    case TraceOrder::k_decreasing: ok = leq_k(next, prev); break;
  }
  if (!ok) throw invariant_error("fixpoint iteration violated its monotonicity direction");
}

// Iterates to exact equality of consecutive steps; the confirming repeat
// stays in the trace, so a converged trace always ends in two equal rows.
template <BilatticeValue V, typename Step>
std::pair<Interpretation<V>, FixpointTrace<V>> iterate(Interpretation<V> start, Step step,
                                                       TraceOrder order,
                                                       int fuse = kIterationFuse) {
  FixpointTrace<V> trace;
  trace.order = order;
  trace.steps.push_back(start);
  Interpretation<V> cur = std::move(start);
  for (int n = 0; n < fuse; ++n) {
    Interpretation<V> next = step(cur);
    check_step(cur, next, order);
    trace.steps.push_back(next);
    if (next == cur) {
      trace.converged = true;
      return {std::move(cur), std::move(trace)};
    }
    cur = std::move(next);
  }
  throw limit_error("iteration fuse exceeded (" + std::to_string(fuse) + " steps)");
}

}  // namespace detail

// Phi_P over raw value arrays (the form the enumeration kernels drive).
template <BilatticeValue V>
void phi_values(const GroundProgram<V>& g, std::span<const V> in, std::span<V> out,
                std::vector<V>& stack) {
  for (size_t a = 0; a < g.size(); ++a)
    out[a] = eval_compiled(g.code[a], in, {}, stack);
}

// Phi_P: out(A) = I(body_A).
template <BilatticeValue V>
Interpretation<V> phi(const GroundProgram<V>& g, const Interpretation<V>& i) {
  Interpretation<V> out(g.atoms, V::bot());
  std::vector<V> stack;
  phi_values(g, i.values(), out.values_mut(), stack);
  return out;
}

// Gamma_P: the unique <=t-least model of the general reduct P[I]. Routed
// through the syntactic transform on purpose; Phi = Gamma is a tested
// theorem, not an assumption.
template <BilatticeValue V>
Interpretation<V> gamma(const GroundProgram<V>& g, const Interpretation<V>& i) {
  GroundProgram<V> reduct = general_reduct(g, i);
  Interpretation<V> least = Interpretation<V>::bottom_k(reduct.atoms);
  return phi(reduct, least);
}

// Psi_P: pos feeds positive literals, neg feeds negated ones.
template <BilatticeValue V>
Interpretation<V> psi(const GroundProgram<V>& g, const Interpretation<V>& pos,
                      const Interpretation<V>& neg) {
  if (!g.literal_normal)
    throw invariant_error("psi requires negation on literals only");
  Interpretation<V> out(g.atoms, V::bot());
  std::vector<V> stack;
  for (size_t a = 0; a < g.size(); ++a)
    out[a] = eval_compiled(g.code[a], pos.values(), neg.values(), stack);
  return out;
}

template <BilatticeValue V>
struct PsiPrimeResult {
  Interpretation<V> value;
  FixpointTrace<V> trace;  // the v_i sequence, <=t-increasing
};

// Psi'_P(I): <=t-least fixpoint of x -> Psi_P(x, I), iterated from the
// all-false interpretation.
template <BilatticeValue V>
PsiPrimeResult<V> psi_prime(const GroundProgram<V>& g, const Interpretation<V>& i,
                            int fuse = kIterationFuse) {
  auto [value, trace] = detail::iterate<V>(
      Interpretation<V>::bottom_t(g.atoms),
      [&](const Interpretation<V>& v) { return psi(g, v, i); },
      TraceOrder::t_increasing, fuse);
  return {std::move(value), std::move(trace)};
}

// Knaster-Tarski iteration for a <=k-monotone operator from a pre-fixpoint.
// A detected monotonicity violation is an error, guarding misuse.
template <BilatticeValue V>
std::pair<Interpretation<V>, FixpointTrace<V>> lfp_k(
    const std::function<Interpretation<V>(const Interpretation<V>&)>& f,
    const Interpretation<V>& start, int fuse = kIterationFuse) {
  return detail::iterate<V>(start, f, TraceOrder::k_increasing, fuse);
}

template <BilatticeValue V>
bool is_model(const GroundProgram<V>& g, const Interpretation<V>& i) {
  std::vector<V> stack;
  for (size_t a = 0; a < g.size(); ++a)
    if (!leq_t(eval_compiled(g.code[a], i.values(), {}, stack), i[a])) return false;
  return true;
}

template <BilatticeValue V>
bool is_cl_model(const GroundProgram<V>& g, const Interpretation<V>& i) {
  std::vector<V> stack;
  for (size_t a = 0; a < g.size(); ++a)
    if (!(eval_compiled(g.code[a], i.values(), {}, stack) == i[a])) return false;
  return true;
}

template <BilatticeValue V>
bool classical_interp(const Interpretation<V>& i, bool allow_true = true) {
  for (size_t a = 0; a < i.size(); ++a) {
    const V& v = i[a];
    if (!(v == V::f() || v == V::bot() || (allow_true && v == V::t()))) return false;
  }
  return true;
}

// Van Emden-Kowalski style T_P over classical programs: t where some rule
// body is true, bot elsewhere (false arrives separately via the unfounded
// set, never from T_P itself).
template <BilatticeValue V>
Interpretation<V> t_p(const GroundProgram<V>& g, const Interpretation<V>& i) {
  if (!g.classical) throw invariant_error("t_p requires a classical program");
  if (!classical_interp(i)) throw invariant_error("t_p requires a classical interpretation");
  Interpretation<V> out(g.atoms, V::bot());
  std::vector<V> stack;
  for (size_t a = 0; a < g.size(); ++a)
    if (eval_compiled(g.code[a], i.values(), {}, stack) == V::t()) out[a] = V::t();
  return out;
}

}  // namespace bilat

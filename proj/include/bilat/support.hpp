#pragma once

#include "bilat/enumerate.hpp"
#include "bilat/operators.hpp"

namespace bilat {

inline constexpr size_t kSupportOracleLimit = 12;    // 2^12 candidate joins
inline constexpr size_t kUnfoundedOracleLimit = 10;  // 2^10 subset checks

// J is a falsehood assumption that survives completion: J <=k I_bott and
// J <=k Phi_P(I + J).
template <BilatticeValue V>
bool is_safe(const GroundProgram<V>& g, const Interpretation<V>& i,
             const Interpretation<V>& j) {
  Interpretation<V> floor = Interpretation<V>::bottom_t(g.atoms);
  return leq_k(j, floor) && leq_k(j, phi(g, join_k(i, j)));
}

template <BilatticeValue V>
struct SupportResult {
  Interpretation<V> support;
  FixpointTrace<V> trace;  // the h_i sequence, <=k-non-increasing
};

// Sp_P(I), the <=k-greatest safe interpretation: iterate
// h_{n+1} = I_bott * Phi_P(I + h_n) from h_0 = I_bott. The CWA seed row is
// kept in the trace.
template <BilatticeValue V>
SupportResult<V> support(const GroundProgram<V>& g, const Interpretation<V>& i,
                         int fuse = kIterationFuse) {
  Interpretation<V> floor = Interpretation<V>::bottom_t(g.atoms);
  auto [value, trace] = detail::iterate<V>(
      floor,
      [&](const Interpretation<V>& h) { return meet_k(floor, phi(g, join_k(i, h))); },
      TraceOrder::k_decreasing, fuse);
  return {std::move(value), std::move(trace)};
}

// Definition-route oracle: join of all safe candidates. Each atom of a safe
// J sits below f in the knowledge order, so over FOUR the candidate space
// is {bot, f}^n; a candidate is safe iff every assumed-f atom's body comes
// back at least as false after completion.
inline Interpretation<four::Value> brute_force_support(
    const GroundProgram<four::Value>& g, const Interpretation<four::Value>& i,
    size_t limit = kSupportOracleLimit, ExecMode mode = ExecMode::serial) {
  using V = four::Value;
  size_t n = g.size();
  if (n > limit)
    throw limit_error("brute_force_support limited to " + std::to_string(limit) + " atoms");
  std::uint64_t count = std::uint64_t{1} << n;
  std::vector<char> safe(count, 0);
  for_each_chunk(count, mode, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<V> merged(n);
    std::vector<V> stack;
    for (std::uint64_t bits = begin; bits < end; ++bits) {
      for (size_t a = 0; a < n; ++a)
        merged[a] = bits >> a & 1 ? join_k(i[a], V::f()) : i[a];
      bool ok = true;
      for (size_t a = 0; a < n && ok; ++a) {
        if (!(bits >> a & 1)) continue;  // j(a) = bot needs nothing
        ok = leq_k(V::f(),
                   eval_compiled(g.code[a], std::span<const V>(merged), {}, stack));
      }
      safe[bits] = ok;
    }
  });
  Interpretation<V> acc = Interpretation<V>::bottom_k(g.atoms);
  for (std::uint64_t bits = 0; bits < count; ++bits)
    if (safe[bits])
      for (size_t a = 0; a < n; ++a)
        if (bits >> a & 1) acc[a] = join_k(acc[a], V::f());
  return acc;
}

// Classical bridge: U_P(I) = atoms whose support component is f.
template <BilatticeValue V>
std::vector<size_t> greatest_unfounded_set(const GroundProgram<V>& g,
                                           const Interpretation<V>& i) {
  if (!g.classical)
    throw invariant_error("unfounded sets require a classical program");
  if (!classical_interp(i))
    throw invariant_error("unfounded sets require a classical interpretation");
  Interpretation<V> sp = support(g, i).support;
  std::vector<size_t> out;
  for (size_t a = 0; a < g.size(); ++a)
    if (sp[a] == V::f()) out.push_back(a);
  return out;
}

// Subset-enumeration oracle for the unfounded-set definition: X is unfounded
// iff every disjunct of every member's body is false under I or under the
// literal set neg.X; the greatest unfounded set is the union of all of them.
inline std::vector<size_t> greatest_unfounded_set_by_definition(
    const GroundProgram<four::Value>& g, const Interpretation<four::Value>& i,
    size_t limit = kUnfoundedOracleLimit, ExecMode mode = ExecMode::serial) {
  using V = four::Value;
  if (!g.classical)
    throw invariant_error("unfounded sets require a classical program");
  if (!classical_interp(i))
    throw invariant_error("unfounded sets require a classical interpretation");
  size_t n = g.size();
  if (n > limit)
    throw limit_error("unfounded-set oracle limited to " + std::to_string(limit) + " atoms");

  std::vector<std::vector<CompiledBody<V>>> disjuncts(n);
  for (size_t a = 0; a < n; ++a) {
    std::vector<Formula<V>> parts;
    classical_disjuncts(g.bodies[a], parts);
    for (const Formula<V>& d : parts)
      disjuncts[a].push_back(detail::compile_body(d, *g.atoms));
  }

  auto unfounded = [&](std::uint64_t bits) {
    std::vector<V> negx(n, V::bot());
    std::vector<V> stack;
    for (size_t a = 0; a < n; ++a)
      if (bits >> a & 1) negx[a] = V::f();
    std::span<const V> ivals = i.values();
    std::span<const V> xvals(negx);
    for (size_t a = 0; a < n; ++a) {
      if (!(bits >> a & 1)) continue;
      for (const CompiledBody<V>& d : disjuncts[a]) {
        if (eval_compiled(d, ivals, {}, stack) == V::f()) continue;
        if (eval_compiled(d, xvals, {}, stack) == V::f()) continue;
        return false;
      }
    }
    return true;
  };

  std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> hits = filter_indices(count, mode, unfounded);
  std::uint64_t all = 0;
  for (std::uint64_t bits : hits) all |= bits;
  std::vector<size_t> out;
  for (size_t a = 0; a < n; ++a)
    if (all >> a & 1) out.push_back(a);
  return out;
}

// Pi_P(I) = Phi_P(I + Sp_P(I)); supported models are its fixpoints.
template <BilatticeValue V>
Interpretation<V> pi(const GroundProgram<V>& g, const Interpretation<V>& i) {
  return phi(g, join_k(i, support(g, i).support));
}

// Pi~_P(I) = Phi_P(I) + Sp_P(I), the bilattice shape of the classical W_P.
template <BilatticeValue V>
Interpretation<V> pi_tilde(const GroundProgram<V>& g, const Interpretation<V>& i) {
  return join_k(phi(g, i), support(g, i).support);
}

// Classical well-founded operator W_P(I) = T_P(I) + neg.U_P(I).
template <BilatticeValue V>
Interpretation<V> w_p(const GroundProgram<V>& g, const Interpretation<V>& i) {
  Interpretation<V> neg_u(g.atoms, V::bot());
  for (size_t a : greatest_unfounded_set(g, i)) neg_u[a] = V::f();
  return join_k(t_p(g, i), neg_u);
}

template <BilatticeValue V>
struct PhiPrimeResult {
  Interpretation<V> value;
  SupportResult<V> support;  // J_0 and its h-trace
  FixpointTrace<V> j_trace;  // the J_i sequence, <=k-non-decreasing
};

// Phi'_P(I): cumulate rule consequences over the support,
// J_{n+1} = Phi_P(J_n) + J_n from J_0 = Sp_P(I). Equals KK(P + Sp_P(I));
// its fixpoints are exactly the stable models.
template <BilatticeValue V>
PhiPrimeResult<V> phi_prime(const GroundProgram<V>& g, const Interpretation<V>& i,
                            int fuse = kIterationFuse) {
  SupportResult<V> sp = support(g, i, fuse);
  auto [value, trace] = detail::iterate<V>(
      sp.support,
      [&](const Interpretation<V>& j) { return join_k(phi(g, j), j); },
      TraceOrder::k_increasing, fuse);
  return {std::move(value), std::move(sp), std::move(trace)};
}

}  // namespace bilat

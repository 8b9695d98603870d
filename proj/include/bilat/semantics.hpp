#pragma once

#include <optional>

#include "bilat/support.hpp"

namespace bilat {

template <BilatticeValue V>
struct KkResult {
  Interpretation<V> value;
  FixpointTrace<V> trace;  // the K_i sequence
};

// <=k-least cl-model: lfp of Phi from the all-bot interpretation.
template <BilatticeValue V>
KkResult<V> kripke_kleene(const GroundProgram<V>& g, int fuse = kIterationFuse) {
  auto [value, trace] = lfp_k<V>(
      [&](const Interpretation<V>& i) { return phi(g, i); },
      Interpretation<V>::bottom_k(g.atoms), fuse);
  return {std::move(value), std::move(trace)};
}

enum class WfRoute { psi_prime, pi, pi_tilde, phi_prime };

inline std::optional<WfRoute> wf_route_from_string(std::string_view s) {
  if (s == "psi-prime") return WfRoute::psi_prime;
  if (s == "pi") return WfRoute::pi;
  if (s == "pi-tilde") return WfRoute::pi_tilde;
  if (s == "phi-prime") return WfRoute::phi_prime;
  return std::nullopt;
}

// One well-founded computation. The outer trace is the W_j (or I_n)
// sequence; for the psi-prime and phi-prime routes the per-transition inner
// runs (v-, h- and J-sequences) are retained for trace dumps.
template <BilatticeValue V>
struct WellFoundedRun {
  Interpretation<V> value;
  FixpointTrace<V> outer;
  std::vector<PsiPrimeResult<V>> psi_steps;
  std::vector<PhiPrimeResult<V>> phi_steps;
};

template <BilatticeValue V>
WellFoundedRun<V> well_founded(const GroundProgram<V>& g, WfRoute route,
                               int fuse = kIterationFuse) {
  WellFoundedRun<V> run;
  Interpretation<V> start = Interpretation<V>::bottom_k(g.atoms);
  auto step = [&](const Interpretation<V>& w) -> Interpretation<V> {
    switch (route) {
      case WfRoute::psi_prime: {
        PsiPrimeResult<V> r = psi_prime(g, w, fuse);
        run.psi_steps.push_back(r);
        return r.value;
      }
      case WfRoute::pi: return pi(g, w);
      case WfRoute::pi_tilde: return pi_tilde(g, w);
      case WfRoute::phi_prime: {
        PhiPrimeResult<V> r = phi_prime(g, w, fuse);
        run.phi_steps.push_back(r);
        return r.value;
      }
    }
    return w;
  };
  auto [value, trace] = detail::iterate<V>(start, step, TraceOrder::k_increasing, fuse);
  run.value = std::move(value);
  run.outer = std::move(trace);
  return run;
}

// Runs every applicable route and hard-errors on divergence: the routes
// agreeing is a theorem, so a mismatch is an engine bug.
template <BilatticeValue V>
Interpretation<V> well_founded_checked(const GroundProgram<V>& g,
                                       int fuse = kIterationFuse) {
  Interpretation<V> ref = well_founded(g, WfRoute::phi_prime, fuse).value;
  for (WfRoute route : {WfRoute::pi, WfRoute::pi_tilde}) {
    if (!(well_founded(g, route, fuse).value == ref))
      throw invariant_error("well-founded route divergence");
  }
  if (g.literal_normal && !(well_founded(g, WfRoute::psi_prime, fuse).value == ref))
    throw invariant_error("well-founded route divergence");
  return ref;
}

enum class StableCheckMethod {
  psi_prime_fixpoint,
  phi_prime_fixpoint,
  kk_of_kcompletion,
  gl_reduct_classical,
};

inline std::optional<StableCheckMethod> stable_method_from_string(std::string_view s) {
  if (s == "psi-prime") return StableCheckMethod::psi_prime_fixpoint;
  if (s == "phi-prime") return StableCheckMethod::phi_prime_fixpoint;
  if (s == "kk-completion") return StableCheckMethod::kk_of_kcompletion;
  if (s == "gl-reduct") return StableCheckMethod::gl_reduct_classical;
  return std::nullopt;
}

// Truth-minimal model of a positive program: Phi is <=t-monotone once no
// negation remains, so iterate from the all-false interpretation.
template <BilatticeValue V>
Interpretation<V> minimal_model_positive(const GroundProgram<V>& g,
                                         int fuse = kIterationFuse) {
  auto [value, trace] = detail::iterate<V>(
      Interpretation<V>::bottom_t(g.atoms),
      [&](const Interpretation<V>& v) { return phi(g, v); },
      TraceOrder::t_increasing, fuse);
  return value;
}

template <BilatticeValue V>
bool is_stable(const GroundProgram<V>& g, const Interpretation<V>& i,
               StableCheckMethod method, int fuse = kIterationFuse) {
  switch (method) {
    case StableCheckMethod::psi_prime_fixpoint:
      return psi_prime(g, i, fuse).value == i;
    case StableCheckMethod::phi_prime_fixpoint:
      return phi_prime(g, i, fuse).value == i;
    case StableCheckMethod::kk_of_kcompletion:
      return kripke_kleene(k_complete(g, support(g, i, fuse).support), fuse).value == i;
    case StableCheckMethod::gl_reduct_classical:
      if constexpr (std::same_as<V, four::Value>) {
        return minimal_model_positive(gl_reduct(g, i), fuse) == i;
      } else {
        throw invariant_error("gl-reduct stable check is classical/FOUR only");
      }
  }
  return false;
}

inline constexpr size_t kEnumerationLimit = 8;  // 4^8 interpretations

// All stable models of a FOUR program, in interpretation-index order.
inline std::vector<Interpretation<four::Value>> enumerate_stable(
    const GroundProgram<four::Value>& g, size_t limit = kEnumerationLimit,
    ExecMode mode = ExecMode::parallel, int fuse = kIterationFuse) {
  size_t n = g.size();
  if (n > limit)
    throw limit_error("stable-model enumeration limited to " + std::to_string(limit) +
                      " atoms");
  std::vector<std::uint64_t> hits =
      filter_indices(four_space_size(n), mode, [&](std::uint64_t idx) {
        return is_stable(g, four_interp_at(g.atoms, idx),
                         StableCheckMethod::phi_prime_fixpoint, fuse);
      });
  std::vector<Interpretation<four::Value>> out;
  out.reserve(hits.size());
  for (std::uint64_t idx : hits) out.push_back(four_interp_at(g.atoms, idx));
  return out;
}

struct ClassificationFlags {
  bool is_model = false;
  bool is_cl_model = false;
  bool is_supported = false;
  bool is_deductively_closed = false;
  bool is_stable = false;
  bool is_kk = false;
  bool is_wf = false;
};

template <BilatticeValue V>
struct ModelClassification {
  Interpretation<V> interpretation;
  ClassificationFlags flags;
  Interpretation<V> support;
  std::optional<std::vector<size_t>> unfounded;  // classical programs only
};

struct ClassifyOptions {
  bool all = false;  // default: cl-models only
  size_t limit = kEnumerationLimit;
  ExecMode mode = ExecMode::parallel;
  int fuse = kIterationFuse;
};

struct ClassifyReport {
  std::vector<ModelClassification<four::Value>> rows;
  Interpretation<four::Value> kk;
  Interpretation<four::Value> wf;
  std::vector<Interpretation<four::Value>> stable;
};

// The full classification in one sweep: per interpretation all flags, the
// support, and (for classical programs) the unfounded set read off it.
inline ClassifyReport classify(const GroundProgram<four::Value>& g,
                               const ClassifyOptions& opt = {}) {
  using V = four::Value;
  size_t n = g.size();
  if (n > opt.limit)
    throw limit_error("classification limited to " + std::to_string(opt.limit) + " atoms");

  ClassifyReport report;
  report.kk = kripke_kleene(g, opt.fuse).value;
  report.wf = well_founded_checked(g, opt.fuse);

  std::uint64_t space = four_space_size(n);
  std::vector<std::uint64_t> rows;
  if (opt.all) {
    rows.resize(space);
    for (std::uint64_t i = 0; i < space; ++i) rows[i] = i;
  } else {
    // allocation-free cl-model sweep; scratch lives per chunk, not per index
    std::vector<char> flags(space, 0);
    for_each_chunk(space, opt.mode, [&](std::uint64_t begin, std::uint64_t end) {
      std::vector<V> vals(n);
      std::vector<V> stack;
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        four_values_at(idx, vals);
        bool cl = true;
        for (size_t a = 0; a < n && cl; ++a)
          cl = eval_compiled(g.code[a], std::span<const V>(vals), {}, stack) == vals[a];
        flags[idx] = cl;
      }
    });
    for (std::uint64_t i = 0; i < space; ++i)
      if (flags[i]) rows.push_back(i);
  }

  report.rows.resize(rows.size());
  for_each_index(rows.size(), opt.mode, [&](std::uint64_t r) {
    Interpretation<V> i = four_interp_at(g.atoms, rows[r]);
    ModelClassification<V> mc;
    mc.interpretation = i;
    mc.flags.is_model = is_model(g, i);
    mc.flags.is_cl_model = is_cl_model(g, i);
    mc.support = support(g, i, opt.fuse).support;
    mc.flags.is_supported = mc.flags.is_cl_model && leq_k(mc.support, i);
    mc.flags.is_deductively_closed = phi_prime(g, i, opt.fuse).value == i;
    mc.flags.is_stable =
        is_stable(g, i,
                  g.literal_normal ? StableCheckMethod::psi_prime_fixpoint
                                   : StableCheckMethod::kk_of_kcompletion,
                  opt.fuse);
    mc.flags.is_kk = i == report.kk;
    mc.flags.is_wf = i == report.wf;
    if (g.classical) {
      std::vector<size_t> u;
      for (size_t a = 0; a < n; ++a)
        if (mc.support[a] == V::f()) u.push_back(a);
      mc.unfounded = std::move(u);
    }
    report.rows[r] = std::move(mc);
  });

  for (const auto& mc : report.rows)
    if (mc.flags.is_stable) report.stable.push_back(mc.interpretation);
  return report;
}

}  // namespace bilat

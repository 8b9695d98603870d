#pragma once

#include <random>

#include "bilat/ast.hpp"

namespace bilat {

// Deterministic RNG wrapper: raw engine output with modulo reduction, so
// corpora are reproducible across standard libraries (std distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  size_t below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(next() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  size_t min_atoms = 1;
  size_t max_atoms = 4;
  size_t max_rules = 5;
  size_t max_depth = 3;
  bool classical = false;          // disjunction-of-conjunction bodies only
  bool literal_negation = true;    // keep ~ on atoms (Psi-route eligible)
  bool interval_constants = false; // sample [a,b] constants (interval kind)
};

namespace detail {

template <BilatticeValue V>
V random_constant(Rng& rng, const GenOptions& opt) {
  if constexpr (std::same_as<V, interval::Value>) {
    if (opt.interval_constants && rng.chance(60)) {
      Rational lo = rat(static_cast<long>(rng.below(11)), 10);
      Rational hi = rat(static_cast<long>(rng.below(11)), 10);
      return interval::Value(lo, hi);
    }
  }
  switch (rng.below(4)) {
    case 0: return V::f();
    case 1: return V::t();
    case 2: return V::bot();
    default: return V::top();
  }
}

template <BilatticeValue V>
Formula<V> random_literal(Rng& rng, const std::vector<std::string>& atoms,
                          const GenOptions& opt) {
  Atom a{atoms[rng.below(atoms.size())], {}};
  if (rng.chance(40)) return make_neg<V>(make_atom<V>(std::move(a)));
  (void)opt;
  return make_atom<V>(std::move(a));
}

template <BilatticeValue V>
Formula<V> random_body(Rng& rng, const std::vector<std::string>& atoms, size_t depth,
                       const GenOptions& opt) {
  if (depth == 0 || rng.chance(30)) {
    if (rng.chance(25)) return make_const<V>(random_constant<V>(rng, opt));
    if (!opt.literal_negation && rng.chance(20))
      return make_neg<V>(random_body<V>(rng, atoms, depth == 0 ? 0 : depth - 1, opt));
    return random_literal<V>(rng, atoms, opt);
  }
  Conn conn;
  switch (rng.below(4)) {
    case 0: conn = Conn::conj; break;
    case 1: conn = Conn::disj; break;
    case 2: conn = Conn::kmeet; break;
    default: conn = Conn::kjoin; break;
  }
  return make_binary<V>(conn, random_body<V>(rng, atoms, depth - 1, opt),
                        random_body<V>(rng, atoms, depth - 1, opt));
}

template <BilatticeValue V>
Formula<V> random_classical_body(Rng& rng, const std::vector<std::string>& atoms,
                                 const GenOptions& opt) {
  Formula<V> body;
  size_t disjuncts = 1 + rng.below(3);
  for (size_t d = 0; d < disjuncts; ++d) {
    Formula<V> conj;
    size_t lits = 1 + rng.below(3);
    for (size_t l = 0; l < lits; ++l) {
      Formula<V> lit;
      if (rng.chance(10)) {
        lit = make_const<V>(rng.chance(50) ? V::f() : V::t());
      } else {
        lit = random_literal<V>(rng, atoms, opt);
      }
      conj = conj ? make_binary<V>(Conn::conj, std::move(conj), std::move(lit))
                  : std::move(lit);
    }
    body = body ? make_binary<V>(Conn::disj, std::move(body), std::move(conj))
                : std::move(conj);
  }
  return body;
}

}  // namespace detail

// Seeded propositional program: duplicate heads exercise rule merging,
// headless atoms exercise the #f completion.
template <BilatticeValue V>
Program<V> random_program(Rng& rng, const GenOptions& opt = {}) {
  size_t lo = opt.min_atoms ? opt.min_atoms : 1;
  size_t atom_count = lo + rng.below(opt.max_atoms >= lo ? opt.max_atoms - lo + 1 : 1);
  std::vector<std::string> atoms;
  for (size_t i = 0; i < atom_count; ++i) atoms.push_back("p" + std::to_string(i));

  Program<V> prog;
  size_t rules = 1 + rng.below(opt.max_rules);
  for (size_t r = 0; r < rules; ++r) {
    Atom head{atoms[rng.below(atoms.size())], {}};
    Formula<V> body = opt.classical
                          ? detail::random_classical_body<V>(rng, atoms, opt)
                          : detail::random_body<V>(rng, atoms, opt.max_depth, opt);
    prog.rules.push_back(Rule<V>{std::move(head), std::move(body)});
  }
  return prog;
}

// Shrinking for property-test failures: rule deletion first, then body
// pruning (replace a body by an immediate subformula or by #f).
template <BilatticeValue V>
std::vector<Program<V>> shrink_candidates(const Program<V>& prog) {
  using Tag = typename FormulaNode<V>::Tag;
  std::vector<Program<V>> out;
  if (prog.rules.size() > 1) {
    for (size_t r = 0; r < prog.rules.size(); ++r) {
      Program<V> smaller;
      for (size_t k = 0; k < prog.rules.size(); ++k)
        if (k != r) smaller.rules.push_back(prog.rules[k]);
      out.push_back(std::move(smaller));
    }
  }
  for (size_t r = 0; r < prog.rules.size(); ++r) {
    const Formula<V>& body = prog.rules[r].body;
    std::vector<Formula<V>> replacements;
    switch (body->tag) {
      case Tag::binary:
        replacements = {body->lhs, body->rhs};
        break;
      case Tag::negation:
      case Tag::quantifier:
        replacements = {body->child};
        break;
      case Tag::atom:
        replacements = {make_const<V>(V::f())};
        break;
      case Tag::constant:
        break;
    }
    for (Formula<V>& rep : replacements) {
      Program<V> pruned = prog;
      pruned.rules[r].body = std::move(rep);
      out.push_back(std::move(pruned));
    }
  }
  return out;
}

}  // namespace bilat

#pragma once

#include "bilat/interp.hpp"

namespace bilat {

// P[I]: every body collapses to the constant it evaluates to under I.
template <BilatticeValue V>
GroundProgram<V> general_reduct(const GroundProgram<V>& g, const Interpretation<V>& i) {
  GroundProgram<V> out;
  out.atoms = g.atoms;
  out.universe = g.universe;
  out.bodies.reserve(g.size());
  for (size_t a = 0; a < g.size(); ++a)
    out.bodies.push_back(make_const<V>(eval_formula(i, g.bodies[a], g.universe)));
  finalize_ground(out);
  return out;
}

// P + I: each body phi becomes phi + I(A), forcing models to contain I's
// knowledge.
template <BilatticeValue V>
GroundProgram<V> k_complete(const GroundProgram<V>& g, const Interpretation<V>& i) {
  GroundProgram<V> out;
  out.atoms = g.atoms;
  out.universe = g.universe;
  out.bodies.reserve(g.size());
  for (size_t a = 0; a < g.size(); ++a)
    out.bodies.push_back(
        make_binary<V>(Conn::kjoin, g.bodies[a], make_const<V>(i[a])));
  finalize_ground(out);
  return out;
}

namespace detail {

inline Formula<four::Value> gl_body(const Formula<four::Value>& f,
                                    const Interpretation<four::Value>& i) {
  switch (f->tag) {
    case FormulaTag::atom:
    case FormulaTag::constant: return f;
    case FormulaTag::negation:
      // classical_body guarantees the child is an atom
      return make_const<four::Value>(neg(i.at(f->child->atom.key())), f->line, f->col);
    case FormulaTag::binary:
      return make_binary<four::Value>(f->conn, gl_body(f->lhs, i), gl_body(f->rhs, i),
                                      f->line, f->col);
    case FormulaTag::quantifier: break;
  }
  throw invariant_error("unexpected node in classical body");
}

}  // namespace detail

// Gelfond-Lifschitz reduct P^I: negative literals are fixed to their value
// under I; the result is a positive program. Classical-syntax bodies only;
// offered for FOUR (the interval stable check goes through Psi').
inline GroundProgram<four::Value> gl_reduct(const GroundProgram<four::Value>& g,
                                            const Interpretation<four::Value>& i) {
  if (!g.classical)
    throw invariant_error(
        "gl_reduct requires a classical program (disjunctions of conjunctions "
        "of literals and #f/#t constants)");
  GroundProgram<four::Value> out;
  out.atoms = g.atoms;
  out.universe = g.universe;
  out.bodies.reserve(g.size());
  for (size_t a = 0; a < g.size(); ++a)
    out.bodies.push_back(detail::gl_body(g.bodies[a], i));
  finalize_ground(out);
  return out;
}

}  // namespace bilat

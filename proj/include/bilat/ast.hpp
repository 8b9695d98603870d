#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bilat/bilattice.hpp"
#include "bilat/errors.hpp"

namespace bilat {

// Leading-uppercase identifiers are variables, everything else constants.
// No function symbols exist: the Herbrand universe is always finite.
struct Term {
  bool is_variable = false;
  std::string name;

  friend bool operator==(const Term& a, const Term& b) = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool ground() const {
    for (const Term& t : args)
      if (t.is_variable) return false;
    return true;
  }

  // Canonical ground-atom name, e.g. "p" or "edge(a,b)".
  std::string key() const {
    if (args.empty()) return pred;
    std::string s = pred + "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += args[i].name;
    }
    return s + ")";
  }

  friend bool operator==(const Atom& a, const Atom& b) = default;
};

enum class Conn { conj, disj, kmeet, kjoin };  // & | * +
enum class Quant { exists, forall };
enum class FormulaTag { atom, constant, negation, binary, quantifier };

template <BilatticeValue V>
struct FormulaNode;

// Immutable, structurally shared formula tree.
template <BilatticeValue V>
using Formula = std::shared_ptr<const FormulaNode<V>>;

template <BilatticeValue V>
struct FormulaNode {
  using Tag = FormulaTag;

  Tag tag;
  Atom atom;           // tag == atom
  V value{};           // tag == constant
  Conn conn{};         // tag == binary
  Quant quant{};       // tag == quantifier
  std::string var;     // tag == quantifier
  Formula<V> child;    // negation / quantifier
  Formula<V> lhs, rhs; // binary
  int line = 0, col = 0;
};

template <BilatticeValue V>
Formula<V> make_atom(Atom a, int line = 0, int col = 0) {
  auto n = std::make_shared<FormulaNode<V>>();
  n->tag = FormulaNode<V>::Tag::atom;
  n->atom = std::move(a);
  n->line = line;
  n->col = col;
  return n;
}

template <BilatticeValue V>
Formula<V> make_const(V v, int line = 0, int col = 0) {
  auto n = std::make_shared<FormulaNode<V>>();
  n->tag = FormulaNode<V>::Tag::constant;
  n->value = std::move(v);
  n->line = line;
  n->col = col;
  return n;
}

template <BilatticeValue V>
Formula<V> make_neg(Formula<V> f, int line = 0, int col = 0) {
  auto n = std::make_shared<FormulaNode<V>>();
  n->tag = FormulaNode<V>::Tag::negation;
  n->child = std::move(f);
  n->line = line;
  n->col = col;
  return n;
}

template <BilatticeValue V>
Formula<V> make_binary(Conn c, Formula<V> l, Formula<V> r, int line = 0, int col = 0) {
  auto n = std::make_shared<FormulaNode<V>>();
  n->tag = FormulaNode<V>::Tag::binary;
  n->conn = c;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  n->line = line;
  n->col = col;
  return n;
}

template <BilatticeValue V>
Formula<V> make_quant(Quant q, std::string var, Formula<V> body, int line = 0, int col = 0) {
  auto n = std::make_shared<FormulaNode<V>>();
  n->tag = FormulaNode<V>::Tag::quantifier;
  n->quant = q;
  n->var = std::move(var);
  n->child = std::move(body);
  n->line = line;
  n->col = col;
  return n;
}

template <BilatticeValue V>
struct Rule {
  Atom head;
  Formula<V> body;
  int line = 0, col = 0;
};

template <BilatticeValue V>
struct Program {
  std::vector<Rule<V>> rules;
};

template <BilatticeValue V>
bool formula_equal(const Formula<V>& a, const Formula<V>& b) {
  if (a == b) return true;
  if (!a || !b || a->tag != b->tag) return false;
  using Tag = typename FormulaNode<V>::Tag;
  switch (a->tag) {
    case Tag::atom: return a->atom == b->atom;
    case Tag::constant: return a->value == b->value;
    case Tag::negation: return formula_equal(a->child, b->child);
    case Tag::binary:
      return a->conn == b->conn && formula_equal(a->lhs, b->lhs) &&
             formula_equal(a->rhs, b->rhs);
    case Tag::quantifier:
      return a->quant == b->quant && a->var == b->var &&
             formula_equal(a->child, b->child);
  }
  return false;
}

template <BilatticeValue V>
void for_each_atom(const Formula<V>& f, const std::function<void(const Atom&)>& fn) {
  if (!f) return;
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom: fn(f->atom); break;
    case Tag::constant: break;
    case Tag::negation:
    case Tag::quantifier: for_each_atom(f->child, fn); break;
    case Tag::binary:
      for_each_atom(f->lhs, fn);
      for_each_atom(f->rhs, fn);
      break;
  }
}

// Every negation wraps an atom or a constant directly; required by the
// pseudo-interpretation route (Psi and friends).
template <BilatticeValue V>
bool literal_normal(const Formula<V>& f) {
  if (!f) return true;
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom:
    case Tag::constant: return true;
    case Tag::negation:
      return f->child->tag == Tag::atom || f->child->tag == Tag::constant;
    case Tag::quantifier: return literal_normal(f->child);
    case Tag::binary: return literal_normal(f->lhs) && literal_normal(f->rhs);
  }
  return false;
}

namespace detail {

template <BilatticeValue V>
bool classical_literal(const Formula<V>& f) {
  using Tag = typename FormulaNode<V>::Tag;
  if (f->tag == Tag::atom) return true;
  if (f->tag == Tag::negation) return f->child->tag == Tag::atom;
  if (f->tag == Tag::constant) return f->value == V::f() || f->value == V::t();
  return false;
}

template <BilatticeValue V>
bool classical_conjunct(const Formula<V>& f) {
  using Tag = typename FormulaNode<V>::Tag;
  if (f->tag == Tag::binary && f->conn == Conn::conj)
    return classical_conjunct(f->lhs) && classical_conjunct(f->rhs);
  return classical_literal(f);
}

}  // namespace detail

// Classical body shape: a disjunction of conjunctions of literals and the
// constants f/t. This is the gate for the GL reduct, T_P and the
// unfounded-set view.
template <BilatticeValue V>
bool classical_body(const Formula<V>& f) {
  using Tag = typename FormulaNode<V>::Tag;
  if (f->tag == Tag::binary && f->conn == Conn::disj)
    return classical_body(f->lhs) && classical_body(f->rhs);
  return detail::classical_conjunct(f);
}

// Top-level disjuncts of a classical body, left to right.
template <BilatticeValue V>
void classical_disjuncts(const Formula<V>& f, std::vector<Formula<V>>& out) {
  using Tag = typename FormulaNode<V>::Tag;
  if (f->tag == Tag::binary && f->conn == Conn::disj) {
    classical_disjuncts(f->lhs, out);
    classical_disjuncts(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

namespace detail {

inline int conn_level(Conn c) {
  switch (c) {
    case Conn::kjoin: return 1;
    case Conn::kmeet: return 2;
    case Conn::disj: return 3;
    case Conn::conj: return 4;
  }
  return 0;
}

inline const char* conn_token(Conn c) {
  switch (c) {
    case Conn::kjoin: return " + ";
    case Conn::kmeet: return " * ";
    case Conn::disj: return " | ";
    case Conn::conj: return " & ";
  }
  return "?";
}

template <BilatticeValue V>
std::string const_token(const V& v) {
  if constexpr (std::same_as<V, four::Value>) {
    return "#" + to_string(v);
  } else {
    if (v == V::f()) return "#f";
    if (v == V::t()) return "#t";
    if (v == V::bot()) return "#bot";
    if (v == V::top()) return "#top";
    return to_string(v);
  }
}

template <BilatticeValue V>
void print_formula(const Formula<V>& f, int parent_level, std::string& out) {
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom: out += f->atom.key(); break;
    case Tag::constant: out += const_token(f->value); break;
    case Tag::negation:
      out += "~";
      print_formula(f->child, 5, out);
      break;
    case Tag::binary: {
      int level = conn_level(f->conn);
      bool paren = level < parent_level;
      if (paren) out += "(";
      print_formula(f->lhs, level, out);
      out += conn_token(f->conn);
      // The grammar is left-associative: a right-nested same-level child
      // needs parentheses to parse back to an equal tree.
      print_formula(f->rhs, level + 1, out);
      if (paren) out += ")";
      break;
    }
    case Tag::quantifier: {
      bool paren = parent_level > 0;
      if (paren) out += "(";
      out += f->quant == Quant::exists ? "exists " : "forall ";
      out += f->var;
      out += ": ";
      print_formula(f->child, 0, out);
      if (paren) out += ")";
      break;
    }
  }
}

}  // namespace detail

// DSL-compatible rendering with minimal parentheses; used for program
// hashing, golden dumps and tests (the result parses back to an equal tree).
template <BilatticeValue V>
std::string formula_to_string(const Formula<V>& f) {
  std::string out;
  detail::print_formula(f, 0, out);
  return out;
}

}  // namespace bilat

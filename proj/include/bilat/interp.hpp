#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bilat/ground.hpp"

namespace bilat {

// Total map from the base's ground atoms to values, stored densely in base
// order. Immutable value semantics; operators return fresh interpretations.
template <BilatticeValue V>
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::shared_ptr<const AtomTable> atoms, V fill)
      : atoms_(std::move(atoms)), vals_(atoms_->size(), std::move(fill)) {}

  static Interpretation bottom_t(std::shared_ptr<const AtomTable> a) {
    return Interpretation(std::move(a), V::f());
  }
  static Interpretation top_t(std::shared_ptr<const AtomTable> a) {
    return Interpretation(std::move(a), V::t());
  }
  static Interpretation bottom_k(std::shared_ptr<const AtomTable> a) {
    return Interpretation(std::move(a), V::bot());
  }
  static Interpretation top_k(std::shared_ptr<const AtomTable> a) {
    return Interpretation(std::move(a), V::top());
  }

  const std::shared_ptr<const AtomTable>& table() const { return atoms_; }
  size_t size() const { return vals_.size(); }

  const V& operator[](size_t i) const { return vals_[i]; }
  V& operator[](size_t i) { return vals_[i]; }

  std::span<const V> values() const { return vals_; }
  std::span<V> values_mut() { return vals_; }

  const V& at(const std::string& name) const {
    auto idx = atoms_->find(name);
    if (!idx) throw invariant_error("unknown atom '" + name + "'");
    return vals_[*idx];
  }
  void set(const std::string& name, V v) {
    auto idx = atoms_->find(name);
    if (!idx) throw invariant_error("unknown atom '" + name + "'");
    vals_[*idx] = std::move(v);
  }

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.vals_ == b.vals_;
  }

  friend bool leq_t(const Interpretation& a, const Interpretation& b) {
    check_base(a, b);
    for (size_t i = 0; i < a.size(); ++i)
      if (!leq_t(a[i], b[i])) return false;
    return true;
  }
  friend bool leq_k(const Interpretation& a, const Interpretation& b) {
    check_base(a, b);
    for (size_t i = 0; i < a.size(); ++i)
      if (!leq_k(a[i], b[i])) return false;
    return true;
  }

  friend Interpretation meet_t(const Interpretation& a, const Interpretation& b) {
    return pointwise(a, b, [](const V& x, const V& y) { return meet_t(x, y); });
  }
  friend Interpretation join_t(const Interpretation& a, const Interpretation& b) {
    return pointwise(a, b, [](const V& x, const V& y) { return join_t(x, y); });
  }
  friend Interpretation meet_k(const Interpretation& a, const Interpretation& b) {
    return pointwise(a, b, [](const V& x, const V& y) { return meet_k(x, y); });
  }
  friend Interpretation join_k(const Interpretation& a, const Interpretation& b) {
    return pointwise(a, b, [](const V& x, const V& y) { return join_k(x, y); });
  }
  friend Interpretation neg(const Interpretation& a) {
    Interpretation out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] = neg(out[i]);
    return out;
  }

 private:
  static void check_base(const Interpretation& a, const Interpretation& b) {
    if (a.atoms_ != b.atoms_ && (!a.atoms_ || !b.atoms_ || a.atoms_->names() != b.atoms_->names()))
      throw invariant_error("interpretation base mismatch");
  }

  template <typename Op>
  static Interpretation pointwise(const Interpretation& a, const Interpretation& b, Op op) {
    check_base(a, b);
    Interpretation out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
    return out;
  }

  std::shared_ptr<const AtomTable> atoms_;
  std::vector<V> vals_;
};

// I gives meaning to positive literals, J to negative ones.
template <BilatticeValue V>
struct PseudoPair {
  Interpretation<V> pos;
  Interpretation<V> neg;
};

namespace detail {

using Env = std::vector<std::pair<std::string, std::string>>;

inline std::string resolve_key(const Atom& a, const Env& env) {
  if (a.ground()) return a.key();
  Atom resolved = a;
  for (Term& t : resolved.args) {
    if (!t.is_variable) continue;
    bool found = false;
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == t.name) {
        t = Term{false, it->second};
        found = true;
        break;
      }
    }
    if (!found) throw invariant_error("unbound variable '" + t.name + "' in formula");
  }
  return resolved.key();
}

template <BilatticeValue V>
V eval_rec(const Interpretation<V>& i, const Formula<V>& f,
           std::span<const std::string> universe, Env& env) {
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom: return i.at(resolve_key(f->atom, env));
    case Tag::constant: return f->value;
    case Tag::negation: return neg(eval_rec(i, f->child, universe, env));
    case Tag::binary: {
      V l = eval_rec(i, f->lhs, universe, env);
      V r = eval_rec(i, f->rhs, universe, env);
      switch (f->conn) {
        case Conn::conj: return meet_t(l, r);
        case Conn::disj: return join_t(l, r);
        case Conn::kmeet: return meet_k(l, r);
        case Conn::kjoin: return join_k(l, r);
      }
      return l;
    }
    case Tag::quantifier: {
      bool exists = f->quant == Quant::exists;
      V acc = exists ? V::f() : V::t();
      for (const std::string& c : universe) {
        env.emplace_back(f->var, c);
        V v = eval_rec(i, f->child, universe, env);
        env.pop_back();
        acc = exists ? join_t(acc, v) : meet_t(acc, v);
      }
      return acc;
    }
  }
  return V::bot();
}

template <BilatticeValue V>
V eval_pseudo_rec(const Interpretation<V>& pos, const Interpretation<V>& negi,
                  const Formula<V>& f, std::span<const std::string> universe, Env& env) {
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom: return pos.at(resolve_key(f->atom, env));
    case Tag::constant: return f->value;
    case Tag::negation: {
      const Formula<V>& c = f->child;
      if (c->tag == Tag::atom) return neg(negi.at(resolve_key(c->atom, env)));
      if (c->tag == Tag::constant) return neg(c->value);
      throw invariant_error("pseudo-evaluation requires negation on literals only");
    }
    case Tag::binary: {
      V l = eval_pseudo_rec(pos, negi, f->lhs, universe, env);
      V r = eval_pseudo_rec(pos, negi, f->rhs, universe, env);
      switch (f->conn) {
        case Conn::conj: return meet_t(l, r);
        case Conn::disj: return join_t(l, r);
        case Conn::kmeet: return meet_k(l, r);
        case Conn::kjoin: return join_k(l, r);
      }
      return l;
    }
    case Tag::quantifier: {
      bool exists = f->quant == Quant::exists;
      V acc = exists ? V::f() : V::t();
      for (const std::string& c : universe) {
        env.emplace_back(f->var, c);
        V v = eval_pseudo_rec(pos, negi, f->child, universe, env);
        env.pop_back();
        acc = exists ? join_t(acc, v) : meet_t(acc, v);
      }
      return acc;
    }
  }
  return V::bot();
}

}  // namespace detail

// Classical negation: ~phi evaluates to neg of phi's value. Quantifiers are
// normally expanded away by grounding, but the evaluator accepts them given
// the universe.
template <BilatticeValue V>
V eval_formula(const Interpretation<V>& i, const Formula<V>& f,
               std::span<const std::string> universe = {}) {
  detail::Env env;
  return detail::eval_rec(i, f, universe, env);
}

// Atoms read pos; a negated atom reads neg under negation.
template <BilatticeValue V>
V eval_pseudo(const Interpretation<V>& pos, const Interpretation<V>& neg,
              const Formula<V>& f, std::span<const std::string> universe = {}) {
  detail::Env env;
  return detail::eval_pseudo_rec(pos, neg, f, universe, env);
}

template <BilatticeValue V>
V eval_pseudo(const PseudoPair<V>& pp, const Formula<V>& f,
              std::span<const std::string> universe = {}) {
  return eval_pseudo(pp.pos, pp.neg, f, universe);
}

}  // namespace bilat

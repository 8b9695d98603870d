#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bilat/ast.hpp"

namespace bilat {

// Ordered set of ground atoms. The order is fixed at construction and drives
// interpretation storage, table rows, JSON keys and enumeration indexing.
class AtomTable {
 public:
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  size_t add(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    size_t idx = names_.size();
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> index_;
};

// Ground bodies are compiled to postfix code evaluated over dense value
// arrays; the formula trees remain the reference representation (the tree
// evaluator cross-checks the compiled one in the tests).
enum class OpCode : std::uint8_t {
  push_atom,      // operand: atom index, reads the positive side
  push_neg_atom,  // operand: atom index, negation of the negative side
  push_const,
  negate,         // general negation of the stack top (not literal-normal)
  conj,
  disj,
  kmeet,
  kjoin,
};

template <BilatticeValue V>
struct Instr {
  OpCode op;
  std::uint32_t index = 0;
  V constant{};
};

template <BilatticeValue V>
struct CompiledBody {
  std::vector<Instr<V>> code;
  std::uint32_t max_stack = 0;
};

// The normalized P* form: exactly one body per ground atom. Headless atoms
// carry the body #f; same-head rules are merged with | in source order.
template <BilatticeValue V>
struct GroundProgram {
  std::shared_ptr<const AtomTable> atoms;
  std::vector<Formula<V>> bodies;       // aligned with atoms
  std::vector<CompiledBody<V>> code;    // aligned with bodies
  std::vector<std::string> universe;    // term constants, first-occurrence order
  bool literal_normal = true;           // Psi-route eligibility
  bool classical = true;                // GL / T_P / unfounded-set eligibility

  size_t size() const { return atoms->size(); }
  const Formula<V>& body(size_t i) const { return bodies[i]; }
};

namespace detail {

template <BilatticeValue V>
void compile_body(const Formula<V>& f, const AtomTable& atoms,
                  std::vector<Instr<V>>& out, std::uint32_t& depth,
                  std::uint32_t& max_depth) {
  auto grew = [&] {
    if (++depth > max_depth) max_depth = depth;
  };
  switch (f->tag) {
    case FormulaTag::atom: {
      auto idx = atoms.find(f->atom.key());
      if (!idx) throw invariant_error("body atom missing from base: " + f->atom.key());
      out.push_back({OpCode::push_atom, static_cast<std::uint32_t>(*idx), V{}});
      grew();
      return;
    }
    case FormulaTag::constant:
      out.push_back({OpCode::push_const, 0, f->value});
      grew();
      return;
    case FormulaTag::negation: {
      const Formula<V>& c = f->child;
      if (c->tag == FormulaTag::atom) {
        auto idx = atoms.find(c->atom.key());
        if (!idx) throw invariant_error("body atom missing from base: " + c->atom.key());
        out.push_back({OpCode::push_neg_atom, static_cast<std::uint32_t>(*idx), V{}});
        grew();
        return;
      }
      if (c->tag == FormulaTag::constant) {
        out.push_back({OpCode::push_const, 0, neg(c->value)});
        grew();
        return;
      }
      compile_body(c, atoms, out, depth, max_depth);
      out.push_back({OpCode::negate, 0, V{}});
      return;
    }
    case FormulaTag::binary: {
      compile_body(f->lhs, atoms, out, depth, max_depth);
      compile_body(f->rhs, atoms, out, depth, max_depth);
      OpCode op = OpCode::conj;
      switch (f->conn) {
        case Conn::conj: op = OpCode::conj; break;
        case Conn::disj: op = OpCode::disj; break;
        case Conn::kmeet: op = OpCode::kmeet; break;
        case Conn::kjoin: op = OpCode::kjoin; break;
      }
      out.push_back({op, 0, V{}});
      --depth;
      return;
    }
    case FormulaTag::quantifier:
      throw invariant_error("ground bodies must be quantifier-free");
  }
}

template <BilatticeValue V>
CompiledBody<V> compile_body(const Formula<V>& f, const AtomTable& atoms) {
  CompiledBody<V> body;
  std::uint32_t depth = 0;
  compile_body(f, atoms, body.code, depth, body.max_stack);
  return body;
}

}  // namespace detail

// Positive side only; throws on a general negate instruction when pseudo
// evaluation is requested (negation must sit on literals for that route).
template <BilatticeValue V>
V eval_compiled(const CompiledBody<V>& body, std::span<const V> pos,
                std::span<const V> negs, std::vector<V>& stack) {
  if (stack.size() < body.max_stack) stack.resize(body.max_stack, V::bot());
  size_t top = 0;
  const bool pseudo = !negs.empty();
  for (const Instr<V>& in : body.code) {
    switch (in.op) {
      case OpCode::push_atom: stack[top++] = pos[in.index]; break;
      case OpCode::push_neg_atom:
        stack[top++] = neg(pseudo ? negs[in.index] : pos[in.index]);
        break;
      case OpCode::push_const: stack[top++] = in.constant; break;
      case OpCode::negate:
        if (pseudo)
          throw invariant_error("pseudo-evaluation requires negation on literals only");
        stack[top - 1] = neg(stack[top - 1]);
        break;
      case OpCode::conj:
        stack[top - 2] = meet_t(stack[top - 2], stack[top - 1]);
        --top;
        break;
      case OpCode::disj:
        stack[top - 2] = join_t(stack[top - 2], stack[top - 1]);
        --top;
        break;
      case OpCode::kmeet:
        stack[top - 2] = meet_k(stack[top - 2], stack[top - 1]);
        --top;
        break;
      case OpCode::kjoin:
        stack[top - 2] = join_k(stack[top - 2], stack[top - 1]);
        --top;
        break;
    }
  }
  return stack[top - 1];
}

// Fills in the compiled code and the syntactic flags; every GroundProgram
// constructor path funnels through here.
template <BilatticeValue V>
void finalize_ground(GroundProgram<V>& g) {
  g.code.clear();
  g.code.reserve(g.bodies.size());
  g.literal_normal = true;
  g.classical = true;
  for (const Formula<V>& b : g.bodies) {
    g.code.push_back(detail::compile_body(b, *g.atoms));
    if (!literal_normal(b)) g.literal_normal = false;
    if (!classical_body(b)) g.classical = false;
  }
}

namespace detail {

template <BilatticeValue V>
Formula<V> substitute(const Formula<V>& f,
                      const std::map<std::string, std::string>& env) {
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom: {
      bool touched = false;
      Atom a = f->atom;
      for (Term& t : a.args) {
        if (t.is_variable) {
          auto it = env.find(t.name);
          if (it != env.end()) {
            t = Term{false, it->second};
            touched = true;
          }
        }
      }
      return touched ? make_atom<V>(std::move(a), f->line, f->col) : f;
    }
    case Tag::constant: return f;
    case Tag::negation: return make_neg<V>(substitute(f->child, env), f->line, f->col);
    case Tag::binary:
      return make_binary<V>(f->conn, substitute(f->lhs, env), substitute(f->rhs, env),
                            f->line, f->col);
    case Tag::quantifier: {
      if (env.count(f->var)) {
        auto inner = env;
        inner.erase(f->var);  // quantifier shadows an outer binding
        return make_quant<V>(f->quant, f->var, substitute(f->child, inner), f->line, f->col);
      }
      return make_quant<V>(f->quant, f->var, substitute(f->child, env), f->line, f->col);
    }
  }
  return f;
}

// Replaces quantifiers by finite joins/meets over the universe, left-assoc
// in universe order; the empty universe collapses to #f / #t.
template <BilatticeValue V>
Formula<V> expand_quantifiers(const Formula<V>& f,
                              const std::vector<std::string>& universe) {
  using Tag = typename FormulaNode<V>::Tag;
  switch (f->tag) {
    case Tag::atom:
    case Tag::constant: return f;
    case Tag::negation:
      return make_neg<V>(expand_quantifiers(f->child, universe), f->line, f->col);
    case Tag::binary:
      return make_binary<V>(f->conn, expand_quantifiers(f->lhs, universe),
                            expand_quantifiers(f->rhs, universe), f->line, f->col);
    case Tag::quantifier: {
      bool exists = f->quant == Quant::exists;
      Formula<V> acc;
      for (const std::string& c : universe) {
        std::map<std::string, std::string> env{{f->var, c}};
        Formula<V> inst = expand_quantifiers(substitute(f->child, env), universe);
        if (!acc) {
          acc = std::move(inst);
        } else {
          acc = make_binary<V>(exists ? Conn::disj : Conn::conj, std::move(acc),
                               std::move(inst), f->line, f->col);
        }
      }
      if (!acc) acc = make_const<V>(exists ? V::f() : V::t(), f->line, f->col);
      return acc;
    }
  }
  return f;
}

inline void collect_constants(const Atom& a, std::vector<std::string>& universe) {
  for (const Term& t : a.args) {
    if (t.is_variable) continue;
    bool seen = false;
    for (const std::string& c : universe)
      if (c == t.name) { seen = true; break; }
    if (!seen) universe.push_back(t.name);
  }
}

}  // namespace detail

// Def-lpstar construction: ground every rule over the Herbrand universe,
// merge same-head bodies with |, give every remaining base atom the body #f.
template <BilatticeValue V>
GroundProgram<V> build_pstar(const Program<V>& prog) {
  GroundProgram<V> g;

  std::vector<std::string> universe;
  for (const Rule<V>& r : prog.rules) {
    detail::collect_constants(r.head, universe);
    for_each_atom<V>(r.body, [&](const Atom& a) { detail::collect_constants(a, universe); });
  }

  // Ground rule instances in (rule, substitution) order; the odometer runs
  // its rightmost variable fastest.
  struct GroundRule {
    std::string head;
    Formula<V> body;
  };
  std::vector<GroundRule> ground_rules;
  for (const Rule<V>& r : prog.rules) {
    std::vector<std::string> vars;
    for (const Term& t : r.head.args)
      if (t.is_variable) {
        bool seen = false;
        for (const std::string& v : vars)
          if (v == t.name) { seen = true; break; }
        if (!seen) vars.push_back(t.name);
      }
    if (vars.empty()) {
      ground_rules.push_back({r.head.key(), detail::expand_quantifiers(r.body, universe)});
      continue;
    }
    if (universe.empty()) continue;  // no ground instances
    std::vector<size_t> odo(vars.size(), 0);
    while (true) {
      std::map<std::string, std::string> env;
      for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = universe[odo[i]];
      Atom head = r.head;
      for (Term& t : head.args)
        if (t.is_variable) t = Term{false, env.at(t.name)};
      Formula<V> body =
          detail::expand_quantifiers(detail::substitute(r.body, env), universe);
      ground_rules.push_back({head.key(), std::move(body)});
      size_t i = vars.size();
      while (i > 0 && ++odo[i - 1] == universe.size()) odo[--i] = 0;
      if (i == 0) break;
    }
  }

  // Base order: ground heads first, then body-only atoms, then the rest of
  // the predicate x universe product (those also get #f bodies).
  auto table = std::make_shared<AtomTable>();
  for (const GroundRule& gr : ground_rules) table->add(gr.head);
  for (const GroundRule& gr : ground_rules)
    for_each_atom<V>(gr.body, [&](const Atom& a) { table->add(a.key()); });

  std::vector<std::pair<std::string, size_t>> preds;  // (name, arity), first occurrence
  auto note_pred = [&](const Atom& a) {
    for (auto& p : preds)
      if (p.first == a.pred && p.second == a.args.size()) return;
    preds.emplace_back(a.pred, a.args.size());
  };
  for (const Rule<V>& r : prog.rules) {
    note_pred(r.head);
    for_each_atom<V>(r.body, [&](const Atom& a) { note_pred(a); });
  }
  for (const auto& [pred, arity] : preds) {
    if (arity == 0) {
      table->add(pred);
      continue;
    }
    if (universe.empty()) continue;
    std::vector<size_t> odo(arity, 0);
    while (true) {
      Atom a{pred, {}};
      for (size_t i = 0; i < arity; ++i) a.args.push_back(Term{false, universe[odo[i]]});
      table->add(a.key());
      size_t i = arity;
      while (i > 0 && ++odo[i - 1] == universe.size()) odo[--i] = 0;
      if (i == 0) break;
    }
  }

  g.atoms = table;
  g.universe = std::move(universe);
  g.bodies.resize(table->size());
  for (const GroundRule& gr : ground_rules) {
    size_t idx = *table->find(gr.head);
    if (!g.bodies[idx]) {
      g.bodies[idx] = gr.body;
    } else {
      g.bodies[idx] = make_binary<V>(Conn::disj, g.bodies[idx], gr.body);
    }
  }
  for (Formula<V>& b : g.bodies)
    if (!b) b = make_const<V>(V::f());

  finalize_ground(g);
  return g;
}

// Canonical text form of P*, the basis of determinism checks and the program
// hash.
template <BilatticeValue V>
std::string pstar_to_string(const GroundProgram<V>& g) {
  std::string out = std::string(kind_name(V::f())) + "\n";
  for (size_t i = 0; i < g.size(); ++i) {
    out += g.atoms->name(i);
    out += " <- ";
    out += formula_to_string(g.bodies[i]);
    out += ".\n";
  }
  return out;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

template <BilatticeValue V>
std::uint64_t program_hash(const GroundProgram<V>& g) {
  return fnv1a64(pstar_to_string(g));
}

}  // namespace bilat

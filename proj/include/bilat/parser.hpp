#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bilat/ast.hpp"

namespace bilat {

namespace detail {

enum class Tok {
  ident,    // leading lowercase: predicate or constant
  variable, // leading uppercase
  number,
  hash,     // #t #f #top #bot
  larrow,
  dot,
  tilde,
  lparen,
  rparen,
  amp,
  pipe,
  star,
  plus,
  comma,
  colon,
  lbracket,
  rbracket,
  kw_exists,
  kw_forall,
  eof,
};

struct Token {
  Tok type;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::eof, "", line, col});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string word = take_word();
        Tok t = Tok::ident;
        if (word == "exists") t = Tok::kw_exists;
        else if (word == "forall") t = Tok::kw_forall;
        else if (std::isupper(static_cast<unsigned char>(word[0]))) t = Tok::variable;
        out.push_back({t, word, line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        // '.' starts a number only when followed by a digit; otherwise it is
        // the rule terminator.
        if (c == '.' && !(pos_ + 1 < src_.size() &&
                          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
          advance();
          out.push_back({Tok::dot, ".", line, col});
          continue;
        }
        out.push_back({Tok::number, take_number(), line, col});
        continue;
      }
      switch (c) {
        case '#': {
          advance();
          std::string word = take_word();
          if (word != "t" && word != "f" && word != "top" && word != "bot")
            throw parse_error("unknown constant '#" + word + "'", line, col);
          out.push_back({Tok::hash, word, line, col});
          continue;
        }
        case '<':
          if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
            advance();
            advance();
            out.push_back({Tok::larrow, "<-", line, col});
            continue;
          }
          throw parse_error("stray '<'", line, col);
        case '~': advance(); out.push_back({Tok::tilde, "~", line, col}); continue;
        case '(': advance(); out.push_back({Tok::lparen, "(", line, col}); continue;
        case ')': advance(); out.push_back({Tok::rparen, ")", line, col}); continue;
        case '&': advance(); out.push_back({Tok::amp, "&", line, col}); continue;
        case '|': advance(); out.push_back({Tok::pipe, "|", line, col}); continue;
        case '*': advance(); out.push_back({Tok::star, "*", line, col}); continue;
        case '+': advance(); out.push_back({Tok::plus, "+", line, col}); continue;
        case ',': advance(); out.push_back({Tok::comma, ",", line, col}); continue;
        case ':': advance(); out.push_back({Tok::colon, ":", line, col}); continue;
        case '[': advance(); out.push_back({Tok::lbracket, "[", line, col}); continue;
        case ']': advance(); out.push_back({Tok::rbracket, "]", line, col}); continue;
        default:
          throw parse_error(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string take_word() {
    std::string w;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        w += c;
        advance();
      } else {
        break;
      }
    }
    return w;
  }

  std::string take_number() {
    std::string w;
    bool seen_sep = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        w += c;
        advance();
      } else if ((c == '.' || c == '/') && !seen_sep && pos_ + 1 < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        seen_sep = true;
        w += c;
        advance();
      } else {
        break;
      }
    }
    return w;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

template <BilatticeValue V>
class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  Program<V> parse() {
    Program<V> prog;
    while (peek().type != Tok::eof) prog.rules.push_back(rule());
    return prog;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  Token expect(Tok t, const char* what) {
    if (peek().type != t)
      throw parse_error(std::string("expected ") + what + ", got '" + describe(peek()) + "'",
                        peek().line, peek().col);
    return get();
  }

  static std::string describe(const Token& t) {
    return t.type == Tok::eof ? "end of input" : t.text;
  }

  Rule<V> rule() {
    Token start = peek();
    Atom head = atom();
    Formula<V> body;
    if (peek().type == Tok::larrow) {
      get();
      body = formula();
    } else {
      body = make_const<V>(V::t(), start.line, start.col);  // fact sugar
    }
    expect(Tok::dot, "'.'");
    check_scope(head, body);
    return Rule<V>{std::move(head), std::move(body), start.line, start.col};
  }

  Atom atom() {
    Token name = expect(Tok::ident, "atom name");
    Atom a{name.text, {}};
    if (peek().type == Tok::lparen) {
      get();
      a.args.push_back(term());
      while (peek().type == Tok::comma) {
        get();
        a.args.push_back(term());
      }
      expect(Tok::rparen, "')'");
    }
    return a;
  }

  Term term() {
    const Token& t = peek();
    if (t.type != Tok::ident && t.type != Tok::variable)
      throw parse_error("expected term, got '" + describe(t) + "'", t.line, t.col);
    get();
    if (peek().type == Tok::lparen)
      throw parse_error("function symbol '" + t.text + "' is not supported", t.line, t.col);
    return Term{t.type == Tok::variable, t.text};
  }

  Formula<V> formula() {
    if (peek().type == Tok::kw_exists || peek().type == Tok::kw_forall) {
      Token q = get();
      Token var = expect(Tok::variable, "quantified variable");
      expect(Tok::colon, "':'");
      Formula<V> body = formula();
      return make_quant<V>(q.type == Tok::kw_exists ? Quant::exists : Quant::forall,
                           var.text, std::move(body), q.line, q.col);
    }
    return kjoin();
  }

  Formula<V> kjoin() {
    Formula<V> f = kmeet();
    while (peek().type == Tok::plus) {
      Token op = get();
      f = make_binary<V>(Conn::kjoin, std::move(f), kmeet(), op.line, op.col);
    }
    return f;
  }

  Formula<V> kmeet() {
    Formula<V> f = disj();
    while (peek().type == Tok::star) {
      Token op = get();
      f = make_binary<V>(Conn::kmeet, std::move(f), disj(), op.line, op.col);
    }
    return f;
  }

  Formula<V> disj() {
    Formula<V> f = conj();
    while (peek().type == Tok::pipe) {
      Token op = get();
      f = make_binary<V>(Conn::disj, std::move(f), conj(), op.line, op.col);
    }
    return f;
  }

  Formula<V> conj() {
    Formula<V> f = unary();
    while (peek().type == Tok::amp) {
      Token op = get();
      f = make_binary<V>(Conn::conj, std::move(f), unary(), op.line, op.col);
    }
    return f;
  }

  Formula<V> unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::tilde: {
        get();
        return make_neg<V>(unary(), t.line, t.col);
      }
      case Tok::lparen: {
        get();
        Formula<V> f = formula();
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::hash: {
        get();
        V v = t.text == "t"   ? V::t()
              : t.text == "f" ? V::f()
              : t.text == "top" ? V::top()
                                : V::bot();
        return make_const<V>(v, t.line, t.col);
      }
      case Tok::lbracket: {
        if constexpr (std::same_as<V, interval::Value>) {
          get();
          Rational lo = endpoint();
          expect(Tok::comma, "','");
          Rational hi = endpoint();
          expect(Tok::rbracket, "']'");
          interval::Value v(lo, hi);
          if (!v.in_unit_range())
            throw parse_error("interval endpoint outside [0,1]", t.line, t.col);
          return make_const<V>(v, t.line, t.col);
        } else {
          throw parse_error("interval constant requires kind=interval", t.line, t.col);
        }
      }
      case Tok::ident:
        return make_atom<V>(atom(), t.line, t.col);
      default:
        throw parse_error("expected formula, got '" + describe(t) + "'", t.line, t.col);
    }
  }

  Rational endpoint() {
    Token n = expect(Tok::number, "number");
    auto r = parse_rational(n.text);
    if (!r) throw parse_error("bad number '" + n.text + "'", n.line, n.col);
    return *r;
  }

  // Every free body variable must occur in the head; quantifiers bind.
  void check_scope(const Atom& head, const Formula<V>& body) {
    std::set<std::string> bound;
    for (const Term& t : head.args)
      if (t.is_variable) bound.insert(t.name);
    check_vars(body, bound);
  }

  void check_vars(const Formula<V>& f, std::set<std::string>& bound) {
    using Tag = typename FormulaNode<V>::Tag;
    switch (f->tag) {
      case Tag::atom:
        for (const Term& t : f->atom.args)
          if (t.is_variable && !bound.count(t.name))
            throw parse_error("variable '" + t.name + "' not bound by head or quantifier",
                              f->line, f->col);
        break;
      case Tag::constant: break;
      case Tag::negation: check_vars(f->child, bound); break;
      case Tag::binary:
        check_vars(f->lhs, bound);
        check_vars(f->rhs, bound);
        break;
      case Tag::quantifier: {
        bool fresh = bound.insert(f->var).second;
        check_vars(f->child, bound);
        if (fresh) bound.erase(f->var);
        break;
      }
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace detail

template <BilatticeValue V>
Program<V> parse_program(std::string_view text) {
  return detail::Parser<V>(text).parse();
}

}  // namespace bilat

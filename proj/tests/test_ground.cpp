#include "doctest.h"
#include "helpers.hpp"

using namespace bt;

TEST_CASE("same-head rules merge with | in source order") {
  // P = {A <- ~A, A <- alpha}  ==>  P* = {A <- ~A | alpha}
  auto g = build_pstar(parse_program<FV>("a <- ~a. a <- #f."));
  REQUIRE(g.size() == 1);
  CHECK(formula_to_string(g.bodies[0]) == "~a | #f");
}

TEST_CASE("running example grounds to itself") {
  auto g = running();
  REQUIRE(g.size() == 3);
  CHECK(g.atoms->name(0) == "p");
  CHECK(g.atoms->name(1) == "q");
  CHECK(g.atoms->name(2) == "r");
  CHECK(formula_to_string(g.bodies[0]) == "p");
  CHECK(formula_to_string(g.bodies[1]) == "~r");
  CHECK(formula_to_string(g.bodies[2]) == "~q & ~p");
  CHECK(g.classical);
  CHECK(g.literal_normal);
}

TEST_CASE("headless atoms get the body #f") {
  auto g = build_pstar(parse_program<FV>("q <- p."));
  REQUIRE(g.size() == 2);
  CHECK(g.atoms->name(0) == "q");
  CHECK(g.atoms->name(1) == "p");
  CHECK(formula_to_string(g.bodies[*g.atoms->find("p")]) == "#f");
}

TEST_CASE("quantifiers expand over the universe") {
  auto g = build_pstar(parse_program<FV>("r <- exists X: q(X). q(a). q(b)."));
  auto idx = g.atoms->find("r");
  REQUIRE(idx);
  CHECK(formula_to_string(g.bodies[*idx]) == "q(a) | q(b)");

  auto gf = build_pstar(parse_program<FV>("r <- forall X: q(X). q(a). q(b)."));
  CHECK(formula_to_string(gf.bodies[*gf.atoms->find("r")]) == "q(a) & q(b)");
}

TEST_CASE("quantifier over the empty universe collapses") {
  auto ge = build_pstar(parse_program<FV>("r <- exists X: q(X)."));
  CHECK(formula_to_string(ge.bodies[*ge.atoms->find("r")]) == "#f");
  auto ga = build_pstar(parse_program<FV>("r <- forall X: q(X)."));
  CHECK(formula_to_string(ga.bodies[*ga.atoms->find("r")]) == "#t");
}

TEST_CASE("head variables ground over the whole universe") {
  auto g = build_pstar(parse_program<FV>("p(X) <- q(X). q(a). p(b) <- #t."));
  // heads first: p(a), p(b) from rule 1, then q(a); p(b) merges with rule 3
  REQUIRE(g.atoms->find("p(a)"));
  REQUIRE(g.atoms->find("p(b)"));
  CHECK(formula_to_string(g.bodies[*g.atoms->find("p(a)")]) == "q(a)");
  CHECK(formula_to_string(g.bodies[*g.atoms->find("p(b)")]) == "q(b) | #t");
  // Herbrand base covers the full predicate x universe product
  REQUIRE(g.atoms->find("q(b)"));
  CHECK(formula_to_string(g.bodies[*g.atoms->find("q(b)")]) == "#f");
}

TEST_CASE("pstar invariants: one body per base atom, bodies closed over base") {
  Rng rng(99);
  for (int n = 0; n < 200; ++n) {
    Program<FV> prog = random_program<FV>(rng);
    auto g = build_pstar(prog);
    CHECK(g.bodies.size() == g.atoms->size());
    for (const auto& b : g.bodies) {
      bool closed = true;
      for_each_atom<FV>(b, [&](const Atom& a) {
        if (!g.atoms->find(a.key())) closed = false;
      });
      CHECK(closed);
    }
  }
}

TEST_CASE("build_pstar is deterministic") {
  const char* src = "p <- q | r. p <- ~q. s(a) <- p. q <- exists X: s(X).";
  auto once = pstar_to_string(build_pstar(parse_program<FV>(src)));
  auto twice = pstar_to_string(build_pstar(parse_program<FV>(src)));
  CHECK(once == twice);
  CHECK(program_hash(build_pstar(parse_program<FV>(src))) ==
        program_hash(build_pstar(parse_program<FV>(src))));
}

TEST_CASE("general reduct replaces bodies by their values") {
  // P* = {A <- ~A | #f} at I(A)=bot evaluates to bot
  auto g = build_pstar(parse_program<FV>("a <- ~a. a <- #f."));
  auto i = interp_of(g, {B});
  auto r = general_reduct(g, i);
  using Tag = FormulaNode<FV>::Tag;
  REQUIRE(r.bodies[0]->tag == Tag::constant);
  CHECK(r.bodies[0]->value == B);

  // idempotent on reduced programs
  auto r2 = general_reduct(r, i);
  CHECK(formula_equal(r.bodies[0], r2.bodies[0]));

  // running example at I3 = (f,bot,bot) reduces to constants f,bot,bot
  auto rg = running();
  auto i3 = interp_of(rg, {F, B, B});
  auto rr = general_reduct(rg, i3);
  CHECK(rr.bodies[0]->value == F);
  CHECK(rr.bodies[1]->value == B);
  CHECK(rr.bodies[2]->value == B);
}

TEST_CASE("gl reduct substitutes negative literals only") {
  auto g = running();
  // I5 = (f,t,f): q <- ~r becomes q <- #t; r <- ~q & ~p becomes #f & #t
  auto i5 = interp_of(g, {F, T, F});
  auto r = gl_reduct(g, i5);
  CHECK(formula_to_string(r.bodies[0]) == "p");
  CHECK(formula_to_string(r.bodies[1]) == "#t");
  CHECK(formula_to_string(r.bodies[2]) == "#f & #t");
  for (const auto& b : r.bodies) CHECK(literal_normal(b));

  // positive programs pass through unchanged
  auto pos = build_pstar(parse_program<FV>("a <- b. b."));
  auto rp = gl_reduct(pos, interp_of(pos, {B, B}));
  CHECK(formula_to_string(rp.bodies[0]) == "b");
  CHECK(formula_to_string(rp.bodies[1]) == "#t");
}

TEST_CASE("gl reduct output contains no negation nodes") {
  Rng rng(7);
  GenOptions opt;
  opt.classical = true;
  for (int n = 0; n < 100; ++n) {
    auto g = build_pstar(random_program<FV>(rng, opt));
    REQUIRE(g.classical);
    auto i = random_interp<FV>(rng, g.atoms);
    auto r = gl_reduct(g, i);
    for (const auto& b : r.bodies) {
      bool has_neg = false;
      std::function<void(const Formula<FV>&)> walk = [&](const Formula<FV>& f) {
        using Tag = FormulaNode<FV>::Tag;
        if (f->tag == Tag::negation) has_neg = true;
        if (f->tag == Tag::binary) {
          walk(f->lhs);
          walk(f->rhs);
        }
        if (f->tag == Tag::negation || f->tag == Tag::quantifier) walk(f->child);
      };
      walk(b);
      CHECK(!has_neg);
    }
  }
}

TEST_CASE("gl reduct rejects non-classical bodies") {
  auto g = build_pstar(parse_program<FV>("a <- b * c."));
  CHECK_THROWS_AS(gl_reduct(g, interp_of(g, {B, B, B})), invariant_error);
  auto g2 = build_pstar(parse_program<FV>("a <- ~(b & c)."));
  CHECK_THROWS_AS(gl_reduct(g2, interp_of(g2, {B, B, B})), invariant_error);
}

TEST_CASE("k-completion appends + I(A) to every body") {
  // P = {A <- A * ~A}, I = I_bott:  P + I = {A <- (A * ~A) + #f}
  auto g = build_pstar(parse_program<FV>("a <- a * ~a."));
  auto kc = k_complete(g, Interpretation<FV>::bottom_t(g.atoms));
  CHECK(formula_to_string(kc.bodies[0]) == "a * ~a + #f");

  // running example + Sp(I3): bodies gain +f, +bot, +bot
  auto rg = running();
  auto sp = interp_of(rg, {F, B, B});
  auto rkc = k_complete(rg, sp);
  CHECK(formula_to_string(rkc.bodies[0]) == "p + #f");
  CHECK(formula_to_string(rkc.bodies[1]) == "~r + #bot");
  CHECK(formula_to_string(rkc.bodies[2]) == "~q & ~p + #bot");  // & binds tighter than +
}

TEST_CASE("compiled bodies evaluate exactly like the reference tree walker") {
  Rng rng(211);
  GenOptions deep;
  deep.literal_negation = false;  // exercise general negation compilation
  int diverged = 0;
  for (int n = 0; n < 300; ++n) {
    auto g = build_pstar(random_program<FV>(rng, n % 2 ? deep : GenOptions{}));
    auto i = random_interp<FV>(rng, g.atoms);
    std::vector<FV> stack;
    for (size_t a = 0; a < g.size(); ++a)
      if (!(eval_compiled(g.code[a], i.values(), {}, stack) ==
            eval_formula(i, g.bodies[a], g.universe)))
        ++diverged;
    if (g.literal_normal) {
      auto negi = random_interp<FV>(rng, g.atoms);
      for (size_t a = 0; a < g.size(); ++a)
        if (!(eval_compiled(g.code[a], i.values(), negi.values(), stack) ==
              eval_pseudo(i, negi, g.bodies[a], g.universe)))
          ++diverged;
    }
  }
  GenOptions iopt;
  iopt.interval_constants = true;
  for (int n = 0; n < 100; ++n) {
    auto g = build_pstar(random_program<IV>(rng, iopt));
    auto i = random_interp<IV>(rng, g.atoms);
    std::vector<IV> stack;
    for (size_t a = 0; a < g.size(); ++a)
      if (!(eval_compiled(g.code[a], i.values(), {}, stack) ==
            eval_formula(i, g.bodies[a], g.universe)))
        ++diverged;
  }
  CHECK(diverged == 0);
}

TEST_CASE("compiled pseudo-evaluation rejects general negation") {
  auto g = build_pstar(parse_program<FV>("p <- ~(q & p). q."));
  REQUIRE(!g.literal_normal);
  auto i = Interpretation<FV>::bottom_k(g.atoms);
  std::vector<FV> stack;
  CHECK_THROWS_AS(eval_compiled(g.code[0], i.values(), i.values(), stack),
                  invariant_error);
  // plain evaluation of the same body is fine
  CHECK(eval_compiled(g.code[0], i.values(), {}, stack) == B);
}

TEST_CASE("k-completion with the all-bot interpretation changes no value") {
  Rng rng(11);
  for (int n = 0; n < 100; ++n) {
    auto g = build_pstar(random_program<FV>(rng));
    auto kc = k_complete(g, Interpretation<FV>::bottom_k(g.atoms));
    auto i = random_interp<FV>(rng, g.atoms);
    for (size_t a = 0; a < g.size(); ++a)
      CHECK(eval_formula(i, kc.bodies[a], kc.universe) ==
            eval_formula(i, g.bodies[a], g.universe));
  }
}

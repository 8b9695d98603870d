#include "doctest.h"
#include "helpers.hpp"

using namespace bt;

TEST_CASE("formula evaluation over intervals") {
  auto g = interval_wf_prog();
  Interpretation<IV> i(g.atoms, IV::bot());
  i.set("a", iv("0", "1"));
  i.set("c", iv("0.7", "1"));
  // ~c & a = <0,0.3> & <0,1> = <0,0.3>
  auto body = parse_program<IV>("x <- ~c & a.").rules[0].body;
  CHECK(eval_formula(i, body) == iv("0", "0.3"));

  // the K1 -> K2 step for b: (~c & a) | [0.3,0.5] at K1 gives [0.3,0.8]
  Interpretation<IV> k1(g.atoms, IV::bot());
  k1.set("a", iv("0", "1"));
  k1.set("b", iv("0.3", "1"));
  k1.set("c", iv("0.2", "1"));
  CHECK(eval_formula(k1, g.bodies[*g.atoms->find("b")], g.universe) == iv("0.3", "0.8"));
}

TEST_CASE("constants evaluate to themselves") {
  auto g = running();
  Rng rng(1);
  auto i = random_interp<FV>(rng, g.atoms);  // any interpretation
  for (FV c : FV::all())
    CHECK(eval_formula(i, make_const<FV>(c)) == c);
}

TEST_CASE("negation-free constant-free bodies stay bot at the all-bot point") {
  Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    size_t atoms = 1 + rng.below(4);
    std::vector<std::string> names;
    for (size_t k = 0; k < atoms; ++k) names.push_back("p" + std::to_string(k));
    // conjunction/disjunction tree over plain atoms
    std::function<Formula<FV>(size_t)> gen = [&](size_t depth) -> Formula<FV> {
      if (depth == 0 || rng.chance(40))
        return make_atom<FV>(Atom{names[rng.below(names.size())], {}});
      return make_binary<FV>(rng.chance(50) ? Conn::conj : Conn::disj, gen(depth - 1),
                             gen(depth - 1));
    };
    Program<FV> prog;
    prog.rules.push_back(Rule<FV>{Atom{"p0", {}}, gen(3)});
    auto g = build_pstar(prog);
    CHECK(eval_formula(Interpretation<FV>::bottom_k(g.atoms), g.bodies[0]) == B);
  }
}

TEST_CASE("unknown atoms are an evaluation error") {
  auto g = running();
  auto i = Interpretation<FV>::bottom_k(g.atoms);
  auto body = parse_program<FV>("x <- zz.").rules[0].body;
  CHECK_THROWS_AS(eval_formula(i, body), invariant_error);
}

TEST_CASE("pseudo-evaluation separates roles") {
  auto g = running();
  // body ~q & ~p with neg = I5 = (f,t,f): ~t & ~f = f regardless of pos
  auto i5 = interp_of(g, {F, T, F});
  for (FV fill : FV::all()) {
    Interpretation<FV> pos(g.atoms, fill);
    CHECK(eval_pseudo(pos, i5, g.bodies[*g.atoms->find("r")]) == F);
  }
  // positive literals read pos only
  auto top_t = Interpretation<FV>::top_t(g.atoms);
  for (FV fill : FV::all()) {
    Interpretation<FV> negi(g.atoms, fill);
    CHECK(eval_pseudo(top_t, negi, g.bodies[*g.atoms->find("p")]) == T);
  }
}

TEST_CASE("pseudo-evaluation with pos = neg collapses to plain evaluation") {
  Rng rng(17);
  for (int n = 0; n < 200; ++n) {
    auto g = build_pstar(random_program<FV>(rng));
    REQUIRE(g.literal_normal);
    auto i = random_interp<FV>(rng, g.atoms);
    for (size_t a = 0; a < g.size(); ++a)
      CHECK(eval_pseudo(i, i, g.bodies[a], g.universe) ==
            eval_formula(i, g.bodies[a], g.universe));
  }
}

TEST_CASE("pseudo-evaluation rejects negation over compounds") {
  auto body = parse_program<FV>("x <- ~(a & b).").rules[0].body;
  auto g = build_pstar(parse_program<FV>("a. b."));
  auto i = Interpretation<FV>::bottom_k(g.atoms);
  CHECK_THROWS_AS(eval_pseudo(i, i, body), invariant_error);
  // PseudoPair carries the same semantics
  PseudoPair<FV> pp{i, i};
  CHECK_THROWS_AS(eval_pseudo(pp, body), invariant_error);
}

TEST_CASE("pointwise operations and orders on interpretations") {
  auto g = interval_support_prog();
  auto i = interp_of(g, {iv("0", "1"), iv("0", "1"), iv("0.7", "1"), iv("0.7", "0.7")});
  auto jp = interp_of(g, {iv("0", "0"), iv("0", "0.3"), iv("0", "0.7"), iv("0", "0.7")});
  // completing the KK model with the greatest safe interpretation
  auto sum = join_k(i, jp);
  CHECK(sum == interp_of(g, {iv("0", "0"), iv("0", "0.3"), iv("0.7", "0.7"),
                             iv("0.7", "0.7")}));

  // + with the all-bot interpretation is the identity
  CHECK(join_k(i, Interpretation<IV>::bottom_k(g.atoms)) == i);

  // I_bott <=k i generally fails; I_botk <=k i always holds
  CHECK(!leq_k(Interpretation<IV>::bottom_t(g.atoms), i));
  CHECK(leq_k(Interpretation<IV>::bottom_k(g.atoms), i));
}

TEST_CASE("base mismatch is an error") {
  auto g1 = running();
  auto g2 = interval_support_prog();
  auto a = Interpretation<FV>::bottom_k(g1.atoms);
  auto g3 = build_pstar(parse_program<FV>("x <- y."));
  auto b = Interpretation<FV>::bottom_k(g3.atoms);
  CHECK_THROWS_AS((void)join_k(a, b), invariant_error);
  CHECK_THROWS_AS((void)leq_t(a, b), invariant_error);
  (void)g2;
}

TEST_CASE("interpretation space is itself interlaced and distributive: spot checks") {
  auto g = running();
  Rng rng(23);
  int violations = 0;
  for (int n = 0; n < 500; ++n) {
    auto x = random_interp<FV>(rng, g.atoms);
    auto y = join_k(x, random_interp<FV>(rng, g.atoms));
    auto x2 = random_interp<FV>(rng, g.atoms);
    auto y2 = join_k(x2, random_interp<FV>(rng, g.atoms));
    if (!leq_k(meet_t(x, x2), meet_t(y, y2))) ++violations;
    if (!leq_k(join_k(x, x2), join_k(y, y2))) ++violations;
    auto z = random_interp<FV>(rng, g.atoms);
    if (!(meet_t(x, join_k(x2, z)) == join_k(meet_t(x, x2), meet_t(x, z)))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("eval_formula is <=k-monotone in the interpretation") {
  Rng rng(29);
  int violations = 0;
  for (int n = 0; n < 500; ++n) {
    auto g = build_pstar(random_program<FV>(rng));
    auto i = random_interp<FV>(rng, g.atoms);
    auto j = join_k(i, random_interp<FV>(rng, g.atoms));  // i <=k j
    for (size_t a = 0; a < g.size(); ++a)
      if (!leq_k(eval_formula(i, g.bodies[a], g.universe),
                 eval_formula(j, g.bodies[a], g.universe)))
        ++violations;
  }
  CHECK(violations == 0);

  // and over intervals
  GenOptions iopt;
  iopt.interval_constants = true;
  for (int n = 0; n < 200; ++n) {
    auto g = build_pstar(random_program<IV>(rng, iopt));
    auto i = random_interp<IV>(rng, g.atoms);
    auto j = join_k(i, random_interp<IV>(rng, g.atoms));
    for (size_t a = 0; a < g.size(); ++a)
      if (!leq_k(eval_formula(i, g.bodies[a], g.universe),
                 eval_formula(j, g.bodies[a], g.universe)))
        ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("eval_pseudo monotonicity profile") {
  Rng rng(31);
  int violations = 0;
  for (int n = 0; n < 500; ++n) {
    auto g = build_pstar(random_program<FV>(rng));
    auto pos = random_interp<FV>(rng, g.atoms);
    auto pos_up_t = join_t(pos, random_interp<FV>(rng, g.atoms));
    auto pos_up_k = join_k(pos, random_interp<FV>(rng, g.atoms));
    auto negi = random_interp<FV>(rng, g.atoms);
    auto neg_up_t = join_t(negi, random_interp<FV>(rng, g.atoms));
    auto neg_up_k = join_k(negi, random_interp<FV>(rng, g.atoms));
    for (size_t a = 0; a < g.size(); ++a) {
      const auto& b = g.bodies[a];
      // monotone in pos under both orders
      if (!leq_t(eval_pseudo(pos, negi, b, g.universe),
                 eval_pseudo(pos_up_t, negi, b, g.universe)))
        ++violations;
      if (!leq_k(eval_pseudo(pos, negi, b, g.universe),
                 eval_pseudo(pos_up_k, negi, b, g.universe)))
        ++violations;
      // antitone in neg under <=t, monotone under <=k
      if (!leq_t(eval_pseudo(pos, neg_up_t, b, g.universe),
                 eval_pseudo(pos, negi, b, g.universe)))
        ++violations;
      if (!leq_k(eval_pseudo(pos, negi, b, g.universe),
                 eval_pseudo(pos, neg_up_k, b, g.universe)))
        ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("quantified formulas evaluate through the evaluator too") {
  auto g = build_pstar(parse_program<FV>("r <- exists X: q(X). q(a). q(b) <- #f."));
  auto i = Interpretation<FV>::bottom_k(g.atoms);
  auto quantified = parse_program<FV>("r <- exists X: q(X).").rules[0].body;
  Interpretation<FV> m(g.atoms, B);
  m.set("q(a)", T);
  m.set("q(b)", F);
  CHECK(eval_formula(m, quantified, g.universe) == T);
  auto all = parse_program<FV>("r <- forall X: q(X).").rules[0].body;
  CHECK(eval_formula(m, all, g.universe) == F);
  (void)i;
}

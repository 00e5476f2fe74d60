#include <doctest.h>

#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/finitary.hpp"
#include "faircheck/lasso.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace faircheck;
using namespace faircheck::testing;

namespace {
const Alphabet ab({"a", "b"});

BuchiAutomaton a_omega() {
  return buchi("alphabet: a b\nstates: s\ninitial: s\naccepting: s\ntrans: s a s\n");
}
}  // namespace

TEST_CASE("canonicalize merges redundant states of a*") {
  FinAutomaton n = fin("alphabet: a\nstates: p q r\ninitial: p\naccepting: p q r\ntrans: p a q\ntrans: q a r\ntrans: r a q\n");
  FinAutomaton c = canonicalize(n);
  CHECK(c.num_states() == 1);
  CHECK(c.accepting(0));
  CHECK(c.successors(0, 0) == std::vector<State>{0});
}

TEST_CASE("canonicalize keeps the three states of {eps, a, ab}") {
  FinAutomaton d = fin("alphabet: a b\nstates: p q r dead\ninitial: p\naccepting: p q r\ntrans: p a q\ntrans: q b r\ntrans: r a dead\n");
  FinAutomaton c = canonicalize(d);
  CHECK(c.num_states() == 3);
  CHECK(accepts(c, word(ab, "a b")));
  CHECK_FALSE(accepts(c, word(ab, "a b a")));
}

TEST_CASE("canonical DFA agrees with NFA simulation on all short words") {
  Gen g(101);
  for (int round = 0; round < 40; ++round) {
    Alphabet sigma = g.alphabet(2);
    FinAutomaton n = g.nfa(sigma, 6);
    FinAutomaton c = canonicalize(n);
    CHECK(c.deterministic());
    for (const Word& w : all_words(sigma, 8)) REQUIRE(accepts(c, w) == nfa_accepts(n, w));
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("language inclusion and equality with shortest counterexample") {
  FinAutomaton astar = fin("alphabet: a b\nstates: s\ninitial: s\ntrans: s a s\n");
  FinAutomaton e_a_ab = fin("alphabet: a b\nstates: p q r\ninitial: p\ntrans: p a q\ntrans: q b r\n");
  FinAutomaton e_a = fin("alphabet: a b\nstates: p q\ninitial: p\ntrans: p a q\n");
  CHECK(language_equal(astar, astar));
  SubsetResult r = language_subset(e_a_ab, e_a);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == word(ab, "a b"));
  CHECK(language_subset(e_a, e_a_ab).holds);
  CHECK(distinguishing_word(e_a, e_a_ab) == word(ab, "a b"));
}

TEST_CASE("left quotients") {
  FinAutomaton astar_b = fin("alphabet: a b\nstates: p q\ninitial: p\naccepting: q\ntrans: p a p\ntrans: p b q\n");
  CHECK(language_equal(left_quotient(astar_b, word(ab, "a")), astar_b));
  FinAutomaton e_a_ab = fin("alphabet: a b\nstates: p q r\ninitial: p\ntrans: p a q\ntrans: q b r\n");
  FinAutomaton rest = left_quotient(e_a_ab, word(ab, "a b"));
  CHECK(rest.num_states() == 1);
  CHECK(accepts(rest, Word{}));
  CHECK(rest.num_transitions() == 0);

  FinAutomaton fig2 = fixture_lts("fig2.aut");
  const Alphabet& s = fig2.alphabet();
  FinAutomaton q = left_quotient(fig2, word(s, "lock request"));
  CHECK(accepts(q, word(s, "no reject")));
  CHECK(accepts(q, word(s, "no reject request no")));
  CHECK_FALSE(accepts(q, word(s, "result")));
}

TEST_CASE("prefix automaton") {
  CHECK(language_equal(prefix_automaton(a_omega()), fin("alphabet: a b\nstates: s\ninitial: s\ntrans: s a s\n")));
  BuchiAutomaton astar_bomega =
      buchi("alphabet: a b\nstates: p q\ninitial: p\naccepting: q\ntrans: p a p\ntrans: p b q\ntrans: q b q\n");
  CHECK(language_equal(prefix_automaton(astar_bomega),
                       fin("alphabet: a b\nstates: p q\ninitial: p\ntrans: p a p\ntrans: p b q\ntrans: q b q\n")));
  CHECK(prefix_automaton(empty_buchi(ab)).num_states() == 0);
}

TEST_CASE("reduce removes dead states and keeps lasso membership") {
  BuchiAutomaton trap =
      buchi("alphabet: a b\nstates: s t\ninitial: s\naccepting: s\ntrans: s a s\ntrans: s b t\ntrans: t b t\n");
  BuchiAutomaton r = reduce_buchi(trap);
  CHECK(r.num_states() == 1);
  CHECK(reduce_buchi(r) == r);

  Gen g(102);
  for (int round = 0; round < 30; ++round) {
    BuchiAutomaton b = g.buchi(ab, 8);
    BuchiAutomaton red = reduce_buchi(b);
    for (int i = 0; i < 50; ++i) {
      LassoWord x = g.lasso(ab, 4, 4);
      REQUIRE(lasso_membership(x, red) == lasso_accepts(b, x));
    }
  }
}

TEST_CASE("limit") {
  FinAutomaton all = fin("alphabet: a b\nstates: s\ninitial: s\ntrans: s a s\ntrans: s b s\n");
  BuchiAutomaton u = limit(all);
  CHECK(lasso_membership(LassoWord{{0, 1}, {1}}, u));
  CHECK(lasso_membership(LassoWord{{}, {0, 1}}, u));

  FinAutomaton fig2 = fixture_lts("fig2.aut");
  const Alphabet& s = fig2.alphabet();
  CHECK(lasso_membership(LassoWord{word(s, "lock"), word(s, "request no reject")}, limit(fig2)));

  CHECK_THROWS_AS(limit(fin("alphabet: a b\nstates: p q\ninitial: p\naccepting: q\ntrans: p a q\n")), Error);
}

TEST_CASE("products") {
  BuchiAutomaton inf_a =
      buchi("alphabet: a b\nstates: p q\ninitial: p\naccepting: q\ntrans: p a q\ntrans: p b p\ntrans: q a q\ntrans: q b p\n");
  BuchiAutomaton p = product(universal_buchi(ab), inf_a);
  CHECK(lasso_membership(LassoWord{{}, {0, 1}}, p));
  CHECK_FALSE(lasso_membership(LassoWord{{0}, {1}}, p));
  BuchiAutomaton b_omega = buchi("alphabet: a b\nstates: s\ninitial: s\naccepting: s\ntrans: s b s\n");
  CHECK(is_empty(product(a_omega(), b_omega)));

  Gen g(103);
  for (int round = 0; round < 30; ++round) {
    BuchiAutomaton x = g.buchi(ab, 4), y = g.buchi(ab, 4);
    BuchiAutomaton xy = product(x, y);
    for (int i = 0; i < 40; ++i) {
      LassoWord w = g.lasso(ab, 3, 4);
      REQUIRE(lasso_membership(w, xy) == (lasso_accepts(x, w) && lasso_accepts(y, w)));
    }
    FinAutomaton fx = g.nfa(ab, 3), fy = g.nfa(ab, 3);
    FinAutomaton fxy = product_fin(fx, fy);
    for (const Word& w : all_words(ab, 6)) REQUIRE(accepts(fxy, w) == (nfa_accepts(fx, w) && nfa_accepts(fy, w)));
  }
}

TEST_CASE("emptiness with minimal witness") {
  CHECK(is_empty(empty_buchi(ab)));
  EmptinessResult r = check_emptiness(a_omega());
  REQUIRE_FALSE(r.empty);
  CHECK(*r.witness == LassoWord{{}, {0}});

  Gen g(104);
  for (int round = 0; round < 60; ++round) {
    BuchiAutomaton b = g.buchi(ab, 5);
    EmptinessResult e = check_emptiness(b);
    if (e.empty) {
      for (int i = 0; i < 30; ++i) REQUIRE_FALSE(lasso_accepts(b, g.lasso(ab, 3, 3)));
    } else {
      CHECK(lasso_accepts(b, *e.witness));
    }
  }
}

TEST_CASE("lasso normal form and Cantor distance") {
  LassoWord x{{0, 0, 1}, {0, 1, 0, 1}};  // a.(ab)^omega
  CHECK(x.normalized() == LassoWord{{0}, {0, 1}});
  CHECK_FALSE(x.same_word(LassoWord{{}, {0, 1}}));
  CHECK(x.same_word(LassoWord{{0, 0}, {1, 0}}));

  const LassoWord a{{}, {0}}, ab_{{0}, {1}}, b{{}, {1}};
  CHECK(cantor_distance(a, a) == Rational(0));
  CHECK(cantor_distance(a, ab_) == Rational(1, 2));
  CHECK(cantor_distance(a, b) == Rational(1));

  Gen g(105);
  for (int i = 0; i < 200; ++i) {
    LassoWord p = g.lasso(ab, 3, 3), q = g.lasso(ab, 3, 3), r = g.lasso(ab, 3, 3);
    CHECK(cantor_distance(p, q) == cantor_distance(q, p));
    CHECK((cantor_distance(p, q) == Rational(0)) == p.same_word(q));
    // Ultrametric.
    CHECK(cantor_distance(p, r) <= std::max(cantor_distance(p, q), cantor_distance(q, r)));
  }
}

TEST_CASE("lasso text form") {
  const Alphabet s({"lock", "request", "no", "reject"});
  LassoWord x = parse_lasso("lock;request no reject", s);
  CHECK(x == LassoWord{{0}, {1, 2, 3}});
  CHECK(format_lasso(x, s) == "lock;request no reject");
  CHECK_THROWS_AS(parse_lasso("lock;", s), Error);
}

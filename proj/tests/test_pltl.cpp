#include <doctest.h>

#include "faircheck/abstraction.hpp"
#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/pltl.hpp"
#include "support/generators.hpp"

using namespace faircheck;
using namespace faircheck::testing;

namespace {
const Alphabet ab({"a", "b"});
Formula p(const char* text) { return parse_formula(text); }
}  // namespace

TEST_CASE("parsing builds the expected trees") {
  CHECK(p("G F result") == Formula::always(Formula::eventually(Formula::atom("result"))));
  CHECK(p("a U (b & !c)") ==
        Formula::until(Formula::atom("a"),
                       Formula::conjunction(Formula::atom("b"), Formula::negation(Formula::atom("c")))));
  CHECK(p("(a) B (b)") == Formula::before(Formula::atom("a"), Formula::atom("b")));
  // U is right associative and binds tighter than &.
  CHECK(p("a U b U c") == p("a U (b U c)"));
  CHECK(p("a & b U c") == p("a & (b U c)"));
  CHECK(p("a | b & c -> d <-> e") == p("((a | (b & c)) -> d) <-> e"));
}

TEST_CASE("syntax errors carry a column") {
  try {
    (void)p("a & & b");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(p("(a"), Error);
  CHECK_THROWS_AS(p("a b"), Error);
}

TEST_CASE("printing round trips") {
  Gen g(201);
  for (int i = 0; i < 500; ++i) {
    Formula f = g.formula({"a", "b", "eps"}, 4);
    REQUIRE(p(to_string(f).c_str()) == f);
  }
}

TEST_CASE("positive normal form") {
  CHECK(to_positive_normal_form(p("!G F a")) == p("F G !a"));
  CHECK(to_positive_normal_form(p("!(a U b)")) == p("(!a) B b"));
  const Formula positive = p("G (a | F !b) & (a U b)");
  CHECK(is_positive(positive));
  CHECK(to_positive_normal_form(positive) == positive);
  CHECK_FALSE(is_positive(p("a -> b")));

  Gen g(202);
  for (int i = 0; i < 400; ++i) {
    Formula f = g.formula({"a", "b"}, 4);
    Formula n = to_positive_normal_form(f);
    REQUIRE(is_positive(n));
    LassoWord x = g.lasso(ab, 3, 4);
    REQUIRE(evaluate_lasso(x, canonical_labeling(ab), f) == evaluate_lasso(x, canonical_labeling(ab), n));
  }
}

TEST_CASE("normal form checks") {
  const Alphabet server({"request", "result", "reject"});
  CHECK(check_normal_form(p("G F result"), server, NormalFormMode::Sigma));
  CHECK_FALSE(check_normal_form(p("G F lock"), server, NormalFormMode::Sigma));
  CHECK_FALSE(check_normal_form(p("eps | result"), server, NormalFormMode::ExtendedSigma));
  CHECK(check_normal_form(p("F G eps | G F result"), server, NormalFormMode::ExtendedSigma));
  CHECK_FALSE(check_normal_form(p("G eps"), server, NormalFormMode::Sigma));
}

TEST_CASE("transformation table rows") {
  CHECK(transform(p("G a"), TransformMode::T) == p("G (eps | a)"));
  CHECK(transform(p("X a"), TransformMode::T) == p("eps U (!eps & X (eps U a))"));
  CHECK(to_string(transform(p("X a"), TransformMode::T)) == "eps U (!eps & X (eps U a))");
  CHECK(transform(p("a & b"), TransformMode::R) == p("eps U (a & b)"));
  CHECK(transform(p("!a"), TransformMode::N) == p("!a & !eps"));
  CHECK(transform(p("a U b"), TransformMode::T) == p("(eps | a) U b"));
  CHECK(transform(p("a B b"), TransformMode::T) == p("a B b"));
  CHECK(transform(p("F a"), TransformMode::T) == p("F a"));
  CHECK(transform(p("!a"), TransformMode::T) == p("!a & !eps"));
  CHECK(transform(p("true"), TransformMode::T) == p("true"));
  CHECK(transform(p("G eps"), TransformMode::T) == p("G (eps | eps)"));
  CHECK_THROWS_AS(transform(p("!(a U b)"), TransformMode::T), Error);
}

TEST_CASE("lasso evaluation") {
  const Labeling lambda = canonical_labeling(ab);
  CHECK(evaluate_lasso(LassoWord{{}, {0, 1}}, lambda, p("G F a")));
  CHECK(evaluate_lasso(LassoWord{{}, {1}}, lambda, p("a U b")));
  CHECK_FALSE(evaluate_lasso(LassoWord{{}, {1}}, lambda, p("X a")));
  CHECK(evaluate_lasso(LassoWord{{1}, {0}}, lambda, p("X G a")));
  CHECK(evaluate_lasso(LassoWord{{1}, {0}}, lambda, p("a B b")) == false);
  CHECK(evaluate_lasso(LassoWord{{}, {1}}, lambda, p("b B a")));

  const Alphabet server({"request", "result", "reject", "lock", "free", "no"});
  CHECK_FALSE(evaluate_lasso(parse_lasso("lock;request no reject", server), canonical_labeling(server), p("G F result")));
}

TEST_CASE("formula automata agree with evaluation") {
  {
    FormulaAutomata t = to_buchi(p("true"), canonical_labeling(ab));
    CHECK(is_empty(t.negative));
    CHECK(lasso_membership(LassoWord{{}, {0, 1}}, t.positive));
  }
  {
    FormulaAutomata t = to_buchi(p("F (a & X a)"), canonical_labeling(ab));
    CHECK(lasso_membership(LassoWord{{0, 0}, {1}}, t.positive));
    CHECK(lasso_membership(LassoWord{{}, {0, 1}}, t.negative));
  }
  Gen g(203);
  for (int i = 0; i < 150; ++i) {
    Formula f = g.formula({"a", "b"}, 3);
    FormulaAutomata t = to_buchi(f, canonical_labeling(ab));
    for (int j = 0; j < 10; ++j) {
      LassoWord x = g.lasso(ab, 3, 4);
      const bool truth = evaluate_lasso(x, canonical_labeling(ab), f);
      REQUIRE(lasso_membership(x, t.positive) == truth);
      REQUIRE(lasso_membership(x, t.negative) == !truth);
    }
  }
}

TEST_CASE("transformed formulas evaluate the same on concrete words") {
  Gen g(204);
  const Alphabet sigma({"a", "b", "c"});
  std::size_t checked = 0;
  for (int i = 0; i < 400; ++i) {
    Homomorphism h = g.homomorphism(sigma, 2, 0.4);
    Formula eta = to_positive_normal_form(g.formula({"x", "y"}, 3, false));
    LassoWord x = g.lasso(sigma, 4, 4);
    auto image = apply_hom_lasso(h, x);
    if (!image) continue;
    ++checked;
    REQUIRE(evaluate_lasso(*image, canonical_labeling(h.target()), eta) ==
            evaluate_lasso(x, hom_labeling(h), transform(eta, TransformMode::R)));
    if (eta.is_pure_boolean())
      REQUIRE(evaluate_lasso(*image, canonical_labeling(h.target()), eta) ==
              evaluate_lasso(x, hom_labeling(h), Formula::until(Formula::epsilon(), transform(eta, TransformMode::N))));
  }
  CHECK(checked > 200);
}

TEST_CASE("labelings") {
  const Labeling plain = canonical_labeling(ab);
  CHECK(plain.propositions(0) == std::set<std::string>{"a"});
  const Labeling ext = plain.extended("eps");
  CHECK(ext.alphabet().has_marker());
  CHECK(ext.propositions(*ext.alphabet().marker()) == std::set<std::string>{"eps"});
  CHECK(plain.extended("#").propositions(2) == std::set<std::string>{"#"});
  CHECK(canonical_labeling(ab.with_marker()).propositions(2) == std::set<std::string>{"#"});
}

// End-to-end acceptance run: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "faircheck/abstraction.hpp"
#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/finitary.hpp"
#include "faircheck/pltl.hpp"
#include "faircheck/relprops.hpp"
#include "faircheck/synthesis.hpp"
#include "support/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace faircheck;
using namespace faircheck::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Suite-2 instances are shared by criteria 2, 4 and 8.
constexpr std::size_t kTheoremInstances = 400;
std::vector<Instance>& theorem_instances() {
  static std::vector<Instance> all = [] {
    Gen g(2);
    std::vector<Instance> v;
    for (std::size_t i = 0; i < kTheoremInstances; ++i) v.push_back(make_instance(g, i));
    return v;
  }();
  return all;
}

std::string fixture(const std::string& name) { return std::string(FAIRCHECK_FIXTURES) + "/" + name; }

Outcome server_example() {
  struct Case {
    std::vector<std::string> args;
    int exit;
    std::string must_print;
  };
  const std::string fig2 = fixture("fig2.aut"), fig3 = fixture("fig3.aut"), hide = fixture("hide.hom");
  const std::vector<Case> cases = {
      {{"check", "sat", "--system", fig2, "--formula", "G F result"}, 1, "witness: lasso lock;request no reject\n"},
      {{"check", "rl", "--system", fig2, "--formula", "G F result"}, 0, "relative liveness: holds"},
      {{"check", "rl", "--system", fig3, "--formula", "G F result"}, 1, "relative liveness: fails"},
      {{"wcc", "--system", fig2, "--hom", hide}, 0, "weak continuation-closure: holds"},
      {{"wcc", "--system", fig3, "--hom", hide}, 1, "violation:"},
      {{"preserve", "--system", fig2, "--hom", hide, "--formula", "G F result"}, 0, "equivalence: certified"},
  };
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : cases) {
    std::ostringstream out, err;
    int code = cli::run(c.args, out, err);
    if (code != c.exit || out.str().find(c.must_print) == std::string::npos) {
      o.pass = false;
      o.detail += " [" + c.args[0] + " " + c.args[1] + " exit " + std::to_string(code) + "]";
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s >= 1.0) o.pass = false;
  o.detail = "6 commands in " + std::to_string(s) + " s" + o.detail;
  return o;
}

Outcome theorem_suite() {
  Outcome o;
  std::size_t sat = 0, rl = 0, rs = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& inst : theorem_instances()) {
    bool s = satisfies(inst.system, inst.property).holds;
    bool l = is_relative_liveness(inst.system, inst.property).holds;
    bool r = is_relative_safety(inst.system, inst.property).holds;
    sat += s;
    rl += l;
    rs += r;
    if (s != (l && r)) o.pass = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) o.pass = false;
  o.detail = std::to_string(kTheoremInstances) + " instances (sat " + std::to_string(sat) + ", rl " + std::to_string(rl) +
             ", rs " + std::to_string(rs) + ") in " + std::to_string(secs) + " s";
  return o;
}

Outcome safety_lemma() {
  Outcome o;
  Gen g(3);
  std::size_t safety = 0, tried = 0, live = 0;
  while (safety < 150 && tried < 5000) {
    Instance inst = make_instance(g, tried++);
    if (!is_safety_property(inst.property)) continue;
    ++safety;
    bool l = is_relative_liveness(inst.system, inst.property).holds;
    live += l;
    if (l != satisfies(inst.system, inst.property).holds) o.pass = false;
  }
  if (safety < 100) o.pass = false;
  o.detail = std::to_string(safety) + " safety instances of " + std::to_string(tried) + " generated, " +
             std::to_string(live) + " satisfied";
  return o;
}

Outcome oracle_suite() {
  Outcome o;
  std::size_t liveness_mismatch = 0;
  for (const auto& inst : theorem_instances()) {
    Verdict v = is_relative_liveness(inst.system, inst.property);
    auto brute = brute_relative_liveness(inst.system, inst.property.positive);
    bool agree = v.holds == !brute.has_value();
    if (agree && brute) agree = std::get<Word>(*v.witness) == *brute;
    liveness_mismatch += !agree;
  }
  Gen g(4);
  // Sparse systems with heavy hiding, sampled until both outcomes are well
  // represented.
  std::size_t wcc_mismatch = 0, closed = 0, open = 0, wcc_instances = 0;
  while ((closed < 100 || open < 50) && wcc_instances < 2000) {
    ++wcc_instances;
    Alphabet sigma = g.alphabet(g.uniform(2, 3));
    FinAutomaton l = g.prefix_closed_dfa(sigma, g.uniform(1, 4), g.chance(0.5) ? 0.4 : 0.6);
    Homomorphism h = g.homomorphism(sigma, g.uniform(1, 2), 0.5);
    WccReport r = is_weakly_continuation_closed(l, h);
    closed += r.closed;
    open += !r.closed;
    wcc_mismatch += r.closed != !brute_wcc(l, h).has_value();
  }
  o.pass = liveness_mismatch == 0 && wcc_mismatch == 0 && closed >= 100 && open >= 50;
  o.detail = "liveness: " + std::to_string(kTheoremInstances - liveness_mismatch) + "/" +
             std::to_string(kTheoremInstances) + " agree (with equal witnesses); wcc: " +
             std::to_string(wcc_instances - wcc_mismatch) + "/" + std::to_string(wcc_instances) + " agree (" +
             std::to_string(closed) + " closed, " + std::to_string(open) + " not closed)";
  return o;
}

Outcome transformation_suite() {
  Outcome o;
  // Fixed rows of the rewrite table.
  const bool rows = to_string(transform(parse_formula("G a"), TransformMode::T)) == "G (eps | a)" &&
                    to_string(transform(parse_formula("X a"), TransformMode::T)) == "eps U (!eps & X (eps U a))" &&
                    to_string(transform(parse_formula("a & b"), TransformMode::R)) == "eps U (a & b)";
  Gen g(5);
  const Alphabet sigma = g.alphabet(3);
  std::size_t pairs = 0, mismatches = 0;
  const auto start = std::chrono::steady_clock::now();
  while (pairs < 1000) {
    Homomorphism h = g.homomorphism(sigma, 2, 0.35);
    Formula eta = to_positive_normal_form(g.formula(h.target().tokens(), g.uniform(1, 4)));
    Formula r = transform(eta, TransformMode::R);
    const Labeling abstract = canonical_labeling(h.target());
    const Labeling concrete = hom_labeling(h);
    for (int k = 0; k < 5; ++k) {
      LassoWord x = g.lasso_of_size(sigma, 8);
      auto y = apply_hom_lasso(h, x);
      if (!y) continue;
      ++pairs;
      if (evaluate_lasso(*y, abstract, eta) != evaluate_lasso(x, concrete, r)) ++mismatches;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = rows && mismatches == 0 && secs < 60;
  o.detail = std::to_string(pairs - mismatches) + "/" + std::to_string(pairs) + " pairs agree in " +
             std::to_string(secs) + " s; table rows " + (rows ? "match" : "differ");
  return o;
}

Outcome limit_exchange() {
  Outcome o;
  Gen g(6);
  std::size_t instances = 0, forward = 0, backward = 0, failures = 0;
  while (instances < 150) {
    Alphabet sigma = g.alphabet(g.uniform(2, 3));
    FinAutomaton l = g.prefix_closed_dfa(sigma, g.uniform(1, 5));
    Homomorphism h = g.homomorphism(sigma, g.uniform(1, 2), 0.4);
    const BuchiAutomaton concrete = limit(l);
    const BuchiAutomaton abstract = abstract_behavior(l, h);
    ++instances;
    for (int k = 0; k < 4; ++k) {
      // Abstract lasso: some concrete preimage in lim(L).
      if (auto y = sample_lasso(g, abstract)) {
        ++forward;
        auto pre = product(concrete, inverse_image_automaton(h, lasso_automaton(*y, h.target())));
        if (is_empty(pre)) ++failures;
      }
      // Concrete lasso: its image, when defined, lies in lim(h(L)).
      if (auto x = sample_lasso(g, concrete)) {
        if (auto y = apply_hom_lasso(h, *x)) {
          ++backward;
          if (!lasso_membership(*y, abstract)) ++failures;
        }
      }
    }
  }
  // a*.b with b erased: lim(h(L)) = a^omega but h(lim(L)) is empty.
  Alphabet ab({"a", "b"});
  FinAutomaton astar_b(ab, 2);
  astar_b.add_initial(0);
  astar_b.set_accepting(1);
  astar_b.add_transition(0, 0, 0);
  astar_b.add_transition(0, 1, 1);
  Homomorphism erase_b(ab, Alphabet({"a"}), {Symbol{0}, std::nullopt});
  bool rejected = false;
  try {
    abstract_behavior(astar_b, erase_b);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotPrefixClosed;
  }
  const bool image_limit = lasso_membership(LassoWord{{}, {0}}, deterministic_limit(image_automaton(erase_b, astar_b)));
  const bool limit_empty = is_empty(deterministic_limit(astar_b));
  const bool counterexample = rejected && image_limit && limit_empty;
  o.pass = failures == 0 && counterexample;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(forward) + " abstract and " +
             std::to_string(backward) + " concrete lassos, " + std::to_string(failures) +
             " failures; a*b counterexample " + (counterexample ? "exhibited" : "missing");
  return o;
}

Outcome preservation() {
  Outcome o;
  Gen g(7);
  std::size_t closed = 0, tried = 0, maximal = 0, padded = 0, holds = 0, mismatches = 0, explained = 0;
  while (closed < 150 && tried < 3000) {
    ++tried;
    Alphabet sigma = g.alphabet(g.uniform(2, 3));
    FinAutomaton l = g.prefix_closed_dfa(sigma, g.uniform(1, 4), 0.5);
    Homomorphism h = g.homomorphism(sigma, g.uniform(1, 2), 0.4);
    Formula eta = extended_formula(g, h.target(), 3);
    PreserveReport r = preserve_check(l, h, eta);
    if (!r.wcc.closed) continue;
    ++closed;
    maximal += has_maximal_words(l);
    padded += !language_equal(compute_xtd(l, h), compute_xtd(l));
    holds += r.abstract_holds;
    if (r.abstract_holds != r.concrete_holds) {
      ++mismatches;
      explained += has_erased_cycle(l, h);
    }
  }
  o.pass = closed >= 100 && mismatches == 0;
  o.detail = std::to_string(closed - mismatches) + "/" + std::to_string(closed) + " closed instances agree, " + std::to_string(tried) + " generated (" + std::to_string(maximal) +
             " with maximal words, " + std::to_string(padded) + " where hiding pads extra words, " +
             std::to_string(holds) + " holding)" +
             (mismatches ? "; " + std::to_string(explained) + " of the " + std::to_string(mismatches) +
                               " disagreements have a cycle of erased letters"
                         : "");
  return o;
}

Outcome synthesis_suite() {
  Outcome o;
  std::size_t synthesized = 0, lassos = 0, bad = 0;
  for (const auto& inst : theorem_instances()) {
    if (!inst.lts || !is_relative_liveness(inst.system, inst.property).holds) continue;
    ++synthesized;
    FairLts impl = synthesize_fair_impl(*inst.lts, inst.property);
    if (!verify_fair_impl(impl, *inst.lts, inst.property).holds) ++bad;
    const Labeling lambda = canonical_labeling(inst.alphabet);
    for (const LassoWord& x : enumerate_fair_lassos(impl, 5)) {
      ++lassos;
      if (!evaluate_lasso(x, lambda, inst.formula)) ++bad;
    }
  }
  // {a,b}* with F(a & X a).
  Alphabet ab({"a", "b"});
  FinAutomaton loop(ab, 1);
  loop.add_initial(0);
  loop.set_all_accepting();
  loop.add_transition(0, 0, 0);
  loop.add_transition(0, 1, 0);
  const Formula f = parse_formula("F (a & X a)");
  const PropertySpec p = PropertySpec::from_formula(f, canonical_labeling(ab));
  FairLts minimal{loop, {true}};
  Verdict v = verify_fair_impl(minimal, loop, p);
  const bool minimal_fails = !v.holds && v.witness && std::holds_alternative<LassoWord>(*v.witness) &&
                             !evaluate_lasso(std::get<LassoWord>(*v.witness), canonical_labeling(ab), f) &&
                             lasso_membership(LassoWord{{}, {0, 1}}, minimal.fair_automaton()) &&
                             !evaluate_lasso(LassoWord{{}, {0, 1}}, canonical_labeling(ab), f);
  FairLts impl = synthesize_fair_impl(loop, p);
  const bool synthesized_passes = verify_fair_impl(impl, loop, p).holds && impl.underlying.num_states() > 1 &&
                                  !lasso_membership(LassoWord{{}, {0, 1}}, impl.fair_automaton());
  o.pass = bad == 0 && minimal_fails && synthesized_passes;
  o.detail = std::to_string(synthesized) + " implementations verified, " + std::to_string(lassos) +
             " fair lassos checked; one-state loop " + (minimal_fails ? "fails" : "passes") + " check (ii)" +
             (v.witness ? " with witness " + format_lasso(std::get<LassoWord>(*v.witness), ab) : "") +
             " and admits the fair run (ab)^omega" +
             ", synthesized " + std::to_string(impl.underlying.num_states()) + "-state implementation " +
             (synthesized_passes ? "passes and has no fair run on (ab)^omega" : "fails");
  return o;
}

Outcome formula_automata() {
  Outcome o;
  Gen g(9);
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t i = 0; i < 250; ++i) {
    Alphabet sigma = g.alphabet(g.uniform(2, 3));
    // Half canonical labelings, half random sets over {p, q}.
    Labeling lambda = canonical_labeling(sigma);
    std::vector<std::string> atoms = sigma.tokens();
    if (i % 2) {
      std::vector<std::set<std::string>> props(sigma.size());
      for (auto& s : props) {
        if (g.chance(0.5)) s.insert("p");
        if (g.chance(0.5)) s.insert("q");
      }
      lambda = Labeling(sigma, props);
      atoms = {"p", "q"};
    }
    Formula f = g.formula(atoms, g.uniform(1, 4));
    FormulaAutomata fa = to_buchi(f, lambda);
    for (int k = 0; k < 6; ++k) {
      LassoWord x = g.lasso_of_size(sigma, 8);
      ++pairs;
      bool truth = evaluate_lasso(x, lambda, f);
      bool pos = lasso_membership(x, fa.positive);
      bool neg = lasso_membership(x, fa.negative);
      if (pos != truth || neg == truth || lasso_accepts(fa.positive, x) != pos) ++mismatches;
    }
  }
  o.pass = mismatches == 0 && pairs >= 1000;
  o.detail = std::to_string(pairs - mismatches) + "/" + std::to_string(pairs) + " pairs agree and partition";
  return o;
}

}  // namespace

int main() {
  std::cout << "FAIRCHECK_SEED=" << suite_seed() << '\n';
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 server example", server_example},
      {"2 satisfaction = relative liveness + relative safety", theorem_suite},
      {"3 safety properties: within fairness = satisfaction", safety_lemma},
      {"4 brute-force oracles", oracle_suite},
      {"5 transformation R on hidden letters", transformation_suite},
      {"6 limit and homomorphism exchange", limit_exchange},
      {"7 preservation under closed abstraction", preservation},
      {"8 fair implementation synthesis", synthesis_suite},
      {"9 formula automata vs lasso evaluation", formula_automata},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}

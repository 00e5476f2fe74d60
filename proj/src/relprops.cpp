#include "faircheck/relprops.hpp"

#include "faircheck/buchi.hpp"
#include "faircheck/finitary.hpp"

namespace faircheck {

namespace {

Verdict from_emptiness(const BuchiAutomaton& b) {
  auto r = check_emptiness(b);
  if (r.empty) return {};
  return {false, Witness{*r.witness}};
}

Verdict from_subset(const FinAutomaton& a, const FinAutomaton& b) {
  auto w = subset_counterexample(a, b);
  if (!w) return {};
  return {false, Witness{*w}};
}

}  // namespace

PropertySpec PropertySpec::from_formula(const Formula& f, const Labeling& labeling) {
  auto automata = to_buchi(f, labeling);
  return {std::move(automata.positive), std::move(automata.negative)};
}

PropertySpec PropertySpec::universal(const Alphabet& alphabet) {
  return {universal_buchi(alphabet), empty_buchi(alphabet)};
}

Verdict is_relative_liveness(const BuchiAutomaton& system, const PropertySpec& p) {
  require_same_alphabet(system.alphabet(), p.alphabet(), "relative liveness");
  // pre(L & P) is always inside pre(L); only one inclusion needs checking.
  return from_subset(prefix_automaton(system), prefix_automaton(product(system, p.positive)));
}

Verdict is_relative_safety(const BuchiAutomaton& system, const PropertySpec& p) {
  require_same_alphabet(system.alphabet(), p.alphabet(), "relative safety");
  BuchiAutomaton closure = limit(prefix_automaton(product(system, p.positive)));
  return from_emptiness(product(product(system, closure), p.negative));
}

Verdict satisfies(const BuchiAutomaton& system, const PropertySpec& p) {
  require_same_alphabet(system.alphabet(), p.alphabet(), "satisfaction");
  return from_emptiness(product(system, p.negative));
}

Verdict is_machine_closed(const BuchiAutomaton& system, const BuchiAutomaton& sub) {
  require_same_alphabet(system.alphabet(), sub.alphabet(), "machine closure");
  return from_subset(prefix_automaton(system), prefix_automaton(sub));
}

bool is_safety_property(const PropertySpec& p) {
  return is_empty(product(limit(prefix_automaton(p.positive)), p.negative));
}

}  // namespace faircheck

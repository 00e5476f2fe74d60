#include "faircheck/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "faircheck/alphabet.hpp"
#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/finitary.hpp"

namespace faircheck {

BuchiAutomaton FairLts::fair_automaton() const {
  BuchiAutomaton b = underlying.reinterpret<BuchiAcceptance>();
  for (State q = 0; q < b.num_states(); ++q) b.set_accepting(q, marks.at(q));
  return b;
}

FairLts synthesize_fair_impl(const FinAutomaton& l, const PropertySpec& p) {
  const BuchiAutomaton system = limit(l);
  Verdict v = is_relative_liveness(system, p);
  if (!v.holds) {
    const Word& w = std::get<Word>(*v.witness);
    throw Error(ErrorKind::PreconditionFailed, "property is not satisfied within fairness; prefix '" +
                                                   system.alphabet().decode(w) + "' has no continuation in it");
  }
  const BuchiAutomaton a = reduce_buchi(product(system, p.positive));
  FairLts impl{a.reinterpret<FiniteAcceptance>(), std::vector<bool>(a.num_states())};
  impl.underlying.set_all_accepting();
  for (State q = 0; q < a.num_states(); ++q) impl.marks[q] = a.accepting(q);
  return impl;
}

Verdict verify_fair_impl(const FairLts& impl, const FinAutomaton& l, const PropertySpec& p) {
  require_same_alphabet(impl.underlying.alphabet(), l.alphabet(), "implementation check");
  BuchiAutomaton all = impl.underlying.reinterpret<BuchiAcceptance>();
  all.set_all_accepting();
  if (auto w = distinguishing_word(prefix_automaton(all), prefix_automaton(limit(l)))) return {false, Witness{*w}};
  auto r = check_emptiness(product(impl.fair_automaton(), p.negative));
  if (!r.empty) return {false, Witness{*r.witness}};
  return {};
}

std::vector<LassoWord> enumerate_fair_lassos(const FairLts& impl, std::size_t max_len) {
  const FinAutomaton& g = impl.underlying;
  std::set<LassoWord> found;
  Word stem, cycle;

  // Closes cycles back to `anchor` of length <= budget.
  std::function<void(State, State, std::size_t, bool)> cycles = [&](State anchor, State q, std::size_t budget,
                                                                     bool marked) {
    for (const Edge& e : g.edges(q)) {
      cycle.push_back(e.symbol);
      bool m = marked || impl.marks[e.target];
      if (e.target == anchor && m) found.insert(LassoWord{stem, cycle}.normalized());
      if (budget > 1) cycles(anchor, e.target, budget - 1, m);
      cycle.pop_back();
    }
  };
  std::function<void(State, std::size_t)> stems = [&](State q, std::size_t budget) {
    cycles(q, q, budget, false);
    if (budget <= 1) return;
    for (const Edge& e : g.edges(q)) {
      stem.push_back(e.symbol);
      stems(e.target, budget - 1);
      stem.pop_back();
    }
  };
  for (State q : g.initial()) stems(q, max_len);

  std::vector<LassoWord> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const LassoWord& a, const LassoWord& b) {
    return std::tuple(a.size(), a.stem.size(), a.stem, a.cycle) < std::tuple(b.size(), b.stem.size(), b.stem, b.cycle);
  });
  return out;
}

}  // namespace faircheck

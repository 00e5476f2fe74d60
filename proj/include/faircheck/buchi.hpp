#pragma once

#include <optional>

#include "faircheck/automaton.hpp"
#include "faircheck/lasso.hpp"

namespace faircheck {

/// Drops every state that is unreachable or from which no omega-word is
/// accepted. Relative state order, names and accepting flags are kept.
BuchiAutomaton reduce_buchi(const BuchiAutomaton& b);

/// Canonical automaton for the finite prefixes of L(b).
FinAutomaton prefix_automaton(const BuchiAutomaton& b);

/// Eilenberg limit of a prefix-closed language. Throws NotPrefixClosed.
BuchiAutomaton limit(const FinAutomaton& a);

/// Limit of an arbitrary regular language, read off its canonical DFA: an
/// omega-word has infinitely many prefixes in L iff the deterministic run
/// visits accepting states infinitely often.
BuchiAutomaton deterministic_limit(const FinAutomaton& a);

/// Intersection; accepting visits are tracked with a two-phase flag.
BuchiAutomaton product(const BuchiAutomaton& a, const BuchiAutomaton& b);

/// Automaton accepting every omega-word over the alphabet.
BuchiAutomaton universal_buchi(const Alphabet& alphabet);
/// Automaton with no states.
BuchiAutomaton empty_buchi(const Alphabet& alphabet);

struct EmptinessResult {
  bool empty;
  std::optional<LassoWord> witness;  // normalized; present iff !empty
};

/// Accepting-lasso search. For every accepting state the shortest stem and
/// the shortest cycle through it form a candidate; the reported witness is
/// the candidate whose normalized word has the shortest stem, then the
/// shortest cycle, then the smallest letters.
EmptinessResult check_emptiness(const BuchiAutomaton& b);
inline bool is_empty(const BuchiAutomaton& b) { return check_emptiness(b).empty; }

BuchiAutomaton lasso_automaton(const LassoWord& x, const Alphabet& alphabet);
bool lasso_membership(const LassoWord& x, const BuchiAutomaton& b);

}  // namespace faircheck

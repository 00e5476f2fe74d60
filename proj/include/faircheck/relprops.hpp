#pragma once

#include <optional>
#include <variant>

#include "faircheck/automaton.hpp"
#include "faircheck/formula.hpp"
#include "faircheck/lasso.hpp"
#include "faircheck/pltl.hpp"

namespace faircheck {

/// A property P given by an automaton for P and one for its complement.
/// Complementarity is the builder's responsibility.
struct PropertySpec {
  BuchiAutomaton positive;
  BuchiAutomaton negative;

  static PropertySpec from_formula(const Formula& f, const Labeling& labeling);
  /// P = every omega-word.
  static PropertySpec universal(const Alphabet& alphabet);
  const Alphabet& alphabet() const { return positive.alphabet(); }
};

using Witness = std::variant<Word, LassoWord>;

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

/// pre(L) == pre(L & P). The witness is the shortest prefix of L with no
/// continuation in P.
Verdict is_relative_liveness(const BuchiAutomaton& system, const PropertySpec& p);
inline Verdict satisfies_within_fairness(const BuchiAutomaton& system, const PropertySpec& p) {
  return is_relative_liveness(system, p);
}

/// L & lim(pre(L & P)) is contained in P. Witness: violating lasso.
Verdict is_relative_safety(const BuchiAutomaton& system, const PropertySpec& p);

/// L contained in P. Witness: violating lasso.
Verdict satisfies(const BuchiAutomaton& system, const PropertySpec& p);

/// pre(L) contained in pre(sub). Witness: shortest prefix outside pre(sub).
Verdict is_machine_closed(const BuchiAutomaton& system, const BuchiAutomaton& sub);

/// lim(pre(P)) contained in P.
bool is_safety_property(const PropertySpec& p);

}  // namespace faircheck

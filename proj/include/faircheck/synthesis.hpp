#pragma once

#include <vector>

#include "faircheck/automaton.hpp"
#include "faircheck/relprops.hpp"

namespace faircheck {

/// Transition system plus fairness marks: a run is fair iff it visits
/// marked states infinitely often.
struct FairLts {
  FinAutomaton underlying;  // all states accepting
  std::vector<bool> marks;

  /// The underlying graph read as a Büchi automaton over the marks.
  BuchiAutomaton fair_automaton() const;
};

/// Reduced product of lim(L) and P with its acceptance condition turned
/// into marks. Throws PreconditionFailed unless lim(L) satisfies P within
/// fairness, NotPrefixClosed unless L is prefix-closed.
FairLts synthesize_fair_impl(const FinAutomaton& l, const PropertySpec& p);

/// (i) the limit of the underlying system is lim(L); (ii) every fair run
/// satisfies P. A Word witness refutes (i), a LassoWord witness (ii).
Verdict verify_fair_impl(const FairLts& impl, const FinAutomaton& l, const PropertySpec& p);

/// Normalized words of the lassos stem.cycle through the underlying graph
/// whose cycle passes a mark, with |stem| + |cycle| <= max_len. Sorted by
/// size, stem length, stem, cycle.
std::vector<LassoWord> enumerate_fair_lassos(const FairLts& impl, std::size_t max_len);

}  // namespace faircheck

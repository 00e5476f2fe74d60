#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faircheck/automaton.hpp"

namespace faircheck {

/// Determinize, trim and minimize. States are numbered in breadth-first
/// order from the initial state, visiting symbols in alphabet order. The
/// empty language yields the automaton with no states.
FinAutomaton canonicalize(const FinAutomaton& a);

bool accepts(const FinAutomaton& a, std::span<const Symbol> word);

/// Shortest word (ties broken by alphabet order) in L(a) but not in L(b),
/// or nullopt when L(a) is included in L(b).
std::optional<Word> subset_counterexample(const FinAutomaton& a, const FinAutomaton& b);

struct SubsetResult {
  bool holds;
  std::optional<Word> counterexample;
};
SubsetResult language_subset(const FinAutomaton& a, const FinAutomaton& b);

/// Shortest word in the symmetric difference of the two languages.
std::optional<Word> distinguishing_word(const FinAutomaton& a, const FinAutomaton& b);
bool language_equal(const FinAutomaton& a, const FinAutomaton& b);

/// Automaton for {v | wv in L(a)}; canonical.
FinAutomaton left_quotient(const FinAutomaton& a, std::span<const Symbol> word);
/// Token form; throws SymbolNotInAlphabet for unknown tokens.
FinAutomaton left_quotient(const FinAutomaton& a, std::span<const std::string> tokens);

FinAutomaton product_fin(const FinAutomaton& a, const FinAutomaton& b);

/// Trimmed canonical automaton has all states accepting.
bool is_prefix_closed(const FinAutomaton& a);

/// Same automaton with a different single initial state.
FinAutomaton rebase(const FinAutomaton& a, State initial);

/// Block number per state of a partial automaton with at most one successor
/// per (state, symbol): two states share a block iff they accept the same
/// language. States with empty language all map to block 0.
std::vector<std::size_t> language_classes(const FinAutomaton& a);

}  // namespace faircheck

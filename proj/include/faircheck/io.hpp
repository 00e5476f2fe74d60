#pragma once

#include <string>
#include <string_view>

#include "faircheck/abstraction.hpp"
#include "faircheck/automaton.hpp"

namespace faircheck {

/// Contents of an .aut file. Exactly one of the two automata is meaningful,
/// selected by `buchi`.
struct AutomatonFile {
  bool buchi = false;
  FinAutomaton finite;
  BuchiAutomaton omega;

  const Alphabet& alphabet() const { return buchi ? omega.alphabet() : finite.alphabet(); }
};

/// Line-oriented format:
///   alphabet: a b c        (a trailing "#" selects the padded alphabet)
///   acceptance: buchi      (optional; finitary otherwise)
///   states: s0 s1
///   initial: s0
///   accepting: s1          (optional for finitary: all states accepting)
///   trans: s0 a s1         (one per transition)
/// Full-line comments start with "#". Errors are Syntax errors with a
/// 1-based line and column.
AutomatonFile parse_automaton(std::string_view text);
std::string print_automaton(const FinAutomaton& a);
std::string print_automaton(const BuchiAutomaton& a);

/// One "letter -> letter" or "letter -> eps" per source letter. The target
/// alphabet lists visible images in order of first appearance.
Homomorphism parse_homomorphism(std::string_view text, const Alphabet& source);
std::string print_homomorphism(const Homomorphism& h);

std::string read_file(const std::string& path);

}  // namespace faircheck

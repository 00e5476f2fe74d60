#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "faircheck/alphabet.hpp"
#include "faircheck/error.hpp"

namespace faircheck {

using State = std::uint32_t;

struct Edge {
  Symbol symbol;
  State target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Transition {
  State source;
  Symbol symbol;
  State target;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct FiniteAcceptance {};
struct BuchiAcceptance {};

/// Explicit-state automaton over a finite alphabet. The acceptance tag only
/// fixes how the accepting set is read: as final states of finite words or
/// as a Büchi condition on infinite runs. Out-edges are kept sorted by
/// (symbol, target) and free of duplicates.
template <typename Acceptance>
class Automaton {
 public:
  Automaton() = default;
  Automaton(Alphabet alphabet, std::size_t num_states)
      : alphabet_(std::move(alphabet)), accepting_(num_states, false), out_(num_states) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return out_.size(); }
  bool empty_structure() const noexcept { return out_.empty(); }

  State add_state(bool accepting = false) {
    out_.emplace_back();
    accepting_.push_back(accepting);
    if (!names_.empty()) names_.push_back("s" + std::to_string(out_.size() - 1));
    return static_cast<State>(out_.size() - 1);
  }

  void add_initial(State q) {
    check_state(q);
    auto it = std::lower_bound(initial_.begin(), initial_.end(), q);
    if (it == initial_.end() || *it != q) initial_.insert(it, q);
  }
  const std::vector<State>& initial() const noexcept { return initial_; }
  bool is_initial(State q) const { return std::binary_search(initial_.begin(), initial_.end(), q); }

  void set_accepting(State q, bool value = true) {
    check_state(q);
    accepting_[q] = value;
  }
  bool accepting(State q) const { return accepting_.at(q); }
  void set_all_accepting() { std::fill(accepting_.begin(), accepting_.end(), true); }
  bool all_accepting() const {
    return std::all_of(accepting_.begin(), accepting_.end(), [](bool b) { return b; });
  }

  void add_transition(State source, Symbol symbol, State target) {
    check_state(source);
    check_state(target);
    if (symbol >= alphabet_.size())
      throw Error(ErrorKind::SymbolNotInAlphabet, "transition symbol out of range");
    auto& edges = out_[source];
    Edge e{symbol, target};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
  }

  std::span<const Edge> edges(State q) const { return out_.at(q); }

  /// Targets of q on symbol s.
  std::vector<State> successors(State q, Symbol s) const {
    std::vector<State> result;
    for (const Edge& e : out_.at(q))
      if (e.symbol == s) result.push_back(e.target);
    return result;
  }

  std::vector<Transition> transitions() const {
    std::vector<Transition> result;
    for (State q = 0; q < num_states(); ++q)
      for (const Edge& e : out_[q]) result.push_back({q, e.symbol, e.target});
    return result;
  }
  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_) n += edges.size();
    return n;
  }

  /// At most one initial state and at most one successor per (state, symbol).
  bool deterministic() const {
    if (initial_.size() > 1) return false;
    for (const auto& edges : out_)
      for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].symbol == edges[i - 1].symbol) return false;
    return true;
  }

  /// Optional human-readable state names, kept by parsing and by operations
  /// that only drop states. Unnamed automata print as s0, s1, ...
  bool has_names() const noexcept { return !names_.empty(); }
  std::string name(State q) const {
    return names_.empty() ? "s" + std::to_string(q) : names_.at(q);
  }
  void set_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != num_states())
      throw Error(ErrorKind::InvalidArgument, "state name count mismatch");
    names_ = std::move(names);
  }

  /// Same graph, initial states and accepting set under another acceptance
  /// reading.
  template <typename Other>
  Automaton<Other> reinterpret() const {
    Automaton<Other> result(alphabet_, num_states());
    for (State q : initial_) result.add_initial(q);
    for (State q = 0; q < num_states(); ++q) {
      result.set_accepting(q, accepting_[q]);
      for (const Edge& e : out_[q]) result.add_transition(q, e.symbol, e.target);
    }
    if (has_names()) result.set_names(names_);
    return result;
  }

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  void check_state(State q) const {
    if (q >= num_states()) throw Error(ErrorKind::InvalidArgument, "state index out of range");
  }

  Alphabet alphabet_;
  std::vector<State> initial_;
  std::vector<bool> accepting_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::string> names_;
};

using FinAutomaton = Automaton<FiniteAcceptance>;
using BuchiAutomaton = Automaton<BuchiAcceptance>;

/// Copy of a restricted to the states flagged in keep, renumbered in
/// increasing index order. Names are carried over.
template <typename Acceptance>
Automaton<Acceptance> restrict_states(const Automaton<Acceptance>& a, const std::vector<bool>& keep) {
  std::vector<State> index(a.num_states(), 0);
  std::vector<std::string> names;
  State next = 0;
  for (State q = 0; q < a.num_states(); ++q) {
    if (!keep[q]) continue;
    index[q] = next++;
    if (a.has_names()) names.push_back(a.name(q));
  }
  Automaton<Acceptance> result(a.alphabet(), next);
  for (State q = 0; q < a.num_states(); ++q) {
    if (!keep[q]) continue;
    result.set_accepting(index[q], a.accepting(q));
    if (a.is_initial(q)) result.add_initial(index[q]);
    for (const Edge& e : a.edges(q))
      if (keep[e.target]) result.add_transition(index[q], e.symbol, index[e.target]);
  }
  if (a.has_names()) result.set_names(std::move(names));
  return result;
}

/// States reachable from the initial set.
template <typename Acceptance>
std::vector<bool> reachable_states(const Automaton<Acceptance>& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<State> stack(a.initial().begin(), a.initial().end());
  for (State q : stack) seen[q] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (const Edge& e : a.edges(q))
      if (!seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
  }
  return seen;
}

/// States from which some state in targets is reachable (targets included).
template <typename Acceptance>
std::vector<bool> backward_closure(const Automaton<Acceptance>& a, const std::vector<bool>& targets) {
  std::vector<std::vector<State>> pred(a.num_states());
  for (State q = 0; q < a.num_states(); ++q)
    for (const Edge& e : a.edges(q)) pred[e.target].push_back(q);
  std::vector<bool> seen = targets;
  std::vector<State> stack;
  for (State q = 0; q < a.num_states(); ++q)
    if (seen[q]) stack.push_back(q);
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : pred[q])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

}  // namespace faircheck

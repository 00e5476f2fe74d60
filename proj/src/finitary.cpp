#include "faircheck/finitary.hpp"

#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

namespace faircheck {

namespace {

constexpr State kNone = std::numeric_limits<State>::max();

FinAutomaton with_initial(const FinAutomaton& a, std::span<const State> initial) {
  FinAutomaton result(a.alphabet(), a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    result.set_accepting(q, a.accepting(q));
    for (const Edge& e : a.edges(q)) result.add_transition(q, e.symbol, e.target);
  }
  for (State q : initial) result.add_initial(q);
  return result;
}

std::vector<State> step(const FinAutomaton& a, const std::vector<State>& from, Symbol s) {
  std::vector<State> next;
  for (State q : from)
    for (const Edge& e : a.edges(q))
      if (e.symbol == s) next.push_back(e.target);
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

// Reachable part of the subset construction; the empty subset is omitted.
FinAutomaton determinize(const FinAutomaton& a) {
  FinAutomaton result(a.alphabet(), 0);
  if (a.initial().empty()) return result;
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> subset) {
    auto [it, inserted] = index.emplace(subset, static_cast<State>(subsets.size()));
    if (inserted) {
      bool acc = std::any_of(subset.begin(), subset.end(), [&](State q) { return a.accepting(q); });
      result.add_state(acc);
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  result.add_initial(intern(a.initial()));
  for (State i = 0; i < subsets.size(); ++i) {
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      auto next = step(a, subsets[i], s);
      if (next.empty()) continue;
      State j = intern(std::move(next));
      result.add_transition(i, s, j);
    }
  }
  return result;
}

State successor(const FinAutomaton& dfa, State q, Symbol s) {
  if (q == kNone) return kNone;
  for (const Edge& e : dfa.edges(q))
    if (e.symbol == s) return e.target;
  return kNone;
}

std::uint64_t pair_key(State a, State b) { return (std::uint64_t{a} << 32) | b; }

struct PairSearch {
  struct Node {
    State a;
    State b;
    std::size_t parent;
    Symbol symbol;
  };
  std::vector<Node> nodes;

  Word word_to(std::size_t i) const {
    Word w;
    while (i != 0) {
      w.push_back(nodes[i].symbol);
      i = nodes[i].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

// Breadth-first search over pairs of canonical DFA states (kNone standing for
// the implicit rejecting sink) for the first pair satisfying `target`.
template <typename Pred>
std::optional<Word> pair_bfs(const FinAutomaton& da, const FinAutomaton& db, bool allow_a_sink,
                             Pred target) {
  State ia = da.initial().empty() ? kNone : da.initial().front();
  State ib = db.initial().empty() ? kNone : db.initial().front();
  if (ia == kNone && (!allow_a_sink || ib == kNone)) return std::nullopt;
  PairSearch search;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  search.nodes.push_back({ia, ib, 0, 0});
  seen.emplace(pair_key(ia, ib), 0);
  for (std::size_t i = 0; i < search.nodes.size(); ++i) {
    auto [qa, qb, parent, sym] = search.nodes[i];
    if (target(qa, qb)) return search.word_to(i);
    for (Symbol s = 0; s < da.alphabet().size(); ++s) {
      State na = successor(da, qa, s);
      State nb = successor(db, qb, s);
      if (na == kNone && (!allow_a_sink || nb == kNone)) continue;
      if (seen.emplace(pair_key(na, nb), search.nodes.size()).second)
        search.nodes.push_back({na, nb, i, s});
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> language_classes(const FinAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<bool> acc(n);
  for (State q = 0; q < n; ++q) acc[q] = a.accepting(q);
  const std::vector<bool> live = backward_closure(a, acc);
  const std::size_t k = a.alphabet().size();

  // Block 0 collects empty-language states and the implicit sink.
  std::vector<std::size_t> block(n);
  for (State q = 0; q < n; ++q) block[q] = !live[q] ? 0 : (acc[q] ? 1 : 2);
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    signatures.emplace(std::vector<std::size_t>{0}, 0);
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      if (!live[q]) continue;
      std::vector<std::size_t> sig{block[q]};
      sig.resize(k + 1, 0);
      for (const Edge& e : a.edges(q)) sig[e.symbol + 1] = block[e.target];
      auto it = signatures.emplace(std::move(sig), signatures.size()).first;
      next[q] = it->second;
    }
    block = std::move(next);
    if (signatures.size() == count) break;
    count = signatures.size();
  }
  return block;
}

FinAutomaton canonicalize(const FinAutomaton& a) {
  FinAutomaton dfa = determinize(a);
  if (dfa.num_states() == 0) return FinAutomaton(a.alphabet(), 0);
  std::vector<std::size_t> block = language_classes(dfa);
  State init = dfa.initial().front();
  if (block[init] == 0) return FinAutomaton(a.alphabet(), 0);

  // Breadth-first renumbering of live blocks from the initial block.
  std::map<std::size_t, State> number;
  std::vector<State> representative;
  auto visit = [&](State q) {
    auto [it, inserted] = number.emplace(block[q], static_cast<State>(representative.size()));
    if (inserted) representative.push_back(q);
    return it->second;
  };
  visit(init);
  std::vector<Transition> transitions;
  for (State i = 0; i < representative.size(); ++i) {
    State q = representative[i];
    for (const Edge& e : dfa.edges(q)) {
      if (block[e.target] == 0) continue;
      transitions.push_back({i, e.symbol, visit(e.target)});
    }
  }
  FinAutomaton result(a.alphabet(), representative.size());
  result.add_initial(0);
  for (State i = 0; i < representative.size(); ++i) result.set_accepting(i, dfa.accepting(representative[i]));
  for (const Transition& t : transitions) result.add_transition(t.source, t.symbol, t.target);
  return result;
}

bool accepts(const FinAutomaton& a, std::span<const Symbol> word) {
  std::vector<State> current(a.initial().begin(), a.initial().end());
  for (Symbol s : word) {
    if (s >= a.alphabet().size()) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol out of range");
    current = step(a, current, s);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](State q) { return a.accepting(q); });
}

std::optional<Word> subset_counterexample(const FinAutomaton& a, const FinAutomaton& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "language_subset");
  FinAutomaton da = canonicalize(a);
  FinAutomaton db = canonicalize(b);
  return pair_bfs(da, db, false, [&](State qa, State qb) {
    return qa != kNone && da.accepting(qa) && (qb == kNone || !db.accepting(qb));
  });
}

SubsetResult language_subset(const FinAutomaton& a, const FinAutomaton& b) {
  auto cex = subset_counterexample(a, b);
  return {!cex.has_value(), std::move(cex)};
}

std::optional<Word> distinguishing_word(const FinAutomaton& a, const FinAutomaton& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "language_equal");
  FinAutomaton da = canonicalize(a);
  FinAutomaton db = canonicalize(b);
  return pair_bfs(da, db, true, [&](State qa, State qb) {
    bool in_a = qa != kNone && da.accepting(qa);
    bool in_b = qb != kNone && db.accepting(qb);
    return in_a != in_b;
  });
}

bool language_equal(const FinAutomaton& a, const FinAutomaton& b) {
  return !distinguishing_word(a, b).has_value();
}

FinAutomaton left_quotient(const FinAutomaton& a, std::span<const Symbol> word) {
  std::vector<State> current(a.initial().begin(), a.initial().end());
  for (Symbol s : word) {
    if (s >= a.alphabet().size()) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol out of range");
    current = step(a, current, s);
  }
  return canonicalize(with_initial(a, current));
}

FinAutomaton left_quotient(const FinAutomaton& a, std::span<const std::string> tokens) {
  Word w = a.alphabet().encode(tokens);
  return left_quotient(a, w);
}

FinAutomaton product_fin(const FinAutomaton& a, const FinAutomaton& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "product_fin");
  FinAutomaton result(a.alphabet(), 0);
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = index.emplace(pair_key(p, q), static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(p, q);
      result.add_state(a.accepting(p) && b.accepting(q));
    }
    return it->second;
  };
  for (State p : a.initial())
    for (State q : b.initial()) result.add_initial(intern(p, q));
  for (State i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (const Edge& ea : a.edges(p))
      for (const Edge& eb : b.edges(q))
        if (ea.symbol == eb.symbol) {
          State j = intern(ea.target, eb.target);
          result.add_transition(i, ea.symbol, j);
        }
  }
  return result;
}

bool is_prefix_closed(const FinAutomaton& a) { return canonicalize(a).all_accepting(); }

FinAutomaton rebase(const FinAutomaton& a, State initial) {
  State init[] = {initial};
  return with_initial(a, init);
}

}  // namespace faircheck

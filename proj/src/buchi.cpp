#include "faircheck/buchi.hpp"

#include <tuple>
#include <deque>
#include <limits>
#include <unordered_map>

#include "faircheck/finitary.hpp"

namespace faircheck {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns the component id of every state.
std::vector<std::size_t> scc_ids(const BuchiAutomaton& b) {
  const std::size_t n = b.num_states();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::size_t counter = 0, components = 0;
  struct Frame {
    State q;
    std::size_t edge;
  };
  for (State root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto edges = b.edges(f.q);
      if (f.edge < edges.size()) {
        State t = edges[f.edge++].target;
        if (index[t] == kUnvisited) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          frames.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.q] = std::min(low[f.q], index[t]);
        }
        continue;
      }
      State q = f.q;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().q] = std::min(low[frames.back().q], low[q]);
      if (low[q] == index[q]) {
        State t;
        do {
          t = stack.back();
          stack.pop_back();
          on_stack[t] = false;
          comp[t] = components;
        } while (t != q);
        ++components;
      }
    }
  }
  return comp;
}

struct Path {
  Word word;
  bool found = false;
};

// Shortest path from any state in `sources` to `target`, with at least one
// edge when `nonempty`. Edges are explored in (symbol, target) order.
Path shortest_path(const BuchiAutomaton& b, std::span<const State> sources, State target, bool nonempty) {
  const std::size_t n = b.num_states();
  std::vector<std::size_t> parent(n, kUnvisited);
  std::vector<Symbol> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<State> queue;
  const std::size_t kRoot = kUnvisited - 1;
  if (nonempty) {
    // Seed with the successors of the sources so the path has >= 1 edge.
    for (State s : sources)
      for (const Edge& e : b.edges(s))
        if (!seen[e.target]) {
          seen[e.target] = true;
          parent[e.target] = kRoot;
          via[e.target] = e.symbol;
          queue.push_back(e.target);
        }
  } else {
    for (State s : sources)
      if (!seen[s]) {
        seen[s] = true;
        parent[s] = kRoot;
        queue.push_back(s);
      }
  }
  Path path;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (q == target) {
      path.found = true;
      State cur = q;
      while (parent[cur] != kRoot) {
        path.word.push_back(via[cur]);
        cur = static_cast<State>(parent[cur]);
      }
      if (nonempty) path.word.push_back(via[cur]);
      std::reverse(path.word.begin(), path.word.end());
      return path;
    }
    for (const Edge& e : b.edges(q))
      if (!seen[e.target]) {
        seen[e.target] = true;
        parent[e.target] = q;
        via[e.target] = e.symbol;
        queue.push_back(e.target);
      }
  }
  return path;
}

}  // namespace

BuchiAutomaton reduce_buchi(const BuchiAutomaton& b) {
  const std::size_t n = b.num_states();
  std::vector<bool> reach = reachable_states(b);
  std::vector<std::size_t> comp = scc_ids(b);
  std::vector<std::size_t> size(n, 0);
  std::vector<bool> has_accepting(n, false), self_loop(n, false);
  for (State q = 0; q < n; ++q) {
    ++size[comp[q]];
    if (b.accepting(q)) has_accepting[comp[q]] = true;
    for (const Edge& e : b.edges(q))
      if (e.target == q) self_loop[q] = true;
  }
  std::vector<bool> good(n, false);
  for (State q = 0; q < n; ++q)
    good[q] = reach[q] && has_accepting[comp[q]] && (size[comp[q]] > 1 || self_loop[q]);
  std::vector<bool> live = backward_closure(b, good);
  for (State q = 0; q < n; ++q) live[q] = live[q] && reach[q];
  return restrict_states(b, live);
}

FinAutomaton prefix_automaton(const BuchiAutomaton& b) {
  FinAutomaton fin = reduce_buchi(b).reinterpret<FiniteAcceptance>();
  fin.set_all_accepting();
  return canonicalize(fin);
}

BuchiAutomaton limit(const FinAutomaton& a) {
  FinAutomaton c = canonicalize(a);
  if (!c.all_accepting())
    throw Error(ErrorKind::NotPrefixClosed, "limit requires a prefix-closed language");
  return c.reinterpret<BuchiAcceptance>();
}

BuchiAutomaton deterministic_limit(const FinAutomaton& a) {
  return canonicalize(a).reinterpret<BuchiAcceptance>();
}

BuchiAutomaton product(const BuchiAutomaton& a, const BuchiAutomaton& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "product");
  struct Triple {
    State p, q;
    bool phase;
  };
  // When one side accepts everywhere the other side's flags suffice and the
  // phase bit stays 0. Shorter cycles, hence shorter witnesses.
  const bool a_all = a.all_accepting(), b_all = b.all_accepting();
  const bool flagless = a_all || b_all;
  auto plain_accepting = [&](State p, State q) { return a_all ? b.accepting(q) : a.accepting(p); };
  BuchiAutomaton result(a.alphabet(), 0);
  std::unordered_map<std::uint64_t, State> index;
  std::vector<Triple> triples;
  auto intern = [&](State p, State q, bool phase) {
    std::uint64_t key = (std::uint64_t{p} << 33) | (std::uint64_t{q} << 1) | (phase ? 1 : 0);
    auto [it, inserted] = index.emplace(key, static_cast<State>(triples.size()));
    if (inserted) {
      triples.push_back({p, q, phase});
      result.add_state(flagless ? plain_accepting(p, q) : !phase && a.accepting(p));
    }
    return it->second;
  };
  for (State p : a.initial())
    for (State q : b.initial()) result.add_initial(intern(p, q, false));
  for (State i = 0; i < triples.size(); ++i) {
    auto [p, q, phase] = triples[i];
    bool next_phase = phase;
    if (flagless) next_phase = false;
    else if (!phase && a.accepting(p)) next_phase = true;
    else if (phase && b.accepting(q)) next_phase = false;
    for (const Edge& ea : a.edges(p))
      for (const Edge& eb : b.edges(q))
        if (ea.symbol == eb.symbol) {
          State j = intern(ea.target, eb.target, next_phase);
          result.add_transition(i, ea.symbol, j);
        }
  }
  return result;
}

BuchiAutomaton universal_buchi(const Alphabet& alphabet) {
  BuchiAutomaton u(alphabet, 1);
  u.add_initial(0);
  u.set_accepting(0);
  for (Symbol s = 0; s < alphabet.size(); ++s) u.add_transition(0, s, 0);
  return u;
}

BuchiAutomaton empty_buchi(const Alphabet& alphabet) { return BuchiAutomaton(alphabet, 0); }

EmptinessResult check_emptiness(const BuchiAutomaton& b) {
  BuchiAutomaton r = reduce_buchi(b);
  std::optional<LassoWord> best;
  for (State f = 0; f < r.num_states(); ++f) {
    if (!r.accepting(f)) continue;
    State self[] = {f};
    Path cycle = shortest_path(r, self, f, true);
    if (!cycle.found) continue;
    Path stem = shortest_path(r, r.initial(), f, false);
    if (!stem.found) continue;
    // Ranked by the word actually reported.
    LassoWord candidate = LassoWord{std::move(stem.word), std::move(cycle.word)}.normalized();
    auto rank = [](const LassoWord& x) { return std::tuple(x.stem.size(), x.cycle.size(), x.stem, x.cycle); };
    if (!best || rank(candidate) < rank(*best)) best = std::move(candidate);
  }
  if (!best) return {true, std::nullopt};
  return {false, *best};
}

BuchiAutomaton lasso_automaton(const LassoWord& x, const Alphabet& alphabet) {
  if (x.cycle.empty()) throw Error(ErrorKind::InvalidArgument, "lasso cycle must not be empty");
  const std::size_t n = x.size();
  BuchiAutomaton a(alphabet, n);
  a.add_initial(0);
  a.set_all_accepting();
  for (std::size_t i = 0; i < n; ++i) {
    Symbol s = i < x.stem.size() ? x.stem[i] : x.cycle[i - x.stem.size()];
    if (s >= alphabet.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "lasso symbol out of range");
    State next = static_cast<State>(i + 1 < n ? i + 1 : x.stem.size());
    a.add_transition(static_cast<State>(i), s, next);
  }
  return a;
}

bool lasso_membership(const LassoWord& x, const BuchiAutomaton& b) {
  return !is_empty(product(b, lasso_automaton(x, b.alphabet())));
}

}  // namespace faircheck

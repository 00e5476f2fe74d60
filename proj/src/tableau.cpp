// Letter-driven tableau: a state is the set of obligations the remaining
// suffix must satisfy. Expanding a state on a letter resolves every
// obligation into alternatives, each a set of next-step obligations plus the
// eventualities (U, F) it postpones. A transition belongs to the acceptance
// set of eventuality u iff it does not postpone u; the generalized condition
// is degeneralized with a round-robin counter.

#include <algorithm>
#include <iterator>
#include <map>
#include <unordered_map>

#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/pltl.hpp"

namespace faircheck {

namespace {

using Ids = std::vector<int>;

struct Alternative {
  Ids next;
  Ids postponed;

  friend bool operator==(const Alternative&, const Alternative&) = default;
  friend auto operator<=>(const Alternative&, const Alternative&) = default;
};

Ids merge(const Ids& a, const Ids& b) {
  Ids out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const Ids& big, const Ids& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Removes duplicates and alternatives that demand a superset of another's
// obligations and postponements.
void prune(std::vector<Alternative>& alts) {
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  std::vector<Alternative> kept;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < alts.size() && !dominated; ++j)
      dominated = i != j && includes(alts[i].next, alts[j].next) && includes(alts[i].postponed, alts[j].postponed);
    if (!dominated) kept.push_back(alts[i]);
  }
  alts = std::move(kept);
}

std::vector<Alternative> cross(const std::vector<Alternative>& a, const std::vector<Alternative>& b) {
  std::vector<Alternative> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({merge(x.next, y.next), merge(x.postponed, y.postponed)});
  prune(out);
  return out;
}

std::vector<Alternative> join(std::vector<Alternative> a, const std::vector<Alternative>& b) {
  a.insert(a.end(), b.begin(), b.end());
  prune(a);
  return a;
}

class Tableau {
 public:
  Tableau(const Labeling& labeling) : labeling_(labeling) {}

  BuchiAutomaton build(const Formula& positive_formula) {
    const int root = intern(positive_formula);
    const std::size_t letters = labeling_.alphabet().size();

    std::map<Ids, int> state_index;
    std::vector<Ids> states;
    auto state_of = [&](const Ids& obligations) {
      auto [it, inserted] = state_index.emplace(obligations, static_cast<int>(states.size()));
      if (inserted) states.push_back(obligations);
      return it->second;
    };
    Ids start;
    if (nodes_[root].op != Op::True) start.push_back(root);
    state_of(start);

    struct Arc {
      int source;
      Symbol symbol;
      int target;
      Ids postponed;
    };
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (Symbol c = 0; c < letters; ++c) {
        std::vector<Alternative> alts{Alternative{}};
        for (int id : states[i]) {
          alts = cross(alts, expand(id, c));
          if (alts.empty()) break;
        }
        for (auto& alt : alts) {
          int target = state_of(alt.next);
          arcs.push_back({static_cast<int>(i), c, target, std::move(alt.postponed)});
        }
      }
    }

    // Eventualities: every U and F node in the closure.
    std::vector<int> eventualities;
    for (std::size_t id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].op == Op::Until || nodes_[id].op == Op::Eventually) eventualities.push_back(static_cast<int>(id));
    const std::size_t m = eventualities.size();

    // Degeneralized states (tableau state, counter); counter m marks a
    // completed round and is the Büchi condition.
    std::vector<std::vector<std::size_t>> out_arcs(states.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) out_arcs[arcs[a].source].push_back(a);
    BuchiAutomaton result(labeling_.alphabet(), 0);
    std::map<std::pair<int, std::size_t>, State> index;
    std::vector<std::pair<int, std::size_t>> product_states;
    auto intern_state = [&](int s, std::size_t k) {
      auto [it, inserted] = index.emplace(std::pair(s, k), static_cast<State>(product_states.size()));
      if (inserted) {
        product_states.emplace_back(s, k);
        result.add_state(k == m);
      }
      return it->second;
    };
    result.add_initial(intern_state(0, 0));
    for (State i = 0; i < product_states.size(); ++i) {
      auto [s, k] = product_states[i];
      for (std::size_t a : out_arcs[s]) {
        const Arc& arc = arcs[a];
        std::size_t j = k == m ? 0 : k;
        while (j < m && !std::binary_search(arc.postponed.begin(), arc.postponed.end(), eventualities[j])) ++j;
        State t = intern_state(arc.target, j);
        result.add_transition(i, arc.symbol, t);
      }
    }
    return reduce_buchi(result);
  }

 private:
  struct Node {
    Op op;
    std::string name;
    int left = -1;
    int right = -1;
    int negated_right = -1;  // Before only: id of pnf(!right)
  };

  int intern(const Formula& f) {
    std::string key = to_string(f);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    Node node{f.op(), {}, -1, -1, -1};
    if (f.is_atom()) node.name = f.name();
    if (f.op() == Op::Not) {
      if (f.operand().op() != Op::True && !f.operand().is_atom())
        throw Error(ErrorKind::NotNormalForm, "tableau expects positive normal form");
      node.left = intern(f.operand());
    } else if (f.is_unary()) {
      node.left = intern(f.operand());
    } else if (f.is_binary()) {
      if (f.op() == Op::Implies || f.op() == Op::Iff)
        throw Error(ErrorKind::NotNormalForm, "tableau expects positive normal form");
      node.left = intern(f.left());
      node.right = intern(f.right());
      if (f.op() == Op::Before) node.negated_right = intern(to_positive_normal_form(Formula::negation(f.right())));
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    ids_.emplace(std::move(key), id);
    return id;
  }

  const std::vector<Alternative>& expand(int id, Symbol c) {
    auto key = std::pair(id, c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Alternative> result = compute(id, c);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  std::vector<Alternative> compute(int id, Symbol c) {
    const std::vector<Alternative> yes{Alternative{}};
    const std::vector<Alternative> no{};
    // Copy: interning may grow nodes_.
    const Node node = nodes_[id];
    auto obligation = [&](int target) {
      Alternative alt;
      if (nodes_[target].op != Op::True) alt.next.push_back(target);
      return std::vector<Alternative>{alt};
    };
    switch (node.op) {
      case Op::True: return yes;
      case Op::Atom: return labeling_.holds(c, node.name) ? yes : no;
      case Op::Not: {
        const Node& arg = nodes_[node.left];
        if (arg.op == Op::True) return no;
        return labeling_.holds(c, arg.name) ? no : yes;
      }
      case Op::And: return cross(expand(node.left, c), expand(node.right, c));
      case Op::Or: return join(expand(node.left, c), expand(node.right, c));
      case Op::Next: return obligation(node.left);
      case Op::Until:
      case Op::Eventually: {
        std::vector<Alternative> later = obligation(id);
        later[0].postponed.push_back(id);
        if (node.op == Op::Until) later = cross(expand(node.left, c), later);
        const int goal = node.op == Op::Until ? node.right : node.left;
        return join(expand(goal, c), later);
      }
      case Op::Always: return cross(expand(node.left, c), obligation(id));
      case Op::Before: {
        // a B b == !b & (a | X(a B b)), greatest fixpoint.
        auto guard = expand(node.negated_right, c);
        return cross(guard, join(expand(node.left, c), obligation(id)));
      }
      case Op::Implies:
      case Op::Iff: break;
    }
    throw Error(ErrorKind::NotNormalForm, "tableau expects positive normal form");
  }

  const Labeling& labeling_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> ids_;
  std::map<std::pair<int, Symbol>, std::vector<Alternative>> memo_;
};

}  // namespace

BuchiAutomaton tableau_automaton(const Formula& f, const Labeling& labeling) {
  return Tableau(labeling).build(to_positive_normal_form(f));
}

FormulaAutomata to_buchi(const Formula& f, const Labeling& labeling) {
  return {tableau_automaton(f, labeling), tableau_automaton(Formula::negation(f), labeling)};
}

}  // namespace faircheck

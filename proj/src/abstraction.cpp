#include "faircheck/abstraction.hpp"

#include <deque>
#include <map>
#include <set>

#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/finitary.hpp"

namespace faircheck {

Homomorphism::Homomorphism(Alphabet source, Alphabet target, std::vector<std::optional<Symbol>> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size())
    throw Error(ErrorKind::InvalidArgument, "homomorphism must be total on its source alphabet");
  for (const auto& img : image_)
    if (img && *img >= target_.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "homomorphism image outside target");
}

Homomorphism Homomorphism::identity(const Alphabet& alphabet) {
  std::vector<std::optional<Symbol>> image(alphabet.size());
  for (Symbol s = 0; s < alphabet.size(); ++s) image[s] = s;
  return Homomorphism(alphabet, alphabet, std::move(image));
}

Word Homomorphism::apply(std::span<const Symbol> word) const {
  Word out;
  for (Symbol s : word)
    if (auto img = image(s)) out.push_back(*img);
  return out;
}

Homomorphism Homomorphism::lift_extension() const {
  auto image = image_;
  image.push_back(static_cast<Symbol>(target_.size()));
  return Homomorphism(source_.with_marker(), target_.with_marker(), std::move(image));
}

std::optional<LassoWord> apply_hom_lasso(const Homomorphism& h, const LassoWord& x) {
  LassoWord y{h.apply(x.stem), h.apply(x.cycle)};
  if (y.cycle.empty()) return std::nullopt;
  return y.normalized();
}

FinAutomaton image_automaton(const Homomorphism& h, const FinAutomaton& a) {
  require_same_alphabet(a.alphabet(), h.source(), "image");
  const std::size_t n = a.num_states();
  FinAutomaton nfa(h.target(), n);
  for (State q : a.initial()) nfa.add_initial(q);
  for (State q = 0; q < n; ++q) {
    // Hidden-letter closure of q.
    std::vector<bool> seen(n, false);
    std::vector<State> stack{q};
    seen[q] = true;
    while (!stack.empty()) {
      State p = stack.back();
      stack.pop_back();
      if (a.accepting(p)) nfa.set_accepting(q);
      for (const Edge& e : a.edges(p)) {
        if (auto img = h.image(e.symbol)) {
          nfa.add_transition(q, *img, e.target);
        } else if (!seen[e.target]) {
          seen[e.target] = true;
          stack.push_back(e.target);
        }
      }
    }
  }
  return canonicalize(nfa);
}

FinAutomaton inverse_image_automaton(const Homomorphism& h, const FinAutomaton& a) {
  require_same_alphabet(a.alphabet(), h.target(), "inverse image");
  FinAutomaton out(h.source(), a.num_states());
  for (State q : a.initial()) out.add_initial(q);
  for (State q = 0; q < a.num_states(); ++q) {
    out.set_accepting(q, a.accepting(q));
    for (Symbol c = 0; c < h.source().size(); ++c) {
      if (auto img = h.image(c)) {
        for (State t : a.successors(q, *img)) out.add_transition(q, c, t);
      } else {
        out.add_transition(q, c, q);
      }
    }
  }
  return out;
}

BuchiAutomaton inverse_image_automaton(const Homomorphism& h, const BuchiAutomaton& a) {
  require_same_alphabet(a.alphabet(), h.target(), "inverse image");
  // State 2q + f: f = 1 iff the last letter read was visible. Accepting
  // visits must be entered by a visible step, so runs that only stutter
  // from some point on are rejected.
  BuchiAutomaton out(h.source(), 2 * a.num_states());
  for (State q : a.initial()) out.add_initial(2 * q);
  for (State q = 0; q < a.num_states(); ++q) {
    out.set_accepting(2 * q + 1, a.accepting(q));
    for (State f = 0; f < 2; ++f)
      for (Symbol c = 0; c < h.source().size(); ++c) {
        if (auto img = h.image(c)) {
          for (State t : a.successors(q, *img)) out.add_transition(2 * q + f, c, 2 * t + 1);
        } else {
          out.add_transition(2 * q + f, c, 2 * q);
        }
      }
  }
  return reduce_buchi(out);
}

namespace {

FinAutomaton require_prefix_closed(const FinAutomaton& l, const char* what) {
  FinAutomaton a = canonicalize(l);
  if (!a.all_accepting()) throw Error(ErrorKind::NotPrefixClosed, std::string(what) + ": language is not prefix-closed");
  return a;
}

std::optional<State> step(const FinAutomaton& dfa, State q, Symbol s) {
  for (const Edge& e : dfa.edges(q))
    if (e.symbol == s) return e.target;
  return std::nullopt;
}

// Some u leads D from d and Y from its start to language-equivalent states.
bool pair_closes(const FinAutomaton& d_aut, State d, const FinAutomaton& y) {
  const std::size_t nd = d_aut.num_states();
  FinAutomaton joint(d_aut.alphabet(), nd + y.num_states());
  joint.set_all_accepting();
  for (const Transition& t : d_aut.transitions()) joint.add_transition(t.source, t.symbol, t.target);
  for (const Transition& t : y.transitions())
    joint.add_transition(static_cast<State>(nd + t.source), t.symbol, static_cast<State>(nd + t.target));
  const auto block = language_classes(joint);

  std::set<std::pair<State, State>> seen{{d, 0}};
  std::deque<std::pair<State, State>> queue{{d, 0}};
  while (!queue.empty()) {
    auto [p, r] = queue.front();
    queue.pop_front();
    if (block[p] == block[nd + r]) return true;
    for (const Edge& e : y.edges(r)) {
      // Y is included in the language of D from d, so D can follow.
      auto next = step(d_aut, p, e.symbol);
      if (next && seen.emplace(*next, e.target).second) queue.emplace_back(*next, e.target);
    }
  }
  return false;
}

}  // namespace

BuchiAutomaton abstract_behavior(const FinAutomaton& l, const Homomorphism& h) {
  return limit(image_automaton(h, require_prefix_closed(l, "abstract behavior")));
}

WccReport is_weakly_continuation_closed(const FinAutomaton& l, const Homomorphism& h) {
  const FinAutomaton a = require_prefix_closed(l, "weak continuation-closure");
  require_same_alphabet(a.alphabet(), h.source(), "weak continuation-closure");
  WccReport report;
  if (a.num_states() == 0) return report;
  const FinAutomaton d = image_automaton(h, a);

  // Synchronized pairs (q, d) in breadth-first order, with the word that
  // first reached each of them.
  std::map<std::pair<State, State>, std::size_t> index;
  std::vector<std::pair<State, State>> pairs;
  std::vector<Word> words;
  auto visit = [&](State q, State p, Word w) {
    if (index.emplace(std::pair(q, p), pairs.size()).second) {
      pairs.emplace_back(q, p);
      words.push_back(std::move(w));
    }
  };
  visit(a.initial().front(), d.initial().front(), {});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [q, p] = pairs[i];
    for (const Edge& e : a.edges(q)) {
      State next = p;
      if (auto img = h.image(e.symbol)) next = *step(d, p, *img);
      Word w = words[i];
      w.push_back(e.symbol);
      visit(e.target, next, std::move(w));
    }
  }

  std::map<State, FinAutomaton> images;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [q, p] = pairs[i];
    auto it = images.find(q);
    if (it == images.end()) it = images.emplace(q, image_automaton(h, rebase(a, q))).first;
    if (!pair_closes(d, p, it->second)) report.violations.push_back({q, p, words[i]});
  }
  report.closed = report.violations.empty();
  return report;
}

namespace {

FinAutomaton extend_at(const FinAutomaton& c, const std::vector<bool>& pad) {
  FinAutomaton out(c.alphabet().with_marker(), c.num_states());
  const Symbol marker = *out.alphabet().marker();
  for (State q : c.initial()) out.add_initial(q);
  for (State q = 0; q < c.num_states(); ++q) {
    out.set_accepting(q, c.accepting(q));
    if (pad[q]) out.add_transition(q, marker, q);
  }
  for (const Transition& t : c.transitions()) out.add_transition(t.source, t.symbol, t.target);
  return canonicalize(out);
}

}  // namespace

FinAutomaton compute_xtd(const FinAutomaton& l) {
  FinAutomaton c = canonicalize(l);
  std::vector<bool> pad(c.num_states());
  for (State q = 0; q < c.num_states(); ++q) pad[q] = c.accepting(q) && c.edges(q).empty();
  return extend_at(c, pad);
}

FinAutomaton compute_xtd(const FinAutomaton& l, const Homomorphism& h) {
  require_same_alphabet(l.alphabet(), h.source(), "extension");
  FinAutomaton c = canonicalize(l);
  // Trimmed, so every edge lies on an accepted path: h(L_q) = {eps} iff no
  // visible letter is reachable from q.
  std::vector<bool> visible(c.num_states(), false);
  for (State q = 0; q < c.num_states(); ++q)
    for (const Edge& e : c.edges(q))
      if (!h.hides(e.symbol)) visible[q] = true;
  visible = backward_closure(c, visible);
  std::vector<bool> pad(c.num_states());
  for (State q = 0; q < c.num_states(); ++q) pad[q] = c.accepting(q) && !visible[q];
  return extend_at(c, pad);
}

bool has_maximal_words(const FinAutomaton& l) {
  FinAutomaton c = canonicalize(l);
  for (State q = 0; q < c.num_states(); ++q)
    if (c.accepting(q) && c.edges(q).empty()) return true;
  return false;
}

Labeling hom_labeling(const Homomorphism& h) {
  std::vector<std::set<std::string>> props;
  for (Symbol s = 0; s < h.source().size(); ++s) {
    auto img = h.image(s);
    props.push_back({img ? h.target().token(*img) : std::string(kEpsilonToken)});
  }
  return Labeling(h.source(), std::move(props));
}

Verdict within_fairness_finitary(const FinAutomaton& l, const Labeling& labeling, const Formula& f) {
  require_same_alphabet(l.alphabet(), labeling.alphabet(), "within fairness");
  BuchiAutomaton system = deterministic_limit(compute_xtd(l));
  return is_relative_liveness(system, PropertySpec::from_formula(f, labeling.extended(std::string(kEpsilonToken))));
}

PreserveReport preserve_check(const FinAutomaton& l, const Homomorphism& h, const Formula& eta) {
  const FinAutomaton a = require_prefix_closed(l, "preservation");
  require_same_alphabet(a.alphabet(), h.source(), "preservation");
  if (!check_normal_form(eta, h.target(), NormalFormMode::ExtendedSigma))
    throw Error(ErrorKind::NotNormalForm, "formula is not in extended normal form over the target alphabet: " + to_string(eta));

  PreserveReport report;
  report.wcc = is_weakly_continuation_closed(a, h);
  report.equivalence_certified = report.wcc.closed;

  const FinAutomaton image = image_automaton(h, a);
  report.abstract_holds = within_fairness_finitary(image, canonical_labeling(h.target()), eta).holds;
  report.concrete_implies_abstract = !has_maximal_words(image);

  report.transformed = transform(eta, TransformMode::R);
  report.concrete_holds_plain = within_fairness_finitary(a, hom_labeling(h), report.transformed).holds;

  const Formula marked = transform(rename_atom(eta, kEpsilonToken, kMarkerToken), TransformMode::R);
  const Homomorphism lifted = h.lift_extension();
  BuchiAutomaton padded = limit(compute_xtd(a, h));
  report.concrete_holds =
      is_relative_liveness(padded, PropertySpec::from_formula(marked, hom_labeling(lifted))).holds;
  return report;
}

}  // namespace faircheck

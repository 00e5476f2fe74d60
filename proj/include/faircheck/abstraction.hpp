#pragma once

#include <optional>
#include <string>
#include <vector>

#include "faircheck/automaton.hpp"
#include "faircheck/formula.hpp"
#include "faircheck/lasso.hpp"
#include "faircheck/pltl.hpp"
#include "faircheck/relprops.hpp"

namespace faircheck {

/// Letter-to-letter-or-erasure map source -> target + {eps}.
class Homomorphism {
 public:
  Homomorphism(Alphabet source, Alphabet target, std::vector<std::optional<Symbol>> image);
  static Homomorphism identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  /// nullopt for an erased letter.
  std::optional<Symbol> image(Symbol s) const { return image_.at(s); }
  bool hides(Symbol s) const { return !image_.at(s).has_value(); }

  Word apply(std::span<const Symbol> word) const;

  /// Same map on the padded alphabets, sending the padding letter to itself.
  Homomorphism lift_extension() const;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<std::optional<Symbol>> image_;
};

/// Image of an omega-word; nullopt when the whole cycle is erased.
std::optional<LassoWord> apply_hom_lasso(const Homomorphism& h, const LassoWord& x);

/// Canonical automaton for h(L(a)).
FinAutomaton image_automaton(const Homomorphism& h, const FinAutomaton& a);

/// h^-1(L(a)); erased letters stutter.
FinAutomaton inverse_image_automaton(const Homomorphism& h, const FinAutomaton& a);
/// Accepts x iff h(x) is defined and in L(a).
BuchiAutomaton inverse_image_automaton(const Homomorphism& h, const BuchiAutomaton& a);

/// lim(h(L)) for prefix-closed L. Throws NotPrefixClosed.
BuchiAutomaton abstract_behavior(const FinAutomaton& l, const Homomorphism& h);

struct WccViolation {
  State concrete_state;  // state of canonical L
  State abstract_state;  // state of canonical h(L)
  Word word;             // shortest w in L reaching the pair
};

struct WccReport {
  bool closed = true;
  std::vector<WccViolation> violations;
};

/// Weak continuation-closure of h on prefix-closed L. Throws NotPrefixClosed.
WccReport is_weakly_continuation_closed(const FinAutomaton& l, const Homomorphism& h);

/// L + max(L).#*, over alphabet().with_marker().
FinAutomaton compute_xtd(const FinAutomaton& l);
/// L + {w in L | h(w\L) = {eps}}.#*.
FinAutomaton compute_xtd(const FinAutomaton& l, const Homomorphism& h);

/// True iff L has a word with no proper continuation in L.
bool has_maximal_words(const FinAutomaton& l);

/// a -> {h(a)}, erased letters -> {"eps"}.
Labeling hom_labeling(const Homomorphism& h);

/// lim(xtd(L)), lambda^eps |=_RL f.
Verdict within_fairness_finitary(const FinAutomaton& l, const Labeling& labeling, const Formula& f);

struct PreserveReport {
  WccReport wcc;
  bool abstract_holds = false;         // h(L), lambda_Sigma'^eps |=_RL eta
  bool concrete_holds = false;         // lim(xtd_h(L)), lambda_h' |=_RL R(eta[eps:=#])
  bool concrete_holds_plain = false;   // L, lambda_h^eps |=_RL R(eta), padding read as hidden
  bool equivalence_certified = false;  // == wcc.closed
  /// Without closure, a concrete success still transfers upward when h(L)
  /// has no maximal words.
  bool concrete_implies_abstract = false;
  Formula transformed = Formula::truth();  // R(eta)
};

/// eta must be in extended normal form over h's target. Throws
/// NotPrefixClosed, NotNormalForm.
PreserveReport preserve_check(const FinAutomaton& l, const Homomorphism& h, const Formula& eta);

}  // namespace faircheck

#pragma once

#include <set>
#include <string>
#include <vector>

#include "faircheck/automaton.hpp"
#include "faircheck/formula.hpp"
#include "faircheck/lasso.hpp"

namespace faircheck {

/// Total map from letters to the sets of atomic propositions they satisfy.
class Labeling {
 public:
  Labeling(Alphabet alphabet, std::vector<std::set<std::string>> propositions);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::set<std::string>& propositions(Symbol s) const { return props_.at(s); }
  bool holds(Symbol s, const std::string& proposition) const { return props_.at(s).count(proposition) > 0; }

  /// Labeling over alphabet().with_marker() that gives the padding letter
  /// the single proposition `marker_proposition` ("eps" for the
  /// epsilon-extension, "#" for the #-extension).
  Labeling extended(const std::string& marker_proposition) const;

 private:
  Alphabet alphabet_;
  std::vector<std::set<std::string>> props_;
};

/// Every letter labeled by itself. On an extended alphabet the padding
/// letter gets {"#"}.
Labeling canonical_labeling(const Alphabet& alphabet);

/// Negations only on atoms or on `true`, rewriting ->, <->, and pushing
/// negations through X, F, G, U and B by their dualities.
Formula to_positive_normal_form(const Formula& f);

/// Negations only on atoms or on `true`; no -> or <->.
bool is_positive(const Formula& f);

enum class NormalFormMode { Sigma, ExtendedSigma };

/// Sigma: positive with all atoms in the alphabet. ExtendedSigma: the atom
/// "eps" is also allowed, but only as the direct argument of G.
bool check_normal_form(const Formula& f, const Alphabet& alphabet, NormalFormMode mode);

enum class TransformMode { N, T, R };

/// Formula transformations for evaluating abstract properties on concrete
/// words where erased letters are labeled "eps".
///   N: every !a becomes !a & !eps.
///   T: structural rewrite that skips over eps positions.
///   R: T where each maximal pure Boolean subformula b becomes eps U N(b).
/// T and R throw NotNormalForm unless the input is positive with "eps" only
/// under G.
Formula transform(const Formula& f, TransformMode mode);

/// Truth of x, labeling |= f at the first position.
bool evaluate_lasso(const LassoWord& x, const Labeling& labeling, const Formula& f);

struct FormulaAutomata {
  BuchiAutomaton positive;  // {x | x |= f}
  BuchiAutomaton negative;  // {x | x |= !f}
};

/// Tableau translation of f and of its negation over the labeling's
/// alphabet. Both automata are reduced.
FormulaAutomata to_buchi(const Formula& f, const Labeling& labeling);
BuchiAutomaton tableau_automaton(const Formula& f, const Labeling& labeling);

}  // namespace faircheck

#include "faircheck/pltl.hpp"

#include "faircheck/error.hpp"

namespace faircheck {

Labeling::Labeling(Alphabet alphabet, std::vector<std::set<std::string>> propositions)
    : alphabet_(std::move(alphabet)), props_(std::move(propositions)) {
  if (props_.size() != alphabet_.size())
    throw Error(ErrorKind::InvalidArgument, "labeling must be total on the alphabet");
}

Labeling Labeling::extended(const std::string& marker_proposition) const {
  auto props = props_;
  props.push_back({marker_proposition});
  return Labeling(alphabet_.with_marker(), std::move(props));
}

Labeling canonical_labeling(const Alphabet& alphabet) {
  std::vector<std::set<std::string>> props;
  for (const auto& t : alphabet.tokens()) props.push_back({t});
  return Labeling(alphabet, std::move(props));
}

namespace {

Formula push_negation(const Formula& f, bool negate) {
  using F = Formula;
  switch (f.op()) {
    case Op::True:
    case Op::Atom: return negate ? F::negation(f) : f;
    case Op::Not: return push_negation(f.operand(), !negate);
    case Op::And: {
      F l = push_negation(f.left(), negate), r = push_negation(f.right(), negate);
      return negate ? F::disjunction(l, r) : F::conjunction(l, r);
    }
    case Op::Or: {
      F l = push_negation(f.left(), negate), r = push_negation(f.right(), negate);
      return negate ? F::conjunction(l, r) : F::disjunction(l, r);
    }
    case Op::Implies:
      if (negate) return F::conjunction(push_negation(f.left(), false), push_negation(f.right(), true));
      return F::disjunction(push_negation(f.left(), true), push_negation(f.right(), false));
    case Op::Iff: {
      F pl = push_negation(f.left(), false), nl = push_negation(f.left(), true);
      F pr = push_negation(f.right(), false), nr = push_negation(f.right(), true);
      if (negate) return F::disjunction(F::conjunction(pl, nr), F::conjunction(nl, pr));
      return F::disjunction(F::conjunction(pl, pr), F::conjunction(nl, nr));
    }
    case Op::Next: return F::next(push_negation(f.operand(), negate));
    case Op::Eventually:
      return negate ? F::always(push_negation(f.operand(), true)) : F::eventually(push_negation(f.operand(), false));
    case Op::Always:
      return negate ? F::eventually(push_negation(f.operand(), true)) : F::always(push_negation(f.operand(), false));
    case Op::Until:
      // !(a U b) == (!a) B b
      if (negate) return F::before(push_negation(f.left(), true), push_negation(f.right(), false));
      return F::until(push_negation(f.left(), false), push_negation(f.right(), false));
    case Op::Before:
      // !(a B b) == (!a) U b
      if (negate) return F::until(push_negation(f.left(), true), push_negation(f.right(), false));
      return F::before(push_negation(f.left(), false), push_negation(f.right(), false));
  }
  return f;
}

bool eps_only_under_always(const Formula& f, bool parent_is_always) {
  if (f.is_epsilon()) return parent_is_always;
  if (f.is_unary()) return eps_only_under_always(f.operand(), f.op() == Op::Always);
  if (f.is_binary()) return eps_only_under_always(f.left(), false) && eps_only_under_always(f.right(), false);
  return true;
}

void require_transformable(const Formula& f) {
  if (!is_positive(f))
    throw Error(ErrorKind::NotNormalForm, "formula is not in positive normal form: " + to_string(f));
  if (!eps_only_under_always(f, false))
    throw Error(ErrorKind::NotNormalForm, "'eps' may only occur as G eps: " + to_string(f));
}

Formula negate_hidden(const Formula& f) {
  using F = Formula;
  if (f.op() == Op::Not && f.operand().is_atom() && !f.operand().is_epsilon())
    return F::conjunction(f, F::negation(F::epsilon()));
  switch (f.op()) {
    case Op::Not: return F::negation(negate_hidden(f.operand()));
    case Op::Next: return F::next(negate_hidden(f.operand()));
    case Op::Eventually: return F::eventually(negate_hidden(f.operand()));
    case Op::Always: return F::always(negate_hidden(f.operand()));
    case Op::And: return F::conjunction(negate_hidden(f.left()), negate_hidden(f.right()));
    case Op::Or: return F::disjunction(negate_hidden(f.left()), negate_hidden(f.right()));
    case Op::Implies: return F::implication(negate_hidden(f.left()), negate_hidden(f.right()));
    case Op::Iff: return F::equivalence(negate_hidden(f.left()), negate_hidden(f.right()));
    case Op::Until: return F::until(negate_hidden(f.left()), negate_hidden(f.right()));
    case Op::Before: return F::before(negate_hidden(f.left()), negate_hidden(f.right()));
    default: return f;
  }
}

// One rewrite step of T; `sub` transforms the immediate subformulas, which
// is T itself or, for R, the Boolean-wrapping variant.
template <typename Sub>
Formula rewrite(const Formula& f, Sub&& sub) {
  using F = Formula;
  const F eps = F::epsilon();
  switch (f.op()) {
    case Op::True:
    case Op::Atom: return f;
    case Op::Not:
      if (f.operand().op() == Op::True || f.operand().is_epsilon()) return f;
      return F::conjunction(f, F::negation(eps));
    case Op::And: return F::conjunction(sub(f.left()), sub(f.right()));
    case Op::Or: return F::disjunction(sub(f.left()), sub(f.right()));
    case Op::Implies: return F::implication(sub(f.left()), sub(f.right()));
    case Op::Iff: return F::equivalence(sub(f.left()), sub(f.right()));
    case Op::Until: return F::until(F::disjunction(eps, sub(f.left())), sub(f.right()));
    case Op::Before: return F::before(sub(f.left()), sub(f.right()));
    case Op::Eventually: return F::eventually(sub(f.operand()));
    case Op::Always: return F::always(F::disjunction(eps, sub(f.operand())));
    case Op::Next:
      return F::until(eps, F::conjunction(F::negation(eps), F::next(F::until(eps, sub(f.operand())))));
  }
  return f;
}

Formula transform_t(const Formula& f) {
  return rewrite(f, [](const Formula& g) { return transform_t(g); });
}

Formula transform_r(const Formula& f) {
  if (f.is_epsilon()) return f;
  if (f.is_pure_boolean()) return Formula::until(Formula::epsilon(), negate_hidden(f));
  return rewrite(f, [](const Formula& g) { return transform_r(g); });
}

}  // namespace

Formula to_positive_normal_form(const Formula& f) { return push_negation(f, false); }

bool is_positive(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom: return true;
    case Op::Not: return f.operand().op() == Op::True || f.operand().op() == Op::Atom;
    case Op::Implies:
    case Op::Iff: return false;
    default: break;
  }
  if (f.is_unary()) return is_positive(f.operand());
  return is_positive(f.left()) && is_positive(f.right());
}

bool check_normal_form(const Formula& f, const Alphabet& alphabet, NormalFormMode mode) {
  if (!is_positive(f)) return false;
  for (const auto& a : f.atoms()) {
    if (a == kEpsilonToken) {
      if (mode != NormalFormMode::ExtendedSigma) return false;
      continue;
    }
    if (!alphabet.contains(a)) return false;
  }
  return mode == NormalFormMode::Sigma || eps_only_under_always(f, false);
}

Formula transform(const Formula& f, TransformMode mode) {
  switch (mode) {
    case TransformMode::N: return negate_hidden(f);
    case TransformMode::T: require_transformable(f); return transform_t(f);
    case TransformMode::R: require_transformable(f); return transform_r(f);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Lasso evaluation: one truth vector per subformula over the positions
// 0 .. |stem|+|cycle|-1, the last position looping back to |stem|.

namespace {

class LassoEvaluator {
 public:
  LassoEvaluator(const LassoWord& x, const Labeling& labeling) : x_(x), labeling_(labeling), n_(x.size()) {
    if (x.cycle.empty()) throw Error(ErrorKind::InvalidArgument, "lasso cycle must not be empty");
  }

  std::vector<char> eval(const Formula& f) const {
    switch (f.op()) {
      case Op::True: return std::vector<char>(n_, 1);
      case Op::Atom: {
        std::vector<char> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = labeling_.holds(letter(i), f.name());
        return v;
      }
      case Op::Not: return negate(eval(f.operand()));
      case Op::And: return combine(eval(f.left()), eval(f.right()), [](bool a, bool b) { return a && b; });
      case Op::Or: return combine(eval(f.left()), eval(f.right()), [](bool a, bool b) { return a || b; });
      case Op::Implies: return combine(eval(f.left()), eval(f.right()), [](bool a, bool b) { return !a || b; });
      case Op::Iff: return combine(eval(f.left()), eval(f.right()), [](bool a, bool b) { return a == b; });
      case Op::Next: {
        auto v = eval(f.operand());
        std::vector<char> r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = v[succ(i)];
        return r;
      }
      case Op::Until: return until(eval(f.left()), eval(f.right()));
      case Op::Before: return negate(until(negate(eval(f.left())), eval(f.right())));
      case Op::Eventually: return until(std::vector<char>(n_, 1), eval(f.operand()));
      case Op::Always: return negate(until(std::vector<char>(n_, 1), negate(eval(f.operand()))));
    }
    return {};
  }

 private:
  Symbol letter(std::size_t i) const { return x_.at(i); }
  std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : x_.stem.size(); }

  static std::vector<char> negate(std::vector<char> v) {
    for (auto& b : v) b = !b;
    return v;
  }
  template <typename Fn>
  static std::vector<char> combine(const std::vector<char>& a, const std::vector<char>& b, Fn fn) {
    std::vector<char> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fn(a[i], b[i]);
    return r;
  }

  // Least fixpoint of u = hold | (keep & X u).
  std::vector<char> until(const std::vector<char>& keep, const std::vector<char>& hold) const {
    std::vector<char> u(n_, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = n_; k-- > 0;) {
        char v = hold[k] || (keep[k] && u[succ(k)]);
        if (v != u[k]) {
          u[k] = v;
          changed = true;
        }
      }
    }
    return u;
  }

  const LassoWord& x_;
  const Labeling& labeling_;
  std::size_t n_;
};

}  // namespace

bool evaluate_lasso(const LassoWord& x, const Labeling& labeling, const Formula& f) {
  return LassoEvaluator(x, labeling).eval(f)[0] != 0;
}

}  // namespace faircheck

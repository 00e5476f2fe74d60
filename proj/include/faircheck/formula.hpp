#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace faircheck {

enum class Op {
  True,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Until,
  Before,
  Eventually,
  Always,
};

/// Immutable PLTL syntax tree with shared subterms.
class Formula {
 public:
  static Formula truth();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);
  static Formula next(Formula f);
  static Formula until(Formula l, Formula r);
  static Formula before(Formula l, Formula r);
  static Formula eventually(Formula f);
  static Formula always(Formula f);
  /// The reserved proposition that marks hidden (erased) positions.
  static Formula epsilon();

  Op op() const noexcept;
  const std::string& name() const;  // Atom only
  const Formula& operand() const;   // unary operators
  const Formula& left() const;      // binary operators
  const Formula& right() const;

  bool is_atom() const noexcept { return op() == Op::Atom; }
  bool is_epsilon() const noexcept;
  bool is_unary() const noexcept;
  bool is_binary() const noexcept;
  bool is_temporal_op() const noexcept;
  /// No temporal operator anywhere in the tree.
  bool is_pure_boolean() const;
  std::size_t depth() const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, Formula* l, Formula* r);

  std::shared_ptr<const Node> node_;
};

/// Throws Error(Syntax) with the 1-based column of the offending token.
Formula parse_formula(std::string_view text);
/// Minimal parentheses; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Same formula with every atom named `from` renamed to `to`.
Formula rename_atom(const Formula& f, std::string_view from, std::string_view to);

}  // namespace faircheck

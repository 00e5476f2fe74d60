#include "faircheck/formula.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "faircheck/alphabet.hpp"
#include "faircheck/error.hpp"

namespace faircheck {

struct Formula::Node {
  Op op;
  std::string name;
  std::optional<Formula> left_formula;
  std::optional<Formula> right_formula;
};

Formula Formula::make(Op op, std::string name, Formula* l, Formula* r) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  if (l) node->left_formula = *l;
  if (r) node->right_formula = *r;
  return Formula(std::move(node));
}

Formula Formula::truth() { return make(Op::True, {}, nullptr, nullptr); }
Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty atom name");
  return make(Op::Atom, std::move(name), nullptr, nullptr);
}
Formula Formula::epsilon() { return atom(std::string(kEpsilonToken)); }
Formula Formula::negation(Formula f) { return make(Op::Not, {}, &f, nullptr); }
Formula Formula::conjunction(Formula l, Formula r) { return make(Op::And, {}, &l, &r); }
Formula Formula::disjunction(Formula l, Formula r) { return make(Op::Or, {}, &l, &r); }
Formula Formula::implication(Formula l, Formula r) { return make(Op::Implies, {}, &l, &r); }
Formula Formula::equivalence(Formula l, Formula r) { return make(Op::Iff, {}, &l, &r); }
Formula Formula::next(Formula f) { return make(Op::Next, {}, &f, nullptr); }
Formula Formula::until(Formula l, Formula r) { return make(Op::Until, {}, &l, &r); }
Formula Formula::before(Formula l, Formula r) { return make(Op::Before, {}, &l, &r); }
Formula Formula::eventually(Formula f) { return make(Op::Eventually, {}, &f, nullptr); }
Formula Formula::always(Formula f) { return make(Op::Always, {}, &f, nullptr); }

Op Formula::op() const noexcept { return node_->op; }

const std::string& Formula::name() const {
  if (op() != Op::Atom) throw Error(ErrorKind::InvalidArgument, "name() on non-atom");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (!is_unary()) throw Error(ErrorKind::InvalidArgument, "operand() on non-unary formula");
  return *node_->left_formula;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw Error(ErrorKind::InvalidArgument, "left() on non-binary formula");
  return *node_->left_formula;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw Error(ErrorKind::InvalidArgument, "right() on non-binary formula");
  return *node_->right_formula;
}

bool Formula::is_epsilon() const noexcept { return op() == Op::Atom && node_->name == kEpsilonToken; }

bool Formula::is_unary() const noexcept {
  switch (op()) {
    case Op::Not:
    case Op::Next:
    case Op::Eventually:
    case Op::Always: return true;
    default: return false;
  }
}

bool Formula::is_binary() const noexcept {
  switch (op()) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
    case Op::Until:
    case Op::Before: return true;
    default: return false;
  }
}

bool Formula::is_temporal_op() const noexcept {
  switch (op()) {
    case Op::Next:
    case Op::Until:
    case Op::Before:
    case Op::Eventually:
    case Op::Always: return true;
    default: return false;
  }
}

bool Formula::is_pure_boolean() const {
  if (is_temporal_op()) return false;
  if (is_unary()) return operand().is_pure_boolean();
  if (is_binary()) return left().is_pure_boolean() && right().is_pure_boolean();
  return true;
}

std::size_t Formula::depth() const {
  if (is_unary()) return 1 + operand().depth();
  if (is_binary()) return 1 + std::max(left().depth(), right().depth());
  return 0;
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->is_atom()) out.insert(f->name());
    if (f->is_unary()) stack.push_back(&f->operand());
    if (f->is_binary()) {
      stack.push_back(&f->left());
      stack.push_back(&f->right());
    }
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.is_atom()) return a.name() == b.name();
  if (a.is_unary()) return a.operand() == b.operand();
  if (a.is_binary()) return a.left() == b.left() && a.right() == b.right();
  return true;
}

Formula rename_atom(const Formula& f, std::string_view from, std::string_view to) {
  switch (f.op()) {
    case Op::True: return f;
    case Op::Atom: return f.name() == from ? Formula::atom(std::string(to)) : f;
    case Op::Not: return Formula::negation(rename_atom(f.operand(), from, to));
    case Op::Next: return Formula::next(rename_atom(f.operand(), from, to));
    case Op::Eventually: return Formula::eventually(rename_atom(f.operand(), from, to));
    case Op::Always: return Formula::always(rename_atom(f.operand(), from, to));
    case Op::And: return Formula::conjunction(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
    case Op::Or: return Formula::disjunction(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
    case Op::Implies: return Formula::implication(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
    case Op::Iff: return Formula::equivalence(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
    case Op::Until: return Formula::until(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
    case Op::Before: return Formula::before(rename_atom(f.left(), from, to), rename_atom(f.right(), from, to));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Parsing. Precedence, tightest first: ! X F G, then U B (right assoc),
// &, |, -> (right assoc), <->.

namespace {

enum class Tok { Ident, True, Not, And, Or, Implies, Iff, Next, Until, Before, Eventually, Always, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "X") kind = Tok::Next;
      else if (word == "F") kind = Tok::Eventually;
      else if (word == "G") kind = Tok::Always;
      else if (word == "U") kind = Tok::Until;
      else if (word == "B") kind = Tok::Before;
      out.push_back({kind, word, col});
      i = j;
      continue;
    }
    if (c == '#') {
      out.push_back({Tok::Ident, "#", col});
      ++i;
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->", col});
      i += 3;
      continue;
    }
    if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, "->", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '!': kind = Tok::Not; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw Error(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", 1, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(text.size()) + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse() {
    Formula f = iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Syntax, message, 1, peek().column);
  }

  Formula iff() {
    Formula f = implies();
    while (accept(Tok::Iff)) f = Formula::equivalence(f, implies());
    return f;
  }
  Formula implies() {
    Formula f = disjunction();
    if (accept(Tok::Implies)) return Formula::implication(f, implies());
    return f;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = binary_temporal();
    while (accept(Tok::And)) f = Formula::conjunction(f, binary_temporal());
    return f;
  }
  Formula binary_temporal() {
    Formula f = unary();
    if (accept(Tok::Until)) return Formula::until(f, binary_temporal());
    if (accept(Tok::Before)) return Formula::before(f, binary_temporal());
    return f;
  }
  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (accept(Tok::Next)) return Formula::next(unary());
    if (accept(Tok::Eventually)) return Formula::eventually(unary());
    if (accept(Tok::Always)) return Formula::always(unary());
    return primary();
  }
  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: ++pos_; return Formula::truth();
      case Tok::Ident: ++pos_; return Formula::atom(t.text);
      case Tok::LParen: {
        ++pos_;
        Formula f = iff();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return f;
      }
      case Tok::End: fail("unexpected end of formula");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until:
    case Op::Before: return 5;
    case Op::Not:
    case Op::Next:
    case Op::Eventually:
    case Op::Always: return 6;
    case Op::True:
    case Op::Atom: return 7;
  }
  return 7;
}

bool right_associative(Op op) { return op == Op::Implies || op == Op::Until || op == Op::Before; }

const char* symbol_of(Op op) {
  switch (op) {
    case Op::Iff: return "<->";
    case Op::Implies: return "->";
    case Op::Or: return "|";
    case Op::And: return "&";
    case Op::Until: return "U";
    case Op::Before: return "B";
    case Op::Not: return "!";
    case Op::Next: return "X";
    case Op::Eventually: return "F";
    case Op::Always: return "G";
    default: return "";
  }
}

void print(const Formula& f, std::string& out) {
  auto wrapped = [&out](const Formula& g, bool parens) {
    if (parens) out += '(';
    print(g, out);
    if (parens) out += ')';
  };
  const int p = precedence(f.op());
  switch (f.op()) {
    case Op::True: out += "true"; return;
    case Op::Atom: out += f.name(); return;
    case Op::Not:
      out += '!';
      wrapped(f.operand(), precedence(f.operand().op()) < p);
      return;
    case Op::Next:
    case Op::Eventually:
    case Op::Always:
      out += symbol_of(f.op());
      out += ' ';
      wrapped(f.operand(), precedence(f.operand().op()) < p);
      return;
    default: break;
  }
  const int pl = precedence(f.left().op());
  const int pr = precedence(f.right().op());
  const bool rassoc = right_associative(f.op());
  wrapped(f.left(), rassoc ? pl <= p : pl < p);
  out += ' ';
  out += symbol_of(f.op());
  out += ' ';
  wrapped(f.right(), rassoc ? pr < p : pr <= p);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace faircheck

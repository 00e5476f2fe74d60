#include "faircheck/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "faircheck/error.hpp"

namespace faircheck {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on whitespace, with 1-based columns.
std::vector<Line> lex(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    const bool comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
    if (!line.tokens.empty() && !comment) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& message, int line, int column) {
  throw Error(ErrorKind::Syntax, message, line, column);
}

// Splits "key:" off the first token. Accepts "key:" and "key: value".
std::string key_of(Line& line) {
  Token& first = line.tokens.front();
  auto colon = first.text.find(':');
  if (colon == std::string::npos) fail("expected 'keyword:' at start of line", line.number, first.column);
  std::string key = first.text.substr(0, colon);
  std::string rest = first.text.substr(colon + 1);
  if (rest.empty()) {
    line.tokens.erase(line.tokens.begin());
  } else {
    first.text = rest;
    first.column += static_cast<int>(colon) + 1;
  }
  return key;
}

}  // namespace

AutomatonFile parse_automaton(std::string_view text) {
  std::vector<Line> lines = lex(text);
  std::optional<Line> alphabet_line, acceptance_line, states_line, initial_line, accepting_line;
  std::vector<Line> trans_lines;
  auto once = [](std::optional<Line>& slot, Line&& line, const std::string& key) {
    if (slot) fail("duplicate '" + key + ":' line", line.number, 1);
    slot = std::move(line);
  };
  for (Line& line : lines) {
    std::string key = key_of(line);
    if (key == "alphabet") once(alphabet_line, std::move(line), key);
    else if (key == "acceptance") once(acceptance_line, std::move(line), key);
    else if (key == "states") once(states_line, std::move(line), key);
    else if (key == "initial") once(initial_line, std::move(line), key);
    else if (key == "accepting") once(accepting_line, std::move(line), key);
    else if (key == "trans") trans_lines.push_back(std::move(line));
    else fail("unknown keyword '" + key + "'", line.number, 1);
  }
  const int eof = lines.empty() ? 1 : lines.back().number + 1;
  if (!alphabet_line) fail("missing 'alphabet:' line", eof, 1);

  // Alphabet.
  std::vector<std::string> letters;
  bool marker = false;
  for (std::size_t i = 0; i < alphabet_line->tokens.size(); ++i) {
    const Token& t = alphabet_line->tokens[i];
    if (t.text == kMarkerToken) {
      if (i + 1 != alphabet_line->tokens.size())
        fail("'#' may only appear as the last letter", alphabet_line->number, t.column);
      marker = true;
      continue;
    }
    if (t.text == kEpsilonToken) fail("'eps' is reserved", alphabet_line->number, t.column);
    letters.push_back(t.text);
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(letters);
  } catch (const Error& e) {
    fail(e.what(), alphabet_line->number, 1);
  }
  if (marker) alphabet = alphabet.with_marker();
  if (!states_line) fail("missing 'states:' line", eof, 1);
  if (!initial_line) fail("missing 'initial:' line", eof, 1);

  bool buchi = false;
  if (acceptance_line) {
    if (acceptance_line->tokens.size() != 1) fail("expected 'acceptance: buchi' or 'acceptance: finite'", acceptance_line->number, 1);
    const Token& t = acceptance_line->tokens.front();
    if (t.text == "buchi") buchi = true;
    else if (t.text != "finite") fail("unknown acceptance '" + t.text + "'", acceptance_line->number, t.column);
  }

  std::map<std::string, State> index;
  std::vector<std::string> names;
  for (const Token& t : states_line->tokens) {
    if (!index.emplace(t.text, static_cast<State>(names.size())).second)
      fail("duplicate state '" + t.text + "'", states_line->number, t.column);
    names.push_back(t.text);
  }
  auto state = [&](const Line& line, const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) fail("unknown state '" + t.text + "'", line.number, t.column);
    return it->second;
  };

  FinAutomaton a(alphabet, names.size());
  a.set_names(names);
  // Only the stateless automaton (empty language) may lack an initial state.
  if (initial_line->tokens.empty() && !names.empty()) fail("no initial state", initial_line->number, 1);
  for (const Token& t : initial_line->tokens) a.add_initial(state(*initial_line, t));
  if (accepting_line) {
    for (const Token& t : accepting_line->tokens) a.set_accepting(state(*accepting_line, t));
  } else if (buchi) {
    fail("Büchi automaton needs an 'accepting:' line", eof, 1);
  } else {
    a.set_all_accepting();
  }
  for (const Line& line : trans_lines) {
    if (line.tokens.size() != 3) fail("expected 'trans: source letter target'", line.number, 1);
    const Token& letter = line.tokens[1];
    auto symbol = alphabet.find(letter.text);
    if (!symbol) fail("letter '" + letter.text + "' is not in the alphabet", line.number, letter.column);
    a.add_transition(state(line, line.tokens[0]), *symbol, state(line, line.tokens[2]));
  }

  AutomatonFile file;
  file.buchi = buchi;
  if (buchi) file.omega = a.reinterpret<BuchiAcceptance>();
  else file.finite = std::move(a);
  return file;
}

namespace {

template <typename A>
std::string print_common(const A& a, bool buchi, bool print_accepting) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& t : a.alphabet().tokens()) out << ' ' << t;
  out << '\n';
  if (buchi) out << "acceptance: buchi\n";
  out << "states:";
  for (State q = 0; q < a.num_states(); ++q) out << ' ' << a.name(q);
  out << "\ninitial:";
  for (State q : a.initial()) out << ' ' << a.name(q);
  out << '\n';
  if (print_accepting) {
    out << "accepting:";
    for (State q = 0; q < a.num_states(); ++q)
      if (a.accepting(q)) out << ' ' << a.name(q);
    out << '\n';
  }
  for (const Transition& t : a.transitions())
    out << "trans: " << a.name(t.source) << ' ' << a.alphabet().token(t.symbol) << ' ' << a.name(t.target) << '\n';
  return out.str();
}

}  // namespace

std::string print_automaton(const FinAutomaton& a) { return print_common(a, false, !a.all_accepting()); }
std::string print_automaton(const BuchiAutomaton& a) { return print_common(a, true, true); }

Homomorphism parse_homomorphism(std::string_view text, const Alphabet& source) {
  std::vector<std::optional<std::string>> image(source.size());
  std::vector<bool> seen(source.size(), false);
  std::vector<std::string> targets;
  int last = 0;
  for (const Line& line : lex(text)) {
    last = line.number;
    if (line.tokens.size() != 3 || line.tokens[1].text != "->")
      fail("expected 'letter -> letter' or 'letter -> eps'", line.number, 1);
    const Token& from = line.tokens[0];
    const Token& to = line.tokens[2];
    auto s = source.find(from.text);
    if (!s) fail("letter '" + from.text + "' is not in the source alphabet", line.number, from.column);
    if (seen[*s]) fail("letter '" + from.text + "' mapped twice", line.number, from.column);
    seen[*s] = true;
    if (to.text == kEpsilonToken) continue;
    if (to.text == kMarkerToken) fail("'#' is reserved", line.number, to.column);
    image[*s] = to.text;
    if (std::find(targets.begin(), targets.end(), to.text) == targets.end()) targets.push_back(to.text);
  }
  for (Symbol s = 0; s < source.size(); ++s)
    if (!seen[s]) fail("letter '" + source.token(s) + "' has no image", last + 1, 1);
  if (targets.empty()) fail("every letter is erased; the target alphabet would be empty", last + 1, 1);
  Alphabet target(targets);
  std::vector<std::optional<Symbol>> symbols(source.size());
  for (Symbol s = 0; s < source.size(); ++s)
    if (image[s]) symbols[s] = target.symbol(*image[s]);
  return Homomorphism(source, target, std::move(symbols));
}

std::string print_homomorphism(const Homomorphism& h) {
  std::string out;
  for (Symbol s = 0; s < h.source().size(); ++s) {
    auto img = h.image(s);
    out += h.source().token(s) + " -> " + (img ? h.target().token(*img) : std::string(kEpsilonToken)) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace faircheck

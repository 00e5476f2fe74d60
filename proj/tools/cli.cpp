#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include "faircheck/abstraction.hpp"
#include "faircheck/buchi.hpp"
#include "faircheck/error.hpp"
#include "faircheck/finitary.hpp"
#include "faircheck/io.hpp"
#include "faircheck/pltl.hpp"
#include "faircheck/relprops.hpp"
#include "faircheck/synthesis.hpp"

namespace faircheck::cli {

namespace {

using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Collected per invocation: inputs with digests, the result body and the
// human-readable lines.
struct Session {
  json inputs = json::object();
  json result = json::object();
  std::ostringstream text;

  std::string load(const std::string& role, const std::string& path) {
    std::string content = read_file(path);
    inputs[role] = {{"path", path}, {"fnv1a64", fnv1a(content)}};
    return content;
  }

  AutomatonFile automaton(const std::string& role, const std::string& path) {
    std::string content = load(role, path);
    try {
      return parse_automaton(content);
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + e.what());
    }
  }

  Homomorphism homomorphism(const std::string& path, const Alphabet& source) {
    std::string content = load("hom", path);
    try {
      return parse_homomorphism(content, source);
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + e.what());
    }
  }

  Formula formula(const std::string& text) {
    inputs["formula"] = text;
    try {
      return parse_formula(text);
    } catch (const Error& e) {
      throw Error(e.kind(), "formula:" + std::string(e.what()));
    }
  }
};

const char* verdict_word(bool holds) { return holds ? "holds" : "fails"; }

std::string show_word(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("<empty>") : alphabet.decode(w);
}

json witness_json(const Alphabet& alphabet, const Witness& w) {
  if (const Word* word = std::get_if<Word>(&w)) return {{"kind", "prefix"}, {"word", alphabet.decode(*word)}};
  const LassoWord& x = std::get<LassoWord>(w);
  return {{"kind", "lasso"},
          {"stem", alphabet.decode(x.stem)},
          {"cycle", alphabet.decode(x.cycle)},
          {"lasso", format_lasso(x, alphabet)}};
}

std::string witness_text(const Alphabet& alphabet, const Witness& w) {
  if (const Word* word = std::get_if<Word>(&w)) return "prefix " + show_word(alphabet, *word);
  return "lasso " + format_lasso(std::get<LassoWord>(w), alphabet);
}

int report_verdict(Session& s, const std::string& what, const Alphabet& alphabet, const Verdict& v) {
  s.result["check"] = what;
  s.result["holds"] = v.holds;
  s.text << what << ": " << verdict_word(v.holds) << '\n';
  if (v.witness) {
    s.result["witness"] = witness_json(alphabet, *v.witness);
    s.text << "witness: " << witness_text(alphabet, *v.witness) << '\n';
  }
  return v.holds ? kHolds : kFails;
}

// The omega-language of a system file: Büchi files as given, finitary
// files through their limit.
BuchiAutomaton behavior(const AutomatonFile& f) { return f.buchi ? f.omega : limit(f.finite); }

FinAutomaton finitary(const AutomatonFile& f, const std::string& path) {
  if (f.buchi) throw Error(ErrorKind::InvalidArgument, path + ": expected a finitary automaton or transition system");
  return f.finite;
}

// Names of the file's states reached by w.
std::vector<std::string> reached(const FinAutomaton& a, const Word& w) {
  std::set<State> cur(a.initial().begin(), a.initial().end());
  for (Symbol c : w) {
    std::set<State> next;
    for (State q : cur)
      for (State t : a.successors(q, c)) next.insert(t);
    cur = std::move(next);
  }
  std::vector<std::string> names;
  for (State q : cur) names.push_back(a.name(q));
  return names;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

struct Options {
  bool json = false;
  bool no_timing = false;
  std::string kind;
  std::string system, sub, property, complement, hom, impl, formula, mode, lasso, alphabet;
  std::size_t max_len = 0;
};

PropertySpec property_of(Session& s, const Options& o, const Alphabet& alphabet) {
  if (!o.formula.empty()) return PropertySpec::from_formula(s.formula(o.formula), canonical_labeling(alphabet));
  if (o.property.empty() || o.complement.empty())
    throw Error(ErrorKind::InvalidArgument, "give --formula, or both --property and --complement");
  auto pos = s.automaton("property", o.property);
  auto neg = s.automaton("complement", o.complement);
  if (!pos.buchi || !neg.buchi) throw Error(ErrorKind::InvalidArgument, "property automata must be Büchi automata");
  require_same_alphabet(alphabet, pos.omega.alphabet(), "property");
  require_same_alphabet(alphabet, neg.omega.alphabet(), "complement");
  return {pos.omega, neg.omega};
}

Alphabet alphabet_of(Session& s, const Options& o) {
  if (!o.system.empty()) return s.automaton("system", o.system).alphabet();
  if (o.alphabet.empty()) throw Error(ErrorKind::InvalidArgument, "give --system or --alphabet");
  std::istringstream in(o.alphabet);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return Alphabet(tokens);
}

int cmd_check(Session& s, const Options& o) {
  auto sys = s.automaton("system", o.system);
  BuchiAutomaton system = behavior(sys);
  PropertySpec p = property_of(s, o, system.alphabet());
  if (o.kind == "rl") return report_verdict(s, "relative liveness", system.alphabet(), is_relative_liveness(system, p));
  if (o.kind == "rs") return report_verdict(s, "relative safety", system.alphabet(), is_relative_safety(system, p));
  return report_verdict(s, "satisfaction", system.alphabet(), satisfies(system, p));
}

int cmd_machine_closed(Session& s, const Options& o) {
  BuchiAutomaton system = behavior(s.automaton("system", o.system));
  BuchiAutomaton sub = behavior(s.automaton("sub", o.sub));
  return report_verdict(s, "machine closure", system.alphabet(), is_machine_closed(system, sub));
}

int cmd_safety_class(Session& s, const Options& o) {
  Alphabet alphabet = alphabet_of(s, o);
  bool safety = is_safety_property(property_of(s, o, alphabet));
  s.result["check"] = "safety property";
  s.result["holds"] = safety;
  s.text << "safety property: " << (safety ? "yes" : "no") << '\n';
  return safety ? kHolds : kFails;
}

int cmd_abstract(Session& s, const Options& o) {
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  Homomorphism h = s.homomorphism(o.hom, l.alphabet());
  abstract_behavior(l, h);  // validates prefix-closedness
  std::string aut = print_automaton(image_automaton(h, l));
  s.result["automaton"] = aut;
  s.text << aut;
  return kHolds;
}

int cmd_wcc(Session& s, const Options& o) {
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  Homomorphism h = s.homomorphism(o.hom, l.alphabet());
  WccReport r = is_weakly_continuation_closed(l, h);
  s.result["check"] = "weak continuation-closure";
  s.result["holds"] = r.closed;
  json violations = json::array();
  s.text << "weak continuation-closure: " << verdict_word(r.closed) << '\n';
  for (const auto& v : r.violations) {
    auto names = reached(l, v.word);
    violations.push_back({{"word", l.alphabet().decode(v.word)},
                          {"concrete_state", v.concrete_state},
                          {"abstract_state", v.abstract_state},
                          {"reached", names}});
    s.text << "violation: after " << show_word(l.alphabet(), v.word) << " (concrete " << v.concrete_state << " = {"
           << join(names, ", ") << "}, abstract " << v.abstract_state << ")\n";
  }
  s.result["violations"] = violations;
  return r.closed ? kHolds : kFails;
}

int cmd_preserve(Session& s, const Options& o) {
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  Homomorphism h = s.homomorphism(o.hom, l.alphabet());
  PreserveReport r = preserve_check(l, h, s.formula(o.formula));
  s.result["transformed"] = to_string(r.transformed);
  s.result["wcc"] = r.wcc.closed;
  s.result["abstract_holds"] = r.abstract_holds;
  s.result["concrete_holds"] = r.concrete_holds;
  s.result["concrete_holds_plain"] = r.concrete_holds_plain;
  s.result["equivalence_certified"] = r.equivalence_certified;
  s.result["concrete_implies_abstract"] = r.concrete_implies_abstract;
  s.text << "R(formula): " << to_string(r.transformed) << '\n'
         << "weak continuation-closure: " << verdict_word(r.wcc.closed) << '\n'
         << "abstract within fairness: " << verdict_word(r.abstract_holds) << '\n'
         << "concrete within fairness: " << verdict_word(r.concrete_holds) << '\n'
         << "concrete within fairness, padding read as hidden: " << verdict_word(r.concrete_holds_plain) << '\n';
  if (r.equivalence_certified) {
    s.text << "equivalence: certified\n";
  } else {
    s.text << "equivalence: not certified\n";
    if (r.concrete_implies_abstract) s.text << "note: a concrete success still implies the abstract one\n";
  }
  return r.equivalence_certified ? kHolds : kFails;
}

int cmd_transform(Session& s, const Options& o) {
  Formula f = s.formula(o.formula);
  Formula g = o.mode == "pnf" ? to_positive_normal_form(f)
              : o.mode == "N" ? transform(f, TransformMode::N)
              : o.mode == "T" ? transform(f, TransformMode::T)
                              : transform(f, TransformMode::R);
  s.result["mode"] = o.mode;
  s.result["formula"] = to_string(g);
  s.text << to_string(g) << '\n';
  return kHolds;
}

int cmd_xtd(Session& s, const Options& o) {
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  FinAutomaton x = o.hom.empty() ? compute_xtd(l) : compute_xtd(l, s.homomorphism(o.hom, l.alphabet()));
  std::string aut = print_automaton(x);
  s.result["automaton"] = aut;
  s.text << aut;
  return kHolds;
}

int cmd_synthesize(Session& s, const Options& o) {
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  PropertySpec p = property_of(s, o, l.alphabet());
  Verdict v = is_relative_liveness(limit(l), p);
  if (!v.holds) return report_verdict(s, "relative liveness", l.alphabet(), v);
  FairLts impl = synthesize_fair_impl(l, p);
  std::string aut = "# fairness marks are the accepting states\n" + print_automaton(impl.fair_automaton());
  s.result["automaton"] = aut;
  s.result["states"] = impl.underlying.num_states();
  s.text << aut;
  return kHolds;
}

int cmd_verify_impl(Session& s, const Options& o) {
  auto impl_file = s.automaton("impl", o.impl);
  if (!impl_file.buchi) throw Error(ErrorKind::InvalidArgument, o.impl + ": implementation must list its marks as Büchi states");
  FinAutomaton l = finitary(s.automaton("system", o.system), o.system);
  PropertySpec p = property_of(s, o, l.alphabet());
  FairLts impl{impl_file.omega.reinterpret<FiniteAcceptance>(), {}};
  for (State q = 0; q < impl_file.omega.num_states(); ++q) impl.marks.push_back(impl_file.omega.accepting(q));
  impl.underlying.set_all_accepting();
  return report_verdict(s, "fair implementation", l.alphabet(), verify_fair_impl(impl, l, p));
}

int cmd_eval(Session& s, const Options& o) {
  Alphabet alphabet = alphabet_of(s, o);
  LassoWord x = parse_lasso(o.lasso, alphabet);
  s.inputs["lasso"] = o.lasso;
  bool value = evaluate_lasso(x, canonical_labeling(alphabet), s.formula(o.formula));
  s.result["check"] = "evaluation";
  s.result["holds"] = value;
  s.text << "evaluation: " << (value ? "true" : "false") << '\n';
  return value ? kHolds : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative liveness, abstraction and fairness checks on finite-state systems", "faircheck"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print a JSON report");
  app.add_flag("--no-timing", o.no_timing, "Omit timing from the JSON report");
  app.fallthrough();

  auto sys = [&](CLI::App* c, bool required = true) {
    auto opt = c->add_option("--system", o.system, "System automaton (.aut)");
    if (required) opt->required();
  };
  auto prop = [&](CLI::App* c) {
    c->add_option("--formula", o.formula, "PLTL formula");
    c->add_option("--property", o.property, "Büchi automaton for the property");
    c->add_option("--complement", o.complement, "Büchi automaton for its complement");
  };

  auto* check = app.add_subcommand("check", "Relative liveness (rl), relative safety (rs) or satisfaction (sat)");
  check->add_option("kind", o.kind)->required()->check(CLI::IsMember({"rl", "rs", "sat"}));
  sys(check);
  prop(check);

  auto* mc = app.add_subcommand("machine-closed", "pre(system) contained in pre(sub)");
  sys(mc);
  mc->add_option("--sub", o.sub, "Sub-behavior automaton")->required();

  auto* sc = app.add_subcommand("safety-class", "Is the property a safety property");
  sys(sc, false);
  sc->add_option("--alphabet", o.alphabet, "Space separated letters");
  prop(sc);

  auto* ab = app.add_subcommand("abstract", "Image of a transition system under a homomorphism");
  sys(ab);
  ab->add_option("--hom", o.hom, "Homomorphism (.hom)")->required();

  auto* wcc = app.add_subcommand("wcc", "Weak continuation-closure");
  sys(wcc);
  wcc->add_option("--hom", o.hom, "Homomorphism (.hom)")->required();

  auto* pr = app.add_subcommand("preserve", "Compare abstract and concrete verdicts within fairness");
  sys(pr);
  pr->add_option("--hom", o.hom, "Homomorphism (.hom)")->required();
  pr->add_option("--formula", o.formula, "Formula in extended normal form over the target")->required();

  auto* tr = app.add_subcommand("transform", "Apply N, T, R or positive normal form");
  tr->add_option("--formula", o.formula, "PLTL formula")->required();
  tr->add_option("--mode", o.mode, "N, T, R or pnf")->required()->check(CLI::IsMember({"N", "T", "R", "pnf"}));

  auto* xt = app.add_subcommand("xtd", "Pad maximal words with '#'");
  sys(xt);
  xt->add_option("--hom", o.hom, "Pad words whose continuations are all hidden");

  auto* sy = app.add_subcommand("synthesize", "Fair implementation of a property satisfied within fairness");
  sys(sy);
  prop(sy);

  auto* vi = app.add_subcommand("verify-impl", "Check a fair implementation");
  vi->add_option("--impl", o.impl, "Implementation (.aut, Büchi states are the marks)")->required();
  sys(vi);
  prop(vi);

  auto* ev = app.add_subcommand("eval", "Evaluate a formula on a lasso word");
  ev->add_option("--lasso", o.lasso, "\"stem;cycle\"")->required();
  ev->add_option("--formula", o.formula, "PLTL formula")->required();
  sys(ev, false);
  ev->add_option("--alphabet", o.alphabet, "Space separated letters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  Session s;
  const auto start = std::chrono::steady_clock::now();
  int code = kError;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "check") code = cmd_check(s, o);
    else if (name == "machine-closed") code = cmd_machine_closed(s, o);
    else if (name == "safety-class") code = cmd_safety_class(s, o);
    else if (name == "abstract") code = cmd_abstract(s, o);
    else if (name == "wcc") code = cmd_wcc(s, o);
    else if (name == "preserve") code = cmd_preserve(s, o);
    else if (name == "transform") code = cmd_transform(s, o);
    else if (name == "xtd") code = cmd_xtd(s, o);
    else if (name == "synthesize") code = cmd_synthesize(s, o);
    else if (name == "verify-impl") code = cmd_verify_impl(s, o);
    else if (name == "eval") code = cmd_eval(s, o);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    json report = {{"command", args}, {"exit_code", code}, {"inputs", s.inputs}, {"result", s.result}};
    if (!o.no_timing) report["timing_ms"] = ms;
    out << report.dump(2) << '\n';
  } else {
    out << s.text.str();
  }
  return code;
}

}  // namespace faircheck::cli

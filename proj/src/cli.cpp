#include "wordreg/cli.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordreg/automata.hpp"
#include "wordreg/error.hpp"
#include "wordreg/finiteness.hpp"
#include "wordreg/interlace.hpp"
#include "wordreg/oracle.hpp"
#include "wordreg/regularity.hpp"
#include "wordreg/words.hpp"

namespace wordreg::cli {

namespace {

using json = nlohmann::ordered_json;

struct AlphabetFlags {
  std::string symbols;
  bool infer = false;
};

struct Options {
  bool json_mode = false;
  std::string x;
  std::string y;
  AlphabetFlags alphabet;
  std::string method = "auto";
  std::string relation = "eq";
  std::string out_format = "json";
  std::size_t order = 0;
  std::size_t max_len = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Explicit symbol list, or (when allowed) the sorted symbols of the inputs.
Alphabet resolve_alphabet(const AlphabetFlags& flags, std::initializer_list<const std::string*> words,
                          bool inference_allowed) {
  if (!flags.symbols.empty()) {
    if (flags.infer) throw UsageError("--alphabet and --infer-alphabet are mutually exclusive");
    return Alphabet(flags.symbols);
  }
  if (!flags.infer || !inference_allowed) {
    throw UsageError(inference_allowed
                         ? "an alphabet is required: pass --alphabet or --infer-alphabet"
                         : "this command needs an explicit --alphabet (the answer depends on it)");
  }
  std::set<char> symbols;
  for (const auto* w : words) symbols.insert(w->begin(), w->end());
  if (symbols.empty()) throw UsageError("cannot infer an alphabet from empty words");
  return Alphabet(std::string(symbols.begin(), symbols.end()));
}

MethodChoice parse_method(const std::string& m) {
  if (m == "auto") return MethodChoice::Auto;
  if (m == "general") return MethodChoice::General;
  return MethodChoice::Fast;
}

json interlace_json(const Word& x, const Word& y, const InterlaceVerdict& v) {
  json doc;
  doc["x"] = x.str();
  doc["y"] = y.str();
  doc["holds"] = v.holds;
  doc["method"] = std::string(to_string(v.method));
  doc["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
  return doc;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

int cmd_count(const Options& o, std::ostream& out) {
  const std::size_t n = count_occurrences(Word{o.x}, Word{o.y});
  if (o.json_mode) {
    json doc;
    doc["text"] = o.x;
    doc["pattern"] = o.y;
    doc["count"] = n;
    emit(out, doc);
  } else {
    out << n << '\n';
  }
  return kExitOk;
}

int cmd_interlaced(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, false);
  const Word x{o.x};
  const Word y{o.y};
  const auto verdict = decide_interlacing(x, y, alphabet, parse_method(o.method));
  if (o.json_mode) {
    auto doc = interlace_json(x, y, verdict);
    doc["alphabet"] = alphabet.symbols();
    emit(out, doc);
    return kExitOk;
  }
  out << "alphabet: {" << alphabet.symbols() << "}\n";
  out << x.str() << (verdict.holds ? " is" : " is not") << " interlaced by " << y.str()
      << " (method: " << to_string(verdict.method) << ")\n";
  if (verdict.witness) {
    out << "witness: " << verdict.witness->str() << " (" << x.str() << "-bordered, avoids "
        << y.str() << ")\n";
  }
  return kExitOk;
}

json regularity_json(const Word& x, const Word& y, const Alphabet& alphabet, Relation rel,
                     const RegularityOutcome& outcome) {
  json doc;
  doc["x"] = x.str();
  doc["y"] = y.str();
  doc["alphabet"] = alphabet.symbols();
  doc["relation"] = std::string(to_string(rel));
  doc["regular"] = outcome.regular;
  doc["direction"] =
      outcome.direction ? json(std::string(to_string(*outcome.direction))) : json(nullptr);
  doc["certificate"] =
      outcome.certificate ? json::parse(certificate_to_json(*outcome.certificate)) : json(nullptr);
  return doc;
}

int cmd_regular(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, false);
  const Word x{o.x};
  const Word y{o.y};
  const Relation rel = parse_relation(o.relation);
  const auto outcome = decide_regularity(x, y, alphabet, parse_method(o.method));
  if (o.json_mode) {
    emit(out, regularity_json(x, y, alphabet, rel, outcome));
    return kExitOk;
  }
  out << "alphabet: {" << alphabet.symbols() << "}\n";
  out << "L_{" << x.str() << " " << to_string(rel) << " " << y.str() << "} is "
      << (outcome.regular ? "regular" : "not regular");
  if (outcome.direction) out << " (" << to_string(*outcome.direction) << ")";
  out << '\n';
  if (outcome.certificate) out << "certificate: " << certificate_to_json(*outcome.certificate) << '\n';
  return kExitOk;
}

int cmd_dfa(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, false);
  const Relation rel = parse_relation(o.relation);
  try {
    const Dfa dfa = build_comparison_dfa(Word{o.x}, Word{o.y}, alphabet, rel);
    if (o.out_format == "dot") {
      out << serialize(dfa, DfaFormat::Dot);
    } else {
      out << serialize(dfa, DfaFormat::Json) << '\n';
    }
    return kExitOk;
  } catch (const NotRegularError& e) {
    out << certificate_to_json(e.certificate()) << '\n';
    return kExitNotRegular;
  }
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, true);
  const Word x{o.x};
  const Word y{o.y};
  const auto witness = shortest_accepted(avoider_automaton(x, y, alphabet));
  if (o.json_mode) {
    json doc;
    doc["x"] = x.str();
    doc["y"] = y.str();
    doc["alphabet"] = alphabet.symbols();
    doc["witness"] = witness ? json(witness->str()) : json(nullptr);
    doc["bound"] = avoider_state_bound(x, y);
    emit(out, doc);
  } else {
    out << "alphabet: {" << alphabet.symbols() << "}\n";
    out << (witness ? witness->str() : std::string("none")) << '\n';
  }
  return kExitOk;
}

int cmd_finite(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, true);
  const bool finite = is_finite_pair(Word{o.x}, Word{o.y}, alphabet);
  if (o.json_mode) {
    json doc;
    doc["x"] = o.x;
    doc["y"] = o.y;
    doc["alphabet"] = alphabet.symbols();
    doc["finite"] = finite;
    emit(out, doc);
  } else {
    out << "alphabet: {" << alphabet.symbols() << "}\n";
    out << "L_{" << o.x << " eq " << o.y << "} is " << (finite ? "finite" : "infinite") << '\n';
  }
  return kExitOk;
}

int cmd_debruijn(const Options& o, std::ostream& out) {
  if (o.alphabet.symbols.empty()) throw UsageError("debruijn needs --alphabet");
  const Alphabet alphabet(o.alphabet.symbols);
  const auto db = de_bruijn_word(o.order, alphabet);
  if (o.json_mode) {
    json doc;
    doc["order"] = db.order;
    doc["alphabet"] = alphabet.symbols();
    doc["word"] = db.word.str();
    emit(out, doc);
  } else {
    out << db.word.str() << '\n';
  }
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {&o.x, &o.y}, true);
  const Word x{o.x};
  const Word y{o.y};
  std::vector<std::pair<std::string, bool>> checks;

  for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    const auto general = decide_interlacing(a, b, alphabet, MethodChoice::General);
    const auto dispatched = decide_interlacing(a, b, alphabet, MethodChoice::Auto);
    checks.emplace_back("interlacing methods agree for (" + a.str() + ", " + b.str() + ")",
                        general.holds == dispatched.holds);
    if (general.witness) {
      const auto& w = *general.witness;
      checks.emplace_back("witness " + w.str() + " is valid and below the state bound",
                          is_bordered(w, a) && !w.contains(b) &&
                              w.size() < avoider_state_bound(b, a));
    }
  }

  const auto outcome = decide_regularity(x, y, alphabet);
  if (outcome.regular) {
    for (Relation rel : {Relation::Lt, Relation::Le, Relation::Eq, Relation::Gt, Relation::Ge,
                         Relation::Ne}) {
      const Dfa dfa = build_comparison_dfa(x, y, alphabet, rel);
      const auto mismatch = bounded_equivalence(dfa, x, y, rel, o.max_len);
      checks.emplace_back("dfa(" + std::string(to_string(rel)) + ") matches the counter oracle",
                          !mismatch.has_value());
    }
  } else {
    const auto problem = check_certificate(*outcome.certificate);
    checks.emplace_back("certificate invariants hold", problem.empty());
  }

  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  if (o.json_mode) {
    json doc;
    doc["x"] = x.str();
    doc["y"] = y.str();
    doc["alphabet"] = alphabet.symbols();
    doc["max_len"] = o.max_len;
    doc["checks"] = json::array();
    for (const auto& [name, ok] : checks) doc["checks"].push_back(json{{"name", name}, {"pass", ok}});
    doc["pass"] = all;
    emit(out, doc);
  } else {
    out << "alphabet: {" << alphabet.symbols() << "}\n";
    for (const auto& [name, ok] : checks) out << (ok ? "PASS " : "FAIL ") << name << '\n';
  }
  return all ? kExitOk : kExitValidationFailed;
}

void add_alphabet_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alphabet", o.alphabet.symbols, "Ordered alphabet symbols, e.g. 01");
  cmd->add_flag("--infer-alphabet", o.alphabet.infer, "Use the symbols appearing in the inputs");
}

void report_error(const Options& o, std::ostream& out, std::ostream& err, std::string_view code,
                  const std::string& message) {
  if (o.json_mode) {
    json doc;
    doc["error"] = std::string(code);
    doc["message"] = message;
    emit(out, doc);
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subword-occurrence comparison languages: regularity, interlacing, finiteness"};
  app.name("wordreg");
  app.require_subcommand(1);
  app.add_flag("--json", o.json_mode, "Machine-readable output");

  auto* count = app.add_subcommand("count", "Count overlapping occurrences of P in Z");
  count->add_option("Z", o.x)->required();
  count->add_option("P", o.y)->required();

  const auto methods = CLI::IsMember({"auto", "general", "fast"});
  auto* interlaced = app.add_subcommand("interlaced", "Is X interlaced by Y?");
  interlaced->add_option("X", o.x)->required();
  interlaced->add_option("Y", o.y)->required();
  add_alphabet_flags(interlaced, o);
  interlaced->add_option("--method", o.method)->check(methods);

  const auto relations = CLI::IsMember({"lt", "le", "eq", "gt", "ge", "ne"});
  auto* regular = app.add_subcommand("regular", "Decide regularity of L_{X rel Y}");
  regular->add_option("X", o.x)->required();
  regular->add_option("Y", o.y)->required();
  add_alphabet_flags(regular, o);
  regular->add_option("--relation", o.relation)->check(relations);
  regular->add_option("--method", o.method)->check(methods);

  auto* dfa = app.add_subcommand("dfa", "Minimal DFA for L_{X rel Y}");
  dfa->add_option("X", o.x)->required();
  dfa->add_option("Y", o.y)->required();
  add_alphabet_flags(dfa, o);
  dfa->add_option("--relation", o.relation)->check(relations);
  dfa->add_option("--out", o.out_format)->check(CLI::IsMember({"dot", "json"}));

  auto* witness = app.add_subcommand("witness", "Shortest Y-bordered word avoiding X");
  witness->add_option("X", o.x)->required();
  witness->add_option("Y", o.y)->required();
  add_alphabet_flags(witness, o);

  auto* finite = app.add_subcommand("finite", "Is L_{X=Y} finite?");
  finite->add_option("X", o.x)->required();
  finite->add_option("Y", o.y)->required();
  add_alphabet_flags(finite, o);

  auto* debruijn = app.add_subcommand("debruijn", "Least cyclic de Bruijn word of order L");
  debruijn->add_option("L", o.order)->required()->check(CLI::PositiveNumber);
  debruijn->add_option("--alphabet", o.alphabet.symbols)->required();

  auto* validate = app.add_subcommand("validate", "Cross-check every procedure against oracles");
  validate->add_option("X", o.x)->required();
  validate->add_option("Y", o.y)->required();
  add_alphabet_flags(validate, o);
  validate->add_option("--max-len", o.max_len);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    std::ostringstream usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    if (code == 0) return kExitOk;
    report_error(o, out, err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*interlaced) return cmd_interlaced(o, out);
    if (*regular) return cmd_regular(o, out);
    if (*dfa) return cmd_dfa(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*finite) return cmd_finite(o, out);
    if (*debruijn) return cmd_debruijn(o, out);
    if (*validate) return cmd_validate(o, out);
  } catch (const UsageError& e) {
    report_error(o, out, err, "UsageError", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    report_error(o, out, err, to_string(e.code()), e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wordreg::cli

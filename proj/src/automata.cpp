#include "wordreg/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "wordreg/error.hpp"

namespace wordreg {

namespace {

using Row = std::vector<State>;

void check_pattern(const Word& p, const Alphabet& alphabet) {
  if (p.empty()) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
  alphabet.validate(p);
}

// KMP automaton rows for states 0..|p|; row |p| follows the border of p.
std::vector<Row> kmp_rows(const Word& p, const Alphabet& alphabet) {
  const std::size_t n = p.size();
  const std::size_t k = alphabet.size();
  const auto fail = failure_table(p);
  std::vector<Row> rows(n + 1, Row(k, 0));
  for (std::size_t s = 0; s <= n; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      const char c = alphabet.symbol(a);
      if (s < n && p[s] == c) {
        rows[s][a] = static_cast<State>(s + 1);
      } else if (s == 0) {
        rows[s][a] = 0;
      } else {
        rows[s][a] = rows[fail[s]][a];
      }
    }
  }
  return rows;
}

std::vector<State> flatten(const std::vector<Row>& rows) {
  std::vector<State> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> transitions, State start,
         std::vector<bool> accepting, std::optional<std::vector<bool>> match_mark)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)),
      match_mark_(std::move(match_mark)) {
  if (state_count_ == 0) throw Error(Errc::InvalidArgument, "a DFA needs at least one state");
  if (transitions_.size() != state_count_ * alphabet_.size()) {
    throw Error(Errc::InvalidArgument, "transition table is not complete");
  }
  for (State t : transitions_) {
    if (t >= state_count_) throw Error(Errc::InvalidArgument, "transition target out of range");
  }
  if (start_ >= state_count_) throw Error(Errc::InvalidArgument, "start state out of range");
  if (accepting_.size() != state_count_) {
    throw Error(Errc::InvalidArgument, "accepting vector has wrong size");
  }
  if (match_mark_ && match_mark_->size() != state_count_) {
    throw Error(Errc::InvalidArgument, "match mark vector has wrong size");
  }
}

State Dfa::next(State s, char symbol) const {
  const auto a = alphabet_.index_of(symbol);
  if (a == Alphabet::npos) {
    throw Error(Errc::ForeignSymbol, std::string("symbol '") + symbol + "' is not in alphabet");
  }
  return next(s, a);
}

State Dfa::run(const Word& w) const {
  State s = start_;
  for (char c : w.str()) s = next(s, c);
  return s;
}

std::size_t Dfa::count_marked_visits(const Word& w) const {
  State s = start_;
  std::size_t visits = is_marked(s) ? 1 : 0;
  for (char c : w.str()) {
    s = next(s, c);
    if (is_marked(s)) ++visits;
  }
  return visits;
}

Dfa matcher_automaton(const Word& p, const Alphabet& alphabet, MatchMode mode) {
  check_pattern(p, alphabet);
  auto rows = kmp_rows(p, alphabet);
  const std::size_t n = p.size();
  if (mode == MatchMode::AbsorbingSubword) {
    std::fill(rows[n].begin(), rows[n].end(), static_cast<State>(n));
  }
  std::vector<bool> accepting(n + 1, false);
  accepting[n] = true;
  std::optional<std::vector<bool>> mark;
  if (mode == MatchMode::Counting) mark = accepting;
  return Dfa(alphabet, n + 1, flatten(rows), 0, std::move(accepting), std::move(mark));
}

// Layout of the grafted automaton:
//   0..m         progress through the prefix y (A_1 without its final state)
//   m+1          dead state of A_1
//   m+2..2m+2    KMP states 0..m of A_2, which runs on the input minus its first letter
// Reading one letter past the prefix y jumps into A_2 at the state reached
// by feeding it y[2..m] followed by that letter.
Dfa grafted_bordered_automaton(const Word& y, const Alphabet& alphabet) {
  check_pattern(y, alphabet);
  const std::size_t m = y.size();
  const std::size_t k = alphabet.size();
  const auto kmp = kmp_rows(y, alphabet);
  const std::size_t dead = m + 1;
  const std::size_t base = m + 2;
  const std::size_t count = 2 * m + 3;

  std::vector<Row> rows(count, Row(k, 0));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      rows[s][a] = static_cast<State>(alphabet.symbol(a) == y[s] ? s + 1 : dead);
    }
  }
  std::fill(rows[dead].begin(), rows[dead].end(), static_cast<State>(dead));

  State after_tail = 0;
  for (std::size_t i = 1; i < m; ++i) after_tail = kmp[after_tail][alphabet.index_of(y[i])];
  for (std::size_t a = 0; a < k; ++a) {
    rows[m][a] = static_cast<State>(base + kmp[after_tail][a]);
  }
  for (std::size_t s = 0; s <= m; ++s) {
    for (std::size_t a = 0; a < k; ++a) rows[base + s][a] = static_cast<State>(base + kmp[s][a]);
  }

  std::vector<bool> accepting(count, false);
  accepting[base + m] = true;
  return Dfa(alphabet, count, flatten(rows), 0, std::move(accepting));
}

Dfa combine(const Dfa& a, const Dfa& b, BoolOp op) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(Errc::AlphabetMismatch, "combine: automata use different alphabets");
  }
  const std::size_t k = a.alphabet().size();
  const auto key = [&](State p, State q) {
    return static_cast<std::uint64_t>(p) * b.state_count() + q;
  };

  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> transitions;
  const auto intern = [&](State p, State q) {
    auto [it, inserted] = index.try_emplace(key(p, q), static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };

  intern(a.start(), b.start());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (std::size_t s = 0; s < k; ++s) transitions.push_back(intern(a.next(p, s), b.next(q, s)));
  }

  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool in_a = a.is_accepting(pairs[i].first);
    const bool in_b = b.is_accepting(pairs[i].second);
    accepting[i] = op == BoolOp::And ? (in_a && in_b) : (in_a && !in_b);
  }
  return Dfa(a.alphabet(), pairs.size(), std::move(transitions), 0, std::move(accepting));
}

Dfa complement(const Dfa& a) {
  auto accepting = a.accepting();
  accepting.flip();
  return Dfa(a.alphabet(), a.state_count(), a.transitions(), a.start(), std::move(accepting));
}

Dfa trim_unreachable(const Dfa& a) {
  const std::size_t k = a.alphabet().size();
  constexpr State unseen = static_cast<State>(-1);
  std::vector<State> renumber(a.state_count(), unseen);
  std::vector<State> order;
  renumber[a.start()] = 0;
  order.push_back(a.start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      const State t = a.next(order[i], s);
      if (renumber[t] == unseen) {
        renumber[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> transitions;
  transitions.reserve(order.size() * k);
  std::vector<bool> accepting(order.size());
  std::optional<std::vector<bool>> mark;
  if (a.has_match_mark()) mark.emplace(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) transitions.push_back(renumber[a.next(order[i], s)]);
    accepting[i] = a.is_accepting(order[i]);
    if (mark) (*mark)[i] = a.is_marked(order[i]);
  }
  return Dfa(a.alphabet(), order.size(), std::move(transitions), 0, std::move(accepting),
             std::move(mark));
}

// Hopcroft partition refinement on the reachable part, followed by a
// breadth-first canonical renumbering.
Dfa minimize(const Dfa& input) {
  const Dfa a = trim_unreachable(input);
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet().size();

  // inverse[s][t] = states with a transition to t on symbol s
  std::vector<std::vector<std::vector<State>>> inverse(k, std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) inverse[s][a.next(q, s)].push_back(q);
  }

  std::vector<std::size_t> block_of(n);
  std::vector<std::vector<State>> blocks;
  {
    std::vector<State> acc, rej;
    for (State q = 0; q < n; ++q) (a.is_accepting(q) ? acc : rej).push_back(q);
    for (auto* part : {&acc, &rej}) {
      if (part->empty()) continue;
      for (State q : *part) block_of[q] = blocks.size();
      blocks.push_back(std::move(*part));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> work;  // (block, symbol)
  std::vector<std::vector<bool>> in_work;
  const auto push_work = [&](std::size_t b, std::size_t s) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<bool>(k, false));
    if (!in_work[b][s]) {
      in_work[b][s] = true;
      work.emplace_back(b, s);
    }
  };
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (std::size_t s = 0; s < k; ++s) push_work(smaller, s);
  }

  std::vector<std::size_t> hits(n, 0);
  std::vector<bool> marked(n, false);
  while (!work.empty()) {
    const auto [splitter, symbol] = work.back();
    work.pop_back();
    in_work[splitter][symbol] = false;

    std::vector<State> predecessors;
    for (State t : blocks[splitter]) {
      for (State q : inverse[symbol][t]) {
        if (!marked[q]) {
          marked[q] = true;
          predecessors.push_back(q);
        }
      }
    }
    std::vector<std::size_t> touched;
    for (State q : predecessors) {
      if (hits[block_of[q]]++ == 0) touched.push_back(block_of[q]);
    }
    for (std::size_t b : touched) {
      if (hits[b] < blocks[b].size()) {
        std::vector<State> inside, outside;
        for (State q : blocks[b]) (marked[q] ? inside : outside).push_back(q);
        const std::size_t fresh = blocks.size();
        const bool keep_inside = inside.size() >= outside.size();
        blocks[b] = keep_inside ? std::move(inside) : std::move(outside);
        blocks.push_back(keep_inside ? std::move(outside) : std::move(inside));
        for (State q : blocks[fresh]) block_of[q] = fresh;
        // fresh holds the smaller half, so it is the right splitter whether or
        // not (b, s) is still pending.
        for (std::size_t s = 0; s < k; ++s) push_work(fresh, s);
      }
      hits[b] = 0;
    }
    for (State q : predecessors) marked[q] = false;
  }

  std::vector<State> transitions(blocks.size() * k);
  std::vector<bool> accepting(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const State rep = blocks[b].front();
    for (std::size_t s = 0; s < k; ++s) {
      transitions[b * k + s] = static_cast<State>(block_of[a.next(rep, s)]);
    }
    accepting[b] = a.is_accepting(rep);
  }
  return trim_unreachable(Dfa(a.alphabet(), blocks.size(), std::move(transitions),
                              static_cast<State>(block_of[a.start()]), std::move(accepting)));
}

std::optional<Word> shortest_accepted(const Dfa& a) {
  const std::size_t k = a.alphabet().size();
  constexpr State none = static_cast<State>(-1);
  std::vector<State> parent(a.state_count(), none);
  std::vector<std::uint32_t> via(a.state_count(), 0);
  std::vector<bool> seen(a.state_count(), false);
  std::deque<State> queue{a.start()};
  seen[a.start()] = true;

  const auto spell = [&](State s) {
    std::string out;
    for (; parent[s] != none; s = parent[s]) out += a.alphabet().symbol(via[s]);
    std::reverse(out.begin(), out.end());
    return Word{std::move(out)};
  };

  if (a.is_accepting(a.start())) return Word{};
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < k; ++s) {
      const State t = a.next(q, s);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = q;
      via[t] = static_cast<std::uint32_t>(s);
      if (a.is_accepting(t)) return spell(t);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_label(const std::vector<char>& symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) out += ",";
    if (symbols[i] == '"' || symbols[i] == '\\') out += '\\';
    out += symbols[i];
  }
  return out;
}

std::string to_dot(const Dfa& a) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (State q = 0; q < a.state_count(); ++q) {
    out << "  " << q << " [shape=" << (a.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> " << a.start() << ";\n";
  for (State q = 0; q < a.state_count(); ++q) {
    std::map<State, std::vector<char>> by_target;
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      by_target[a.next(q, s)].push_back(a.alphabet().symbol(s));
    }
    for (const auto& [target, symbols] : by_target) {
      out << "  " << q << " -> " << target << " [label=\"" << dot_label(symbols) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const Dfa& a) {
  ordered_json doc;
  doc["alphabet"] = ordered_json::array();
  for (char c : a.alphabet().symbols()) doc["alphabet"].push_back(std::string(1, c));
  doc["state_count"] = a.state_count();
  doc["start"] = a.start();
  doc["accepting"] = ordered_json::array();
  for (State q = 0; q < a.state_count(); ++q) {
    if (a.is_accepting(q)) doc["accepting"].push_back(q);
  }
  if (a.has_match_mark()) {
    doc["match_mark"] = ordered_json::array();
    for (State q = 0; q < a.state_count(); ++q) {
      if (a.is_marked(q)) doc["match_mark"].push_back(q);
    }
  }
  doc["transitions"] = ordered_json::array();
  for (State q = 0; q < a.state_count(); ++q) {
    for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
      doc["transitions"].push_back(
          ordered_json::array({q, std::string(1, a.alphabet().symbol(s)), a.next(q, s)}));
    }
  }
  return doc.dump();
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::MalformedJson, "malformed DFA JSON: " + why);
}

std::size_t read_index(const ordered_json& v, std::size_t bound, const char* what) {
  if (!v.is_number_unsigned()) malformed(std::string(what) + " must be a nonnegative integer");
  const auto i = v.get<std::size_t>();
  if (i >= bound) malformed(std::string(what) + " out of range");
  return i;
}

}  // namespace

std::string serialize(const Dfa& a, DfaFormat format) {
  return format == DfaFormat::Dot ? to_dot(a) : to_json(a);
}

Dfa dfa_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const char* field : {"alphabet", "state_count", "start", "accepting", "transitions"}) {
    if (!doc.contains(field)) malformed(std::string("missing field '") + field + "'");
  }

  std::string symbols;
  if (!doc["alphabet"].is_array()) malformed("alphabet must be an array");
  for (const auto& s : doc["alphabet"]) {
    if (!s.is_string() || s.get<std::string>().size() != 1) {
      malformed("alphabet entries must be single-character strings");
    }
    symbols += s.get<std::string>()[0];
  }
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(symbols);
  } catch (const Error& e) {
    malformed(e.what());
  }

  if (!doc["state_count"].is_number_unsigned()) malformed("state_count must be an integer");
  const auto n = doc["state_count"].get<std::size_t>();
  if (n == 0) malformed("state_count must be positive");
  const auto start = read_index(doc["start"], n, "start");

  const auto read_set = [&](const ordered_json& list, const char* what) {
    if (!list.is_array()) malformed(std::string(what) + " must be an array");
    std::vector<bool> out(n, false);
    for (const auto& q : list) out[read_index(q, n, what)] = true;
    return out;
  };
  auto accepting = read_set(doc["accepting"], "accepting");
  std::optional<std::vector<bool>> mark;
  if (doc.contains("match_mark")) mark = read_set(doc["match_mark"], "match_mark");

  const std::size_t k = alphabet->size();
  std::vector<State> transitions(n * k, 0);
  std::vector<bool> defined(n * k, false);
  const auto& list = doc["transitions"];
  if (!list.is_array()) malformed("transitions must be an array");
  for (const auto& t : list) {
    if (!t.is_array() || t.size() != 3 || !t[1].is_string()) {
      malformed("each transition must be [state, symbol, state]");
    }
    const auto from = read_index(t[0], n, "transition source");
    const auto to = read_index(t[2], n, "transition target");
    const auto sym = t[1].get<std::string>();
    if (sym.size() != 1 || !alphabet->contains(sym[0])) malformed("unknown transition symbol");
    const std::size_t slot = from * k + alphabet->index_of(sym[0]);
    if (defined[slot]) malformed("duplicate transition");
    defined[slot] = true;
    transitions[slot] = static_cast<State>(to);
  }
  if (std::find(defined.begin(), defined.end(), false) != defined.end()) {
    malformed("transition function is not total");
  }
  return Dfa(*alphabet, n, std::move(transitions), static_cast<State>(start), std::move(accepting),
             std::move(mark));
}

}  // namespace wordreg

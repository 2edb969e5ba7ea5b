#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordreg/words.hpp"

namespace wordreg {

using State = std::uint32_t;

/// Complete deterministic finite automaton over an explicit alphabet.
///
/// Transitions are stored densely, row-major by state then symbol index.
/// The optional match mark flags states at which a full pattern occurrence
/// has just ended; it is carried by pattern-matching automata and dropped by
/// every language-level operation (product, complement, minimization).
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count, std::vector<State> transitions, State start,
      std::vector<bool> accepting, std::optional<std::vector<bool>> match_mark = std::nullopt);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
  [[nodiscard]] State start() const noexcept { return start_; }

  [[nodiscard]] State next(State s, std::size_t symbol_index) const {
    return transitions_[s * alphabet_.size() + symbol_index];
  }
  [[nodiscard]] State next(State s, char symbol) const;

  [[nodiscard]] bool is_accepting(State s) const { return accepting_[s]; }
  [[nodiscard]] bool has_match_mark() const noexcept { return match_mark_.has_value(); }
  [[nodiscard]] bool is_marked(State s) const { return match_mark_ && (*match_mark_)[s]; }

  [[nodiscard]] const std::vector<State>& transitions() const noexcept { return transitions_; }
  [[nodiscard]] const std::vector<bool>& accepting() const noexcept { return accepting_; }

  /// State reached from start after reading `w`. Throws ForeignSymbol.
  [[nodiscard]] State run(const Word& w) const;
  [[nodiscard]] bool accepts(const Word& w) const { return is_accepting(run(w)); }
  /// Number of prefixes of `w` (including the empty one) that end in a marked state.
  [[nodiscard]] std::size_t count_marked_visits(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<State> transitions_;
  State start_;
  std::vector<bool> accepting_;
  std::optional<std::vector<bool>> match_mark_;
};

enum class MatchMode {
  Counting,          // continue through the border after a full match
  AbsorbingSubword,  // full-match state is an accepting sink: Sigma* p Sigma*
  SuffixOnly,        // accept when the input ends with p: Sigma* p
};

enum class BoolOp { And, AndNot };

enum class DfaFormat { Dot, Json };

/// Pattern-matching automaton with |p| + 1 states; state i means the longest
/// suffix of the input that is a prefix of p has length i.
[[nodiscard]] Dfa matcher_automaton(const Word& p, const Alphabet& alphabet, MatchMode mode);

/// 2|y| + 3 state automaton for y Sigma+ ∩ Sigma+ y, i.e. the y-bordered words.
[[nodiscard]] Dfa grafted_bordered_automaton(const Word& y, const Alphabet& alphabet);

/// Reachable part of the product automaton.
[[nodiscard]] Dfa combine(const Dfa& a, const Dfa& b, BoolOp op);
[[nodiscard]] Dfa complement(const Dfa& a);
[[nodiscard]] Dfa minimize(const Dfa& a);
/// Keeps the reachable states, renumbered breadth-first in symbol order.
[[nodiscard]] Dfa trim_unreachable(const Dfa& a);

/// Length-lexicographically least accepted word, or nullopt for the empty language.
[[nodiscard]] std::optional<Word> shortest_accepted(const Dfa& a);

[[nodiscard]] std::string serialize(const Dfa& a, DfaFormat format);
/// Parses the JSON produced by serialize(a, DfaFormat::Json). Throws MalformedJson.
[[nodiscard]] Dfa dfa_from_json(std::string_view text);

}  // namespace wordreg

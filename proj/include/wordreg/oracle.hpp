#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordreg/automata.hpp"
#include "wordreg/regularity.hpp"
#include "wordreg/words.hpp"

namespace wordreg {

// Brute-force references. Every routine here enumerates explicitly and
// refuses to run past its budget instead of truncating.

struct EnumerationBudget {
  std::size_t max_words = std::size_t{1} << 17;  // all binary words up to length 16
  std::size_t member_limit = 256;                // list members only below this many
};

struct CensusReport {
  std::size_t max_length = 0;
  std::vector<std::size_t> per_length_counts;  // index = word length
  std::optional<std::vector<Word>> members;    // shortlex order, present when small

  [[nodiscard]] std::size_t total() const;
};

/// Number of words of length <= max_length; throws BudgetExceeded above the budget.
std::size_t checked_word_count(const Alphabet& alphabet, std::size_t max_length,
                               const EnumerationBudget& budget);

/// Visits every word of length <= max_length in shortlex order.
void for_each_word(const Alphabet& alphabet, std::size_t max_length,
                   const std::function<void(const Word&)>& visit,
                   const EnumerationBudget& budget = {});

/// Streaming count comparison: one left-to-right pass with the counting
/// matchers for x and y running side by side.
class CounterChecker {
 public:
  CounterChecker(const Word& x, const Word& y, const Alphabet& alphabet);

  [[nodiscard]] bool member(const Word& z, Relation rel) const;
  /// (|z|_x, |z|_y)
  [[nodiscard]] std::pair<std::size_t, std::size_t> counts(const Word& z) const;

 private:
  Dfa x_matcher_;
  Dfa y_matcher_;
};

[[nodiscard]] bool counter_membership(const Word& z, const Word& x, const Word& y, Relation rel);

[[nodiscard]] CensusReport bounded_census(const Word& x, const Word& y, const Alphabet& alphabet,
                                          Relation rel, std::size_t max_length,
                                          const EnumerationBudget& budget = {});

/// Census of L_{p_1 = p_2 = ... = p_n}.
[[nodiscard]] CensusReport bounded_census_equal(std::span<const Word> patterns,
                                                const Alphabet& alphabet, std::size_t max_length,
                                                const EnumerationBudget& budget = {});

/// First word (shortlex) where `a` disagrees with the counter oracle.
[[nodiscard]] std::optional<Word> bounded_equivalence(const Dfa& a, const Word& x, const Word& y,
                                                      Relation rel, std::size_t max_length,
                                                      const EnumerationBudget& budget = {});

/// All y-bordered words of length <= max_length, shortlex order.
[[nodiscard]] std::vector<Word> enumerate_bordered(const Word& y, const Alphabet& alphabet,
                                                   std::size_t max_length,
                                                   const EnumerationBudget& budget = {});

[[nodiscard]] std::string census_to_json(const CensusReport& report);

}  // namespace wordreg

#include "wordreg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "wordreg/error.hpp"

namespace wordreg {

std::size_t CensusReport::total() const {
  return std::accumulate(per_length_counts.begin(), per_length_counts.end(), std::size_t{0});
}

std::size_t checked_word_count(const Alphabet& alphabet, std::size_t max_length,
                               const EnumerationBudget& budget) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    total += layer;
    if (total > budget.max_words) {
      throw Error(Errc::BudgetExceeded, "enumerating words up to length " +
                                            std::to_string(max_length) + " exceeds the budget of " +
                                            std::to_string(budget.max_words) + " words");
    }
    layer *= alphabet.size();
  }
  return total;
}

void for_each_word(const Alphabet& alphabet, std::size_t max_length,
                   const std::function<void(const Word&)>& visit,
                   const EnumerationBudget& budget) {
  checked_word_count(alphabet, max_length, budget);
  const std::size_t k = alphabet.size();
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<std::size_t> digits(len, 0);
    std::string w(len, alphabet.symbol(0));
    while (true) {
      visit(Word{w});
      std::size_t i = len;
      while (i > 0 && digits[i - 1] + 1 == k) {
        digits[i - 1] = 0;
        w[i - 1] = alphabet.symbol(0);
        --i;
      }
      if (i == 0) break;
      ++digits[i - 1];
      w[i - 1] = alphabet.symbol(digits[i - 1]);
    }
  }
}

CounterChecker::CounterChecker(const Word& x, const Word& y, const Alphabet& alphabet)
    : x_matcher_(matcher_automaton(x, alphabet, MatchMode::Counting)),
      y_matcher_(matcher_automaton(y, alphabet, MatchMode::Counting)) {}

std::pair<std::size_t, std::size_t> CounterChecker::counts(const Word& z) const {
  State qx = x_matcher_.start();
  State qy = y_matcher_.start();
  std::size_t cx = 0;
  std::size_t cy = 0;
  for (char c : z.str()) {
    qx = x_matcher_.next(qx, c);
    qy = y_matcher_.next(qy, c);
    cx += x_matcher_.is_marked(qx) ? 1 : 0;
    cy += y_matcher_.is_marked(qy) ? 1 : 0;
  }
  return {cx, cy};
}

bool CounterChecker::member(const Word& z, Relation rel) const {
  const auto [cx, cy] = counts(z);
  return holds(rel, cx, cy);
}

bool counter_membership(const Word& z, const Word& x, const Word& y, Relation rel) {
  if (x.empty() || y.empty()) throw Error(Errc::EmptyPattern, "patterns must be nonempty");
  std::set<char> symbols;
  for (const Word* w : {&z, &x, &y}) symbols.insert(w->str().begin(), w->str().end());
  const Alphabet alphabet(std::string(symbols.begin(), symbols.end()));
  return CounterChecker(x, y, alphabet).member(z, rel);
}

namespace {

CensusReport census_where(const Alphabet& alphabet, std::size_t max_length,
                          const EnumerationBudget& budget,
                          const std::function<bool(const Word&)>& member) {
  CensusReport report;
  report.max_length = max_length;
  report.per_length_counts.assign(max_length + 1, 0);
  std::vector<Word> members;
  bool listing = true;
  for_each_word(
      alphabet, max_length,
      [&](const Word& z) {
        if (!member(z)) return;
        ++report.per_length_counts[z.size()];
        if (listing) {
          if (members.size() == budget.member_limit) {
            listing = false;
            members.clear();
          } else {
            members.push_back(z);
          }
        }
      },
      budget);
  if (listing) report.members = std::move(members);
  return report;
}

}  // namespace

CensusReport bounded_census(const Word& x, const Word& y, const Alphabet& alphabet, Relation rel,
                            std::size_t max_length, const EnumerationBudget& budget) {
  const CounterChecker checker(x, y, alphabet);
  return census_where(alphabet, max_length, budget,
                      [&](const Word& z) { return checker.member(z, rel); });
}

CensusReport bounded_census_equal(std::span<const Word> patterns, const Alphabet& alphabet,
                                  std::size_t max_length, const EnumerationBudget& budget) {
  if (patterns.empty()) throw Error(Errc::InvalidArgument, "at least one pattern is required");
  std::vector<Dfa> matchers;
  for (const auto& p : patterns) matchers.push_back(matcher_automaton(p, alphabet, MatchMode::Counting));
  return census_where(alphabet, max_length, budget, [&](const Word& z) {
    std::optional<std::size_t> common;
    for (const auto& m : matchers) {
      State q = m.start();
      std::size_t count = 0;
      for (char c : z.str()) {
        q = m.next(q, c);
        count += m.is_marked(q) ? 1 : 0;
      }
      if (common && *common != count) return false;
      common = count;
    }
    return true;
  });
}

std::optional<Word> bounded_equivalence(const Dfa& a, const Word& x, const Word& y, Relation rel,
                                        std::size_t max_length,
                                        const EnumerationBudget& budget) {
  const CounterChecker checker(x, y, a.alphabet());
  std::optional<Word> mismatch;
  // for_each_word has no early exit; the count is bounded by the budget anyway.
  for_each_word(
      a.alphabet(), max_length,
      [&](const Word& z) {
        if (!mismatch && a.accepts(z) != checker.member(z, rel)) mismatch = z;
      },
      budget);
  return mismatch;
}

std::vector<Word> enumerate_bordered(const Word& y, const Alphabet& alphabet,
                                     std::size_t max_length, const EnumerationBudget& budget) {
  if (y.empty()) throw Error(Errc::EmptyPattern, "border word must be nonempty");
  alphabet.validate(y);
  std::vector<Word> out;
  // Overlapping: length L in (|y|, 2|y|) exists iff 2|y| - L is a border length of y.
  for (std::size_t b : border_lengths(y)) {
    const std::size_t len = 2 * y.size() - b;
    if (len <= max_length) out.push_back(y + y.suffix(y.size() - b));
  }
  // Disjoint: y t y for every filler t.
  if (max_length >= 2 * y.size()) {
    for_each_word(
        alphabet, max_length - 2 * y.size(),
        [&](const Word& t) {
          out.push_back(y + t + y);
          if (out.size() > budget.max_words) {
            throw Error(Errc::BudgetExceeded, "too many bordered words");
          }
        },
        budget);
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return alphabet.shortlex_less(a, b); });
  return out;
}

std::string census_to_json(const CensusReport& report) {
  nlohmann::ordered_json doc;
  doc["max_length"] = report.max_length;
  doc["counts"] = report.per_length_counts;
  if (report.members) {
    doc["members"] = nlohmann::ordered_json::array();
    for (const auto& w : *report.members) doc["members"].push_back(w.str());
  }
  return doc.dump();
}

}  // namespace wordreg

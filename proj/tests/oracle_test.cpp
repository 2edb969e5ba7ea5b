#include <doctest.h>

#include <string>

#include "support/brute.hpp"
#include "wordreg/error.hpp"
#include "wordreg/oracle.hpp"

using namespace wordreg;

namespace {
const Alphabet kBinary("01");
}

TEST_CASE("counter_membership examples") {
  CHECK(counter_membership("0110", "01", "10", Relation::Eq));
  CHECK(counter_membership("", "01", "10", Relation::Eq));
  CHECK(counter_membership("", "abc", "zz", Relation::Eq));
  CHECK_FALSE(counter_membership("01", "01", "10", Relation::Lt));
  CHECK_THROWS_AS((void)counter_membership("01", "", "10", Relation::Eq), Error);
}

TEST_CASE("counter_membership matches direct counts") {
  const auto texts = brute::words("01", 12);
  for (const auto& x : brute::nonempty_words("01", 2)) {
    for (const auto& y : brute::nonempty_words("01", 2)) {
      const CounterChecker checker(x, y, kBinary);
      for (const auto& z : texts) {
        const auto [cx, cy] = checker.counts(z);
        REQUIRE(cx == brute::count(z, x));
        REQUIRE(cy == brute::count(z, y));
      }
    }
  }
  for (const auto& z : brute::words("01", 8)) {
    for (const char* rel : {"lt", "le", "eq", "gt", "ge", "ne"}) {
      REQUIRE(counter_membership(z, "01", "110", parse_relation(rel)) ==
              brute::relation(rel, brute::count(z, "01"), brute::count(z, "110")));
    }
  }
}

TEST_CASE("bounded_census") {
  const auto report = bounded_census("01", "10", kBinary, Relation::Eq, 4);
  REQUIRE(report.members.has_value());
  std::vector<std::string> got;
  for (const auto& w : *report.members) got.push_back(w.str());
  const std::vector<std::string> expected{"",     "0",    "1",    "00",   "11",   "000",
                                          "010",  "101",  "111",  "0000", "0010", "0100",
                                          "0110", "1001", "1011", "1101", "1111"};
  CHECK(got == expected);
  CHECK(report.per_length_counts == std::vector<std::size_t>{1, 2, 2, 4, 8});
  CHECK(census_to_json(report).starts_with(R"({"max_length":4,"counts":[1,2,2,4,8],"members":["","0")"));

  const auto everything = bounded_census("011", "011", kBinary, Relation::Eq, 10);
  CHECK(everything.total() == (1u << 11) - 1);
  CHECK_FALSE(everything.members.has_value());
  CHECK(census_to_json(everything).find("members") == std::string::npos);

  CHECK_THROWS_AS((void)bounded_census("0", "1", kBinary, Relation::Eq, 17), Error);
  EnumerationBudget small;
  small.max_words = 100;
  try {
    (void)bounded_census("0", "1", kBinary, Relation::Eq, 7, small);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("for_each_word visits in shortlex order") {
  std::vector<std::string> seen;
  for_each_word(Alphabet("ba"), 2, [&](const Word& w) { seen.push_back(w.str()); });
  CHECK(seen == std::vector<std::string>{"", "b", "a", "bb", "ba", "ab", "aa"});
  CHECK(checked_word_count(kBinary, 3, {}) == 15);
}

TEST_CASE("bounded_equivalence") {
  const Dfa fig = build_comparison_dfa("01", "10", kBinary, Relation::Eq);
  CHECK_FALSE(bounded_equivalence(fig, "01", "10", Relation::Eq, 12).has_value());
  CHECK(bounded_equivalence(complement(fig), "01", "10", Relation::Eq, 12) == Word(""));

  const Dfa le = build_comparison_dfa("0", "01", kBinary, Relation::Le);
  CHECK_FALSE(bounded_equivalence(le, "0", "01", Relation::Le, 12).has_value());
  CHECK_FALSE(bounded_equivalence(complement(le), "0", "01", Relation::Gt, 12).has_value());
  CHECK(bounded_equivalence(le, "0", "01", Relation::Lt, 12) == Word(""));
}

TEST_CASE("enumerate_bordered examples") {
  const auto alfa = enumerate_bordered("alfa", Alphabet("alf"), 7);
  CHECK(std::find(alfa.begin(), alfa.end(), Word("alfalfa")) != alfa.end());
  CHECK(enumerate_bordered("01", kBinary, 4) == std::vector<Word>{"0101"});
  CHECK(enumerate_bordered("aa", Alphabet("a"), 4) == std::vector<Word>{"aaa", "aaaa"});
  CHECK_THROWS_AS((void)enumerate_bordered("", kBinary, 4), Error);
}

TEST_CASE("enumerate_bordered equals the filtered universe and the grafted automaton") {
  for (const auto& y : brute::nonempty_words("01", 4)) {
    const Dfa g = grafted_bordered_automaton(y, kBinary);
    for (std::size_t max_len = y.size() + 1; max_len <= 10; ++max_len) {
      std::vector<Word> expected;
      for (const auto& z : brute::words("01", max_len)) {
        if (brute::bordered(z, y)) expected.push_back(z);
      }
      const auto got = enumerate_bordered(y, kBinary, max_len);
      REQUIRE(got == expected);
      for (const auto& z : got) REQUIRE(g.accepts(z));
    }
  }
}

#include <doctest.h>

#include <string>

#include "support/brute.hpp"
#include "wordreg/error.hpp"
#include "wordreg/interlace.hpp"

using namespace wordreg;

namespace {

const Alphabet kBinary("01");
const Alphabet kTernary("012");

bool filler_test(const std::string& x, const std::string& y, const std::string& symbols,
                 std::size_t len) {
  for (const auto& t : brute::words(symbols, len, len)) {
    if (!brute::contains(y + t + y, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("avoider automaton examples") {
  CHECK_FALSE(shortest_accepted(avoider_automaton("1000", "000100", kBinary)).has_value());
  CHECK(brute::bordered_avoider("1000", "000100", "01", 16).empty());
  CHECK_FALSE(shortest_accepted(avoider_automaton("10", "01", kBinary)).has_value());
  CHECK(brute::bordered_avoider("10", "01", "01", 19).empty());
  CHECK(shortest_accepted(avoider_automaton("10", "01", kTernary)) == Word("01201"));
  CHECK(avoider_state_bound("10", "01") == 21);
}

TEST_CASE("is_interlaced_by examples") {
  const auto golden = is_interlaced_by("000100", "1000", kBinary);
  CHECK(golden.holds);
  CHECK_FALSE(golden.witness.has_value());

  const auto neg = is_interlaced_by("01", "10", kTernary);
  CHECK_FALSE(neg.holds);
  CHECK(neg.witness == Word("01201"));

  CHECK(is_interlaced_by("a", "a", Alphabet("a")).holds);
  CHECK_THROWS_AS((void)is_interlaced_by("", "a", Alphabet("a")), Error);
}

TEST_CASE("general method matches brute force on small binary and ternary grids") {
  for (const auto& x : brute::nonempty_words("01", 3)) {
    for (const auto& y : brute::nonempty_words("01", 3)) {
      const auto v = is_interlaced_by(x, y, kBinary);
      // Shortest witnesses on this grid have length at most 12.
      const std::string w = brute::bordered_avoider(y, x, "01", 14);
      REQUIRE(v.holds == w.empty());
      if (!v.holds) REQUIRE(v.witness->str() == w);
    }
  }
  for (const auto& x : brute::nonempty_words("012", 2)) {
    for (const auto& y : brute::nonempty_words("012", 2)) {
      const auto v = is_interlaced_by(x, y, kTernary);
      const std::string w = brute::bordered_avoider(y, x, "012", 9);
      REQUIRE(v.holds == w.empty());
    }
  }
}

TEST_CASE("fast_single_letter") {
  CHECK_FALSE(fast_single_letter("10", "01", kTernary));
  CHECK(first_failing_filler("10", "01", kTernary, 1) == Word("2"));
  CHECK(fast_single_letter("1", "0110", kTernary));
  CHECK_THROWS_AS((void)fast_single_letter("0", "1", kBinary), Error);
  for (const auto& x : brute::nonempty_words("012", 3)) {
    for (const auto& y : brute::nonempty_words("012", 3)) {
      REQUIRE(fast_single_letter(x, y, kTernary) == filler_test(x, y, "012", 1));
      REQUIRE(fast_single_letter(x, y, kTernary) == is_interlaced_by(y, x, kTernary).holds);
    }
  }
}

TEST_CASE("fast_length_three") {
  CHECK_FALSE(fast_length_three("10100", "01001010", kBinary));
  CHECK(first_failing_filler("10100", "01001010", kBinary, 3) == Word("110"));
  CHECK(fast_length_three("0", "0", kBinary));
  CHECK_THROWS_AS((void)fast_length_three("0", "1", kTernary), Error);
  for (const auto& x : brute::nonempty_words("01", 4)) {
    for (const auto& y : brute::nonempty_words("01", 5)) {
      REQUIRE(fast_length_three(x, y, kBinary) == filler_test(x, y, "01", 3));
      REQUIRE(fast_length_three(x, y, kBinary) == is_interlaced_by(y, x, kBinary).holds);
    }
  }
}

TEST_CASE("length three is needed") {
  const std::string x = "10100";
  const std::string y = "01001010";
  for (std::size_t len = 0; len <= 2; ++len) CHECK(filler_test(x, y, "01", len));
  for (const auto& t : brute::words("01", 3, 3)) {
    CHECK(brute::contains(y + t + y, x) == (t != "110"));
  }
  // Every y-bordered word up to length 18 still contains x.
  CHECK(brute::bordered_avoider(x, y, "01", 18).empty());
  const auto v = is_interlaced_by(y, x, kBinary);
  REQUIRE_FALSE(v.holds);
  CHECK(brute::contains(v.witness->str(), y + "110" + y));
}

TEST_CASE("class A") {
  CHECK(in_class_A("0001", kBinary));
  CHECK(in_class_A("01", kBinary));
  CHECK(in_class_A("10", kBinary));
  CHECK(in_class_A("0111", kBinary));
  CHECK(in_class_A("1110", kBinary));
  CHECK_FALSE(in_class_A("10100", kBinary));
  CHECK_FALSE(in_class_A("0", kBinary));
  CHECK_FALSE(in_class_A("0110", kBinary));
  CHECK_THROWS_AS((void)in_class_A("01", kTernary), Error);
}

TEST_CASE("B_x membership") {
  CHECK(in_B_x("0100", "001", kBinary));
  CHECK_FALSE(in_B_x("0010", "001", kBinary));
  try {
    (void)in_B_x("01", "0110", kBinary);
    FAIL("expected NotInClassA");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInClassA);
  }
  for (const auto& x : brute::nonempty_words("01", 4)) {
    if (!in_class_A(x, kBinary)) continue;
    for (const auto& y : brute::nonempty_words("01", 8)) {
      const bool expected = !brute::contains(y, x) && is_interlaced_by(y, x, kBinary).holds;
      REQUIRE(in_B_x(y, x, kBinary) == expected);
    }
  }
}

TEST_CASE("dispatch consistency") {
  for (const auto& x : brute::nonempty_words("01", 4)) {
    for (const auto& y : brute::nonempty_words("01", 4)) {
      const auto general = decide_interlacing(x, y, kBinary, MethodChoice::General);
      const auto fast = decide_interlacing(x, y, kBinary, MethodChoice::Fast);
      const auto byclass = decide_interlacing_by_class(x, y, kBinary);
      REQUIRE(general.method == InterlaceMethod::GeneralAutomaton);
      REQUIRE(fast.method == InterlaceMethod::LengthThree);
      REQUIRE(byclass.method == InterlaceMethod::ClassAB);
      REQUIRE(general.holds == fast.holds);
      REQUIRE(general.holds == byclass.holds);
      REQUIRE(decide_interlacing(x, y, kBinary).holds == general.holds);
      if (!fast.holds) {
        REQUIRE(fast.witness.has_value());
        REQUIRE(brute::bordered(fast.witness->str(), x));
        REQUIRE_FALSE(brute::contains(fast.witness->str(), y));
      }
    }
  }
  for (const auto& x : brute::nonempty_words("012", 3)) {
    for (const auto& y : brute::nonempty_words("012", 3)) {
      const auto general = decide_interlacing(x, y, kTernary, MethodChoice::General);
      const auto fast = decide_interlacing(x, y, kTernary, MethodChoice::Fast);
      REQUIRE(fast.method == InterlaceMethod::SingleLetter);
      REQUIRE(general.holds == fast.holds);
    }
  }
  const Alphabet unary("a");
  CHECK(decide_interlacing("aa", "a", unary, MethodChoice::Fast).holds);
  CHECK(decide_interlacing("a", "aa", unary, MethodChoice::Fast).holds);
  CHECK(decide_interlacing("a", "aa", unary, MethodChoice::Fast).method == InterlaceMethod::GeneralAutomaton);
}

TEST_CASE("counting bound on small exhaustive grids") {
  const auto texts = brute::words("01", 10);
  for (const auto& x : brute::nonempty_words("01", 3)) {
    for (const auto& y : brute::nonempty_words("01", 3)) {
      if (!is_interlaced_by(x, y, kBinary).holds) continue;
      for (const auto& t : texts) REQUIRE(brute::count(t, y) + 1 >= brute::count(t, x));
    }
  }
}

TEST_CASE("method names") {
  CHECK(to_string(InterlaceMethod::GeneralAutomaton) == "general");
  CHECK(to_string(InterlaceMethod::SingleLetter) == "single-letter");
  CHECK(to_string(InterlaceMethod::LengthThree) == "length-three");
  CHECK(to_string(InterlaceMethod::ClassAB) == "class-ab");
}

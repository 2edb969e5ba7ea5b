#include "wordreg/interlace.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>
#include <string>

#include "wordreg/error.hpp"

namespace wordreg {

namespace {

void check_inputs(const Word& x, const Word& y, const Alphabet& alphabet) {
  if (x.empty() || y.empty()) throw Error(Errc::EmptyPattern, "words must be nonempty");
  alphabet.validate(x);
  alphabet.validate(y);
}

void require_binary(const Alphabet& alphabet) {
  if (alphabet.size() != 2) {
    throw Error(Errc::AlphabetNotBinary,
                "this test needs a binary alphabet, got {" + alphabet.symbols() + "}");
  }
}

// Shortlex scan of Sigma^len; returns the first word satisfying pred.
template <typename Predicate>
std::optional<Word> first_word_where(const Alphabet& alphabet, std::size_t len, Predicate pred) {
  std::vector<std::size_t> digits(len, 0);
  std::string w(len, alphabet.symbol(0));
  while (true) {
    if (pred(Word{w})) return Word{w};
    std::size_t i = len;
    while (i > 0 && digits[i - 1] + 1 == alphabet.size()) {
      digits[i - 1] = 0;
      w[i - 1] = alphabet.symbol(0);
      --i;
    }
    if (i == 0) return std::nullopt;
    ++digits[i - 1];
    w[i - 1] = alphabet.symbol(digits[i - 1]);
  }
}

std::string escape(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return std::string(1, c);
  return std::string("\\") + c;
}

std::string repeat(const std::string& s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += s;
  return out;
}

// (b | a b | ... | a^{k-1} b)
std::string alternation(const std::string& a, const std::string& b, std::size_t k,
                        bool leading) {
  std::string out = "(?:";
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) out += "|";
    out += leading ? repeat(a, i) + b : b + repeat(a, i);
  }
  return out + ")";
}

bool is_run_then_letter(const Word& x, char run, char last) {
  if (x.size() < 2 || x[x.size() - 1] != last) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != run) return false;
  }
  return true;
}

bool is_letter_then_run(const Word& x, char first, char run) {
  if (x.size() < 2 || x[0] != first) return false;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] != run) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(InterlaceMethod method) noexcept {
  switch (method) {
    case InterlaceMethod::GeneralAutomaton: return "general";
    case InterlaceMethod::SingleLetter: return "single-letter";
    case InterlaceMethod::LengthThree: return "length-three";
    case InterlaceMethod::ClassAB: return "class-ab";
  }
  return "?";
}

std::size_t avoider_state_bound(const Word& pattern, const Word& border) {
  return (pattern.size() + 1) * (2 * border.size() + 3);
}

Dfa avoider_automaton(const Word& x, const Word& y, const Alphabet& alphabet) {
  check_inputs(x, y, alphabet);
  return combine(grafted_bordered_automaton(y, alphabet),
                 complement(matcher_automaton(x, alphabet, MatchMode::AbsorbingSubword)),
                 BoolOp::And);
}

InterlaceVerdict is_interlaced_by(const Word& x, const Word& y, const Alphabet& alphabet) {
  auto witness = shortest_accepted(avoider_automaton(y, x, alphabet));
  return InterlaceVerdict{!witness.has_value(), std::move(witness),
                          InterlaceMethod::GeneralAutomaton};
}

std::optional<Word> first_failing_filler(const Word& x, const Word& y, const Alphabet& alphabet,
                                         std::size_t filler_length) {
  return first_word_where(alphabet, filler_length,
                          [&](const Word& t) { return !(y + t + y).contains(x); });
}

bool fast_single_letter(const Word& x, const Word& y, const Alphabet& alphabet) {
  check_inputs(x, y, alphabet);
  if (alphabet.size() < 3) {
    throw Error(Errc::AlphabetTooSmall, "the single-letter test needs at least three symbols");
  }
  return !first_failing_filler(x, y, alphabet, 1).has_value();
}

bool fast_length_three(const Word& x, const Word& y, const Alphabet& alphabet) {
  check_inputs(x, y, alphabet);
  require_binary(alphabet);
  return !first_failing_filler(x, y, alphabet, 3).has_value();
}

bool in_class_A(const Word& x, const Alphabet& alphabet) {
  require_binary(alphabet);
  if (x.empty()) throw Error(Errc::EmptyPattern, "class A membership of the empty word");
  alphabet.validate(x);
  const char zero = alphabet.symbol(0);
  const char one = alphabet.symbol(1);
  return is_letter_then_run(x, zero, one) || is_letter_then_run(x, one, zero) ||
         is_run_then_letter(x, zero, one) || is_run_then_letter(x, one, zero);
}

std::string class_B_pattern(const Word& x, const Alphabet& alphabet) {
  if (!in_class_A(x, alphabet)) {
    throw Error(Errc::NotInClassA, "\"" + x.str() + "\" is not in class A");
  }
  const std::string zero = escape(alphabet.symbol(0));
  const std::string one = escape(alphabet.symbol(1));
  const std::size_t k = x.size() - 1;

  // B_{a^k b} = (b + ab + ... + a^{k-1} b)^+ a^k a^*
  const auto run_then_letter = [&](const std::string& a, const std::string& b) {
    return alternation(a, b, k, true) + "+" + repeat(a, k) + a + "*";
  };
  // B_{b a^k} = a^* a^k (b + ba + ... + ba^{k-1})^+
  const auto letter_then_run = [&](const std::string& b, const std::string& a) {
    return a + "*" + repeat(a, k) + alternation(a, b, k, false) + "+";
  };

  if (is_run_then_letter(x, alphabet.symbol(0), alphabet.symbol(1))) return run_then_letter(zero, one);
  if (is_run_then_letter(x, alphabet.symbol(1), alphabet.symbol(0))) return run_then_letter(one, zero);
  if (is_letter_then_run(x, alphabet.symbol(1), alphabet.symbol(0))) return letter_then_run(one, zero);
  return letter_then_run(zero, one);
}

bool in_B_x(const Word& y, const Word& x, const Alphabet& alphabet) {
  const std::regex pattern(class_B_pattern(x, alphabet));
  alphabet.validate(y);
  return std::regex_match(y.str(), pattern);
}

namespace {

InterlaceVerdict fast_verdict(const Word& x, const Word& y, const Alphabet& alphabet,
                              std::size_t filler_length, InterlaceMethod method) {
  auto t = first_failing_filler(y, x, alphabet, filler_length);
  if (!t) return InterlaceVerdict{true, std::nullopt, method};
  return InterlaceVerdict{false, x + *t + x, method};
}

}  // namespace

InterlaceVerdict decide_interlacing(const Word& x, const Word& y, const Alphabet& alphabet,
                                    MethodChoice choice) {
  check_inputs(x, y, alphabet);
  if (choice == MethodChoice::General || alphabet.size() == 1) {
    return is_interlaced_by(x, y, alphabet);
  }
  if (alphabet.size() == 2) {
    return fast_verdict(x, y, alphabet, 3, InterlaceMethod::LengthThree);
  }
  return fast_verdict(x, y, alphabet, 1, InterlaceMethod::SingleLetter);
}

InterlaceVerdict decide_interlacing_by_class(const Word& x, const Word& y,
                                             const Alphabet& alphabet) {
  check_inputs(x, y, alphabet);
  require_binary(alphabet);
  // y occurs in every x-bordered word iff y occurs in x, or y ∈ A and x ∈ B_y.
  const bool holds = x.contains(y) || (in_class_A(y, alphabet) && in_B_x(x, y, alphabet));
  if (holds) return InterlaceVerdict{true, std::nullopt, InterlaceMethod::ClassAB};
  auto t = first_failing_filler(y, x, alphabet, 3);
  if (!t) {
    throw std::logic_error("class A/B characterization disagrees with the length-three test");
  }
  return InterlaceVerdict{false, x + *t + x, InterlaceMethod::ClassAB};
}

}  // namespace wordreg

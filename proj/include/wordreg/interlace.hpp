#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "wordreg/automata.hpp"
#include "wordreg/words.hpp"

namespace wordreg {

// Orientation: "x is interlaced by y" means y occurs in every x-bordered
// word. The constant-length tests are phrased from the other side: they ask
// whether a pattern occurs in every bordered word of a given border, which
// is "border is interlaced by pattern".

enum class InterlaceMethod { GeneralAutomaton, SingleLetter, LengthThree, ClassAB };

std::string_view to_string(InterlaceMethod method) noexcept;

/// Which procedure the dispatcher may choose.
enum class MethodChoice { Auto, General, Fast };

struct InterlaceVerdict {
  bool holds = false;
  /// Present iff !holds: a bordered word that avoids the pattern.
  std::optional<Word> witness;
  InterlaceMethod method = InterlaceMethod::GeneralAutomaton;
};

/// (|pattern| + 1)(2|border| + 3), the state bound of the avoider automaton.
[[nodiscard]] std::size_t avoider_state_bound(const Word& pattern, const Word& border);

/// DFA for the y-bordered words that do not contain x.
[[nodiscard]] Dfa avoider_automaton(const Word& x, const Word& y, const Alphabet& alphabet);

/// General automaton method: is x interlaced by y? The witness, when the
/// answer is no, is the length-lexicographically least x-bordered word
/// avoiding y.
[[nodiscard]] InterlaceVerdict is_interlaced_by(const Word& x, const Word& y,
                                                const Alphabet& alphabet);

/// |alphabet| >= 3: x occurs in y t y for every letter t, which holds iff
/// y is interlaced by x.
[[nodiscard]] bool fast_single_letter(const Word& x, const Word& y, const Alphabet& alphabet);

/// Binary alphabet: x occurs in y t y for all eight t of length 3, which
/// holds iff y is interlaced by x.
[[nodiscard]] bool fast_length_three(const Word& x, const Word& y, const Alphabet& alphabet);

/// First filler t (in shortlex order, of the given length) with x absent from y t y.
[[nodiscard]] std::optional<Word> first_failing_filler(const Word& x, const Word& y,
                                                       const Alphabet& alphabet,
                                                       std::size_t filler_length);

/// x ∈ 01+ ∪ 10+ ∪ 0+1 ∪ 1+0, where 0 and 1 are the first and second symbol
/// of the binary alphabet.
[[nodiscard]] bool in_class_A(const Word& x, const Alphabet& alphabet);

/// y ∈ B_x for x in class A: x does not occur in y but occurs in every
/// y-bordered word. Decided by the explicit regular expression for x's shape.
[[nodiscard]] bool in_B_x(const Word& y, const Word& x, const Alphabet& alphabet);

/// The regular expression (ECMAScript syntax) used by in_B_x.
[[nodiscard]] std::string class_B_pattern(const Word& x, const Alphabet& alphabet);

/// Public entry point: decides whether x is interlaced by y, choosing the
/// constant-length test when the alphabet admits one. A negative fast-path
/// verdict carries the witness x t x built from the failing filler t.
[[nodiscard]] InterlaceVerdict decide_interlacing(const Word& x, const Word& y,
                                                  const Alphabet& alphabet,
                                                  MethodChoice choice = MethodChoice::Auto);

/// Binary alphabets only: decides whether x is interlaced by y from the
/// class A / B_x characterization (y occurs in x, or y ∈ A and x ∈ B_y).
[[nodiscard]] InterlaceVerdict decide_interlacing_by_class(const Word& x, const Word& y,
                                                           const Alphabet& alphabet);

}  // namespace wordreg

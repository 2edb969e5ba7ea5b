#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "wordreg/words.hpp"

namespace wordreg {

struct DeBruijnWord {
  Word word;
  std::size_t order = 0;
  std::size_t alphabet_size = 0;
};

enum class Finiteness { Finite, Infinite, Unknown };

std::string_view to_string(Finiteness f) noexcept;

/// L_{x=y} is finite iff the alphabet is unary and x != y.
[[nodiscard]] bool is_finite_pair(const Word& x, const Word& y, const Alphabet& alphabet);

/// Least cyclic de Bruijn word of the given order, built by concatenating
/// the Lyndon words whose length divides the order (in lexicographic order).
[[nodiscard]] DeBruijnWord de_bruijn_word(std::size_t order, const Alphabet& alphabet);

/// w^i w' with w the de Bruijn word of order |pattern| and w' its prefix of
/// length |pattern| - 1; every pattern occurs exactly i times in it.
[[nodiscard]] Word equal_length_family(std::span<const Word> patterns, const Alphabet& alphabet,
                                       std::size_t i);

/// Finiteness of L_{x_1 = ... = x_n}: decided for pairs and for patterns of
/// a common length, Unknown otherwise.
[[nodiscard]] Finiteness multi_pattern_finiteness(std::span<const Word> patterns,
                                                  const Alphabet& alphabet);

}  // namespace wordreg

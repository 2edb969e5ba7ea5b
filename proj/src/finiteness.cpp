#include "wordreg/finiteness.hpp"

#include <algorithm>
#include <set>

#include "wordreg/error.hpp"

namespace wordreg {

std::string_view to_string(Finiteness f) noexcept {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Infinite: return "infinite";
    case Finiteness::Unknown: return "unknown";
  }
  return "?";
}

bool is_finite_pair(const Word& x, const Word& y, const Alphabet& alphabet) {
  if (x.empty() || y.empty()) throw Error(Errc::EmptyPattern, "words must be nonempty");
  alphabet.validate(x);
  alphabet.validate(y);
  return alphabet.size() == 1 && x != y;
}

DeBruijnWord de_bruijn_word(std::size_t order, const Alphabet& alphabet) {
  const std::size_t k = alphabet.size();
  if (k < 2) throw Error(Errc::AlphabetTooSmall, "de Bruijn words need at least two symbols");
  if (order == 0) throw Error(Errc::InvalidArgument, "de Bruijn order must be positive");

  // Fredricksen-Kessler-Maiorana: walk the Lyndon words of length <= order in
  // lexicographic order and keep those whose length divides the order.
  std::string out;
  std::vector<std::size_t> word(order, 0);
  std::size_t len = 1;
  while (true) {
    if (order % len == 0) {
      for (std::size_t j = 0; j < len; ++j) out += alphabet.symbol(word[j]);
    }
    for (std::size_t j = len; j < order; ++j) word[j] = word[j - len];
    len = order;
    while (len > 0 && word[len - 1] == k - 1) --len;
    if (len == 0) break;
    ++word[len - 1];
  }
  return DeBruijnWord{Word{std::move(out)}, order, k};
}

namespace {

void check_patterns(std::span<const Word> patterns, const Alphabet& alphabet) {
  if (patterns.empty()) throw Error(Errc::InvalidArgument, "at least one pattern is required");
  std::set<Word> seen;
  for (const auto& p : patterns) {
    if (p.empty()) throw Error(Errc::EmptyPattern, "patterns must be nonempty");
    alphabet.validate(p);
    if (!seen.insert(p).second) {
      throw Error(Errc::DuplicatePattern, "pattern \"" + p.str() + "\" is repeated");
    }
  }
}

bool equal_lengths(std::span<const Word> patterns) {
  return std::all_of(patterns.begin(), patterns.end(),
                     [&](const Word& p) { return p.size() == patterns.front().size(); });
}

}  // namespace

Word equal_length_family(std::span<const Word> patterns, const Alphabet& alphabet,
                         std::size_t i) {
  check_patterns(patterns, alphabet);
  if (!equal_lengths(patterns)) {
    throw Error(Errc::UnequalLengths, "patterns must all have the same length");
  }
  if (i == 0) throw Error(Errc::InvalidArgument, "family index must be at least 1");
  const std::size_t order = patterns.front().size();
  const Word w = de_bruijn_word(order, alphabet).word;
  return w.power(i) + w.prefix(order - 1);
}

Finiteness multi_pattern_finiteness(std::span<const Word> patterns, const Alphabet& alphabet) {
  check_patterns(patterns, alphabet);
  if (patterns.size() == 1) return Finiteness::Infinite;
  if (patterns.size() == 2) {
    return is_finite_pair(patterns[0], patterns[1], alphabet) ? Finiteness::Finite
                                                              : Finiteness::Infinite;
  }
  if (alphabet.size() >= 2 && equal_lengths(patterns)) return Finiteness::Infinite;
  return Finiteness::Unknown;
}

}  // namespace wordreg

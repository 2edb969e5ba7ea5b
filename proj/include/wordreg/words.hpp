#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordreg {

class Word;

/// Ordered finite set of single-character symbols.
///
/// The declaration order is the symbol order used for every lexicographic
/// tie-break in the library (BFS witnesses, canonical DFA numbering,
/// de Bruijn words).
class Alphabet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit Alphabet(std::string_view symbols);

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] char symbol(std::size_t index) const { return symbols_.at(index); }
  [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }

  [[nodiscard]] bool contains(char c) const noexcept {
    return index_[static_cast<unsigned char>(c)] != kAbsent;
  }
  /// Position of `c` in the declared order, or npos.
  [[nodiscard]] std::size_t index_of(char c) const noexcept {
    auto i = index_[static_cast<unsigned char>(c)];
    return i == kAbsent ? npos : static_cast<std::size_t>(i);
  }

  /// Throws Errc::ForeignSymbol when `w` uses a symbol outside the alphabet.
  void validate(const Word& w) const;
  [[nodiscard]] bool admits(const Word& w) const noexcept;

  /// Length-lexicographic order, ties broken by the declared symbol order.
  [[nodiscard]] bool shortlex_less(const Word& a, const Word& b) const;

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  static constexpr std::int16_t kAbsent = -1;
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// Finite sequence of symbols.
///
/// Indexing with operator[] is 0-based; slice() takes 1-based inclusive
/// bounds, so w.slice(i, j) is the factor a_i ... a_j of w = a_1 ... a_n.
class Word {
 public:
  Word() = default;
  Word(std::string letters) : letters_(std::move(letters)) {}  // NOLINT
  Word(std::string_view letters) : letters_(letters) {}        // NOLINT
  Word(const char* letters) : letters_(letters) {}             // NOLINT

  [[nodiscard]] const std::string& str() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }

  [[nodiscard]] Word slice(std::size_t first, std::size_t last) const;
  [[nodiscard]] Word prefix(std::size_t n) const { return Word{letters_.substr(0, n)}; }
  [[nodiscard]] Word suffix(std::size_t n) const;

  [[nodiscard]] bool contains(const Word& factor) const noexcept {
    return letters_.find(factor.letters_) != std::string::npos;
  }
  [[nodiscard]] bool starts_with(const Word& w) const noexcept {
    return letters_.starts_with(w.letters_);
  }
  [[nodiscard]] bool ends_with(const Word& w) const noexcept {
    return letters_.ends_with(w.letters_);
  }

  [[nodiscard]] Word power(std::size_t k) const;
  [[nodiscard]] Word reversed() const;

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  Word& operator+=(char c) {
    letters_ += c;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

enum class BorderKind { NotBordered, Disjoint, Overlapping };

std::string_view to_string(BorderKind kind) noexcept;

/// y = (uv)^e u and z = (uv)^{e+1} u for a y-bordered word z.
struct BorderDecomposition {
  Word u;
  Word v;
  std::size_t e = 0;

  [[nodiscard]] Word period() const { return u + v; }
  [[nodiscard]] Word border() const { return period().power(e) + u; }
  [[nodiscard]] Word bordered() const { return period().power(e + 1) + u; }

  bool operator==(const BorderDecomposition&) const = default;
};

/// c = |(uv)^{e+1}|_y and d = |(uv)^{e+2}|_y - c, so that
/// |(uv)^i|_y = (i - e) d + c - d for every i > e.
struct PowerCountParams {
  std::size_t c = 0;
  std::size_t d = 0;

  bool operator==(const PowerCountParams&) const = default;
};

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

/// Number of possibly overlapping occurrences of `pattern` in `text`.
[[nodiscard]] std::size_t count_occurrences(const Word& text, const Word& pattern);

/// KMP failure table: fail[i] is the longest proper border of pattern[0..i).
/// fail has |pattern| + 1 entries and fail[0] = 0.
[[nodiscard]] std::vector<std::size_t> failure_table(const Word& pattern);

/// All proper border lengths of `w`, ascending.
[[nodiscard]] std::vector<std::size_t> border_lengths(const Word& w);

[[nodiscard]] BorderKind classify_bordered(const Word& z, const Word& y);
[[nodiscard]] inline bool is_bordered(const Word& z, const Word& y) {
  return classify_bordered(z, y) != BorderKind::NotBordered;
}

[[nodiscard]] BorderDecomposition decompose_bordered(const Word& z, const Word& y);
[[nodiscard]] PowerCountParams power_count_params(const BorderDecomposition& dec,
                                                  const Word& y);

[[nodiscard]] PrimitiveRoot primitive_root(const Word& w);
[[nodiscard]] bool commutes(const Word& a, const Word& b);

}  // namespace wordreg

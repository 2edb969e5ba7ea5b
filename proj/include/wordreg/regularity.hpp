#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "wordreg/automata.hpp"
#include "wordreg/error.hpp"
#include "wordreg/interlace.hpp"
#include "wordreg/words.hpp"

namespace wordreg {

/// Comparison between |z|_x and |z|_y. Gt, Ge and Ne are the complements
/// of Le, Lt and Eq.
enum class Relation { Lt, Le, Eq, Gt, Ge, Ne };

std::string_view to_string(Relation rel) noexcept;
/// Accepts "lt", "le", "eq", "gt", "ge", "ne". Throws InvalidArgument.
Relation parse_relation(std::string_view text);

[[nodiscard]] constexpr bool holds(Relation rel, std::size_t a, std::size_t b) noexcept {
  switch (rel) {
    case Relation::Lt: return a < b;
    case Relation::Le: return a <= b;
    case Relation::Eq: return a == b;
    case Relation::Gt: return a > b;
    case Relation::Ge: return a >= b;
    case Relation::Ne: return a != b;
  }
  return false;
}

/// The relation whose language is the complement.
[[nodiscard]] Relation negate(Relation rel) noexcept;
/// rel(a, b) == swap_sides(rel)(b, a).
[[nodiscard]] Relation swap_sides(Relation rel) noexcept;

enum class Direction { XInterlacedByY, YInterlacedByX, Both };

std::string_view to_string(Direction d) noexcept;

/// Data consumed by the pumping argument when neither interlacing holds.
///
/// r is y-bordered and avoids x; s is x-bordered and avoids y. With
/// y = (uv)^e u and x = (pq)^f p, the word (uv)^i (pq)^j for i > e, j > f
/// contains x exactly (j-f)d' + c' - d' + m times and y exactly
/// (i-e)d + c - d + n times.
struct NonRegularityCertificate {
  Word x;
  Word y;
  Word r;
  Word s;
  BorderDecomposition dec_r;  // (u, v, e)
  BorderDecomposition dec_s;  // (p, q, f)
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t c_prime = 0;
  std::size_t d_prime = 0;
  std::size_t m = 0;
  std::size_t n = 0;

  /// (uv)^i (pq)^j
  [[nodiscard]] Word pumped(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::size_t predicted_x_count(std::size_t j) const;
  [[nodiscard]] std::size_t predicted_y_count(std::size_t i) const;
};

struct RegularityOutcome {
  bool regular = false;
  std::optional<Direction> direction;
  std::optional<NonRegularityCertificate> certificate;
};

/// Raised by build_comparison_dfa for a non-regular pair.
class NotRegularError : public Error {
 public:
  explicit NotRegularError(NonRegularityCertificate certificate);
  [[nodiscard]] const NonRegularityCertificate& certificate() const noexcept {
    return certificate_;
  }

 private:
  NonRegularityCertificate certificate_;
};

/// Occurrences of `pattern` in left·right whose first letter lies in
/// left and whose last letter lies in right.
[[nodiscard]] std::size_t straddle_count(const Word& left, const Word& right,
                                         const Word& pattern);

[[nodiscard]] RegularityOutcome decide_regularity(const Word& x, const Word& y,
                                                  const Alphabet& alphabet,
                                                  MethodChoice choice = MethodChoice::Auto);

/// Minimal DFA for { z : rel(|z|_x, |z|_y) }. Throws NotRegularError.
[[nodiscard]] Dfa build_comparison_dfa(const Word& x, const Word& y, const Alphabet& alphabet,
                                       Relation rel);

/// Throws Errc::CriterionHolds when either interlacing direction holds.
[[nodiscard]] NonRegularityCertificate non_regularity_certificate(const Word& x, const Word& y,
                                                                  const Alphabet& alphabet);

/// Re-derives every certificate invariant by direct counting. Returns an
/// empty string when the certificate is valid, otherwise the first failure.
[[nodiscard]] std::string check_certificate(const NonRegularityCertificate& cert,
                                            std::size_t extra_powers = 4);

[[nodiscard]] std::string certificate_to_json(const NonRegularityCertificate& cert);

}  // namespace wordreg

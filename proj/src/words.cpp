#include "wordreg/words.hpp"

#include <algorithm>

#include "wordreg/error.hpp"

namespace wordreg {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(kAbsent);
  if (symbols_.empty()) throw Error(Errc::InvalidAlphabet, "alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
    if (slot != kAbsent) {
      throw Error(Errc::InvalidAlphabet,
                  std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

bool Alphabet::admits(const Word& w) const noexcept {
  return std::all_of(w.str().begin(), w.str().end(), [this](char c) { return contains(c); });
}

void Alphabet::validate(const Word& w) const {
  for (char c : w.str()) {
    if (!contains(c)) {
      throw Error(Errc::ForeignSymbol, std::string("symbol '") + c + "' of word \"" + w.str() +
                                           "\" is not in alphabet {" + symbols_ + "}");
    }
  }
}

bool Alphabet::shortlex_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return index_of(a[i]) < index_of(b[i]);
  }
  return false;
}

Word Word::slice(std::size_t first, std::size_t last) const {
  if (first == 0 || last < first) return Word{};
  return Word{letters_.substr(first - 1, last - first + 1)};
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return Word{letters_.substr(letters_.size() - n)};
}

Word Word::power(std::size_t k) const {
  std::string out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += letters_;
  return Word{std::move(out)};
}

Word Word::reversed() const { return Word{std::string(letters_.rbegin(), letters_.rend())}; }

std::string_view to_string(BorderKind kind) noexcept {
  switch (kind) {
    case BorderKind::NotBordered: return "NotBordered";
    case BorderKind::Disjoint: return "Disjoint";
    case BorderKind::Overlapping: return "Overlapping";
  }
  return "?";
}

std::vector<std::size_t> failure_table(const Word& pattern) {
  const auto& p = pattern.str();
  std::vector<std::size_t> fail(p.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    while (k > 0 && p[i] != p[k]) k = fail[k];
    if (p[i] == p[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

std::size_t count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
  if (pattern.size() > text.size()) return 0;
  const auto fail = failure_table(pattern);
  const auto& p = pattern.str();
  std::size_t count = 0;
  std::size_t k = 0;
  for (char c : text.str()) {
    while (k > 0 && (k == p.size() || c != p[k])) k = fail[k];
    if (c == p[k]) ++k;
    if (k == p.size()) ++count;
  }
  return count;
}

std::vector<std::size_t> border_lengths(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "border_lengths of the empty word");
  const auto fail = failure_table(w);
  std::vector<std::size_t> out;
  for (std::size_t b = fail[w.size()]; b > 0; b = fail[b]) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

BorderKind classify_bordered(const Word& z, const Word& y) {
  if (y.empty()) throw Error(Errc::EmptyPattern, "border word must be nonempty");
  if (z == y || !z.starts_with(y) || !z.ends_with(y)) return BorderKind::NotBordered;
  return 2 * y.size() <= z.size() ? BorderKind::Disjoint : BorderKind::Overlapping;
}

BorderDecomposition decompose_bordered(const Word& z, const Word& y) {
  if (classify_bordered(z, y) == BorderKind::NotBordered) {
    throw Error(Errc::NotBorderedInput,
                "\"" + z.str() + "\" is not \"" + y.str() + "\"-bordered");
  }
  // z has period p = |z| - |y|; take e maximal with u nonempty.
  const std::size_t period = z.size() - y.size();
  const std::size_t e = (y.size() - 1) / period;
  const std::size_t ulen = y.size() - e * period;
  return BorderDecomposition{y.prefix(ulen), z.slice(ulen + 1, period), e};
}

PowerCountParams power_count_params(const BorderDecomposition& dec, const Word& y) {
  if (dec.u.empty() || dec.border() != y) {
    throw Error(Errc::InconsistentDecomposition,
                "(uv)^e u does not reconstruct \"" + y.str() + "\"");
  }
  const Word uv = dec.period();
  const std::size_t c = count_occurrences(uv.power(dec.e + 1), y);
  const std::size_t next = count_occurrences(uv.power(dec.e + 2), y);
  return PowerCountParams{c, next - c};
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "primitive_root of the empty word");
  const auto fail = failure_table(w);
  const std::size_t period = w.size() - fail[w.size()];
  if (w.size() % period != 0) return PrimitiveRoot{w, 1};
  return PrimitiveRoot{w.prefix(period), w.size() / period};
}

bool commutes(const Word& a, const Word& b) { return a + b == b + a; }

}  // namespace wordreg

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordreg {

enum class Errc {
  EmptyPattern,
  EmptyWord,
  ForeignSymbol,
  InvalidAlphabet,
  NotBorderedInput,
  InconsistentDecomposition,
  AlphabetMismatch,
  MalformedJson,
  AlphabetTooSmall,
  AlphabetNotBinary,
  NotInClassA,
  NotRegularInput,
  CriterionHolds,
  UnequalLengths,
  DuplicatePattern,
  InvalidArgument,
  BudgetExceeded,
};

std::string_view to_string(Errc code) noexcept;

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wordreg

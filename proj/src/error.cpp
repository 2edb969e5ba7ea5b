#include "wordreg/error.hpp"

namespace wordreg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::ForeignSymbol: return "ForeignSymbol";
    case Errc::InvalidAlphabet: return "InvalidAlphabet";
    case Errc::NotBorderedInput: return "NotBorderedInput";
    case Errc::InconsistentDecomposition: return "InconsistentDecomposition";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::MalformedJson: return "MalformedJson";
    case Errc::AlphabetTooSmall: return "AlphabetTooSmall";
    case Errc::AlphabetNotBinary: return "AlphabetNotBinary";
    case Errc::NotInClassA: return "NotInClassA";
    case Errc::NotRegularInput: return "NotRegularInput";
    case Errc::CriterionHolds: return "CriterionHolds";
    case Errc::UnequalLengths: return "UnequalLengths";
    case Errc::DuplicatePattern: return "DuplicatePattern";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace wordreg

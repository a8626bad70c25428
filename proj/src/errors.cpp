#include "penney/errors.hpp"

namespace penney {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DuplicatePattern: return "DuplicatePattern";
    case ErrorKind::ZeroProbabilityLetter: return "ZeroProbabilityLetter";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ZeroWinProbability: return "ZeroWinProbability";
    case ErrorKind::ZeroConstantDenominator: return "ZeroConstantDenominator";
    case ErrorKind::AllTrialsTruncated: return "AllTrialsTruncated";
  }
  return "Error";
}

}  // namespace penney

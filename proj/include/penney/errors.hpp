#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penney {

enum class ErrorKind {
  Parse,
  InvalidAlphabet,
  BadDistribution,
  InvalidPattern,
  UnknownLetter,
  NotReduced,
  DuplicatePattern,
  ZeroProbabilityLetter,
  DegenerateDenominator,
  ZeroWinProbability,
  ZeroConstantDenominator,
  AllTrialsTruncated,
};

const char* to_string(ErrorKind kind);

// All library failures derive from this; what() is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Pattern `container` has pattern `contained` as a contiguous substring.
class NotReducedError : public Error {
 public:
  NotReducedError(std::size_t container, std::size_t contained, const std::string& detail)
      : Error(ErrorKind::NotReduced, detail), container_(container), contained_(contained) {}

  std::size_t container() const noexcept { return container_; }
  std::size_t contained() const noexcept { return contained_; }

 private:
  std::size_t container_;
  std::size_t contained_;
};

class ZeroWinProbabilityError : public Error {
 public:
  ZeroWinProbabilityError(std::size_t pattern, const std::string& detail)
      : Error(ErrorKind::ZeroWinProbability, detail), pattern_(pattern) {}

  std::size_t pattern() const noexcept { return pattern_; }

 private:
  std::size_t pattern_;
};

}  // namespace penney

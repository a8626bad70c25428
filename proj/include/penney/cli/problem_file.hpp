#pragma once

// Reader for the line-oriented problem file format (docs/problem-format.md).

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penney/patterns.hpp"

namespace penney::cli {

struct PatternEntry {
  std::string label;  // empty when the line had no "label:" prefix
  std::string text;
};

struct ProblemFile {
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> probabilities;  // letter, literal
  std::vector<PatternEntry> patterns;
};

/// Throws Error(Parse) naming the offending line.
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::filesystem::path& path);

/// Converts literals exactly and validates. Malformed literals raise
/// Error(Parse); everything else raises the validation errors of
/// validate_system and Distribution.
PatternSystem to_system(const ProblemFile& file);

}  // namespace penney::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "penney/patterns.hpp"

namespace penney::cli {

enum class OutputFormat { Table, Machine };

/// Process exit codes; stable across releases.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;  // bad arguments or unparsable problem file
inline constexpr int kValidation = 3;
inline constexpr int kDegenerate = 4;
inline constexpr int kAllTruncated = 5;
}  // namespace exit_code

/// Version tag written into every machine-format document.
inline constexpr int kMachineFormatVersion = 1;

struct CommandOptions {
  OutputFormat format = OutputFormat::Table;
  int precision = 6;
  std::size_t n = 30;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_steps;
  unsigned workers = 0;
};

// Each command writes its report to `out` and returns an exit code.
// Library errors propagate as exceptions; run() maps them to exit codes.
int cmd_analyze(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out);
int cmd_series(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out);
int cmd_verify(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out);
int cmd_simulate(const PatternSystem& sys, const CommandOptions& opts, std::ostream& out);

/// Full command-line entry point: penney <analyze|series|verify|simulate> FILE [flags].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace penney::cli

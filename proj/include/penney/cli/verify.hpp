#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "penney/patterns.hpp"
#include "penney/solver.hpp"

namespace penney::cli {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every consistency check against `bundle` in a fixed order:
/// system-residual, win-probabilities-sum, total-expectation, li-identity,
/// star-route-agreement, identity-shortcut (only when applicable), solovev
/// (only for m = 1), dp-vs-series.
std::vector<CheckResult> run_checks(const PatternSystem& sys, const GeneratingBundle& bundle,
                                    std::size_t n_terms);

std::optional<CheckResult> first_failure(const std::vector<CheckResult>& checks);

}  // namespace penney::cli

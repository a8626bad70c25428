#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth for the closed forms: an exact dynamic program over a
 *        multi-pattern match automaton, and a seeded Monte Carlo simulator.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "penney/patterns.hpp"

namespace penney {

/// Deterministic automaton over the prefixes of all patterns (the trie),
/// with failure-link transitions to the longest suffix that is again a
/// prefix. Reaching an accepting state means a pattern just completed.
class MatchAutomaton {
 public:
  explicit MatchAutomaton(const PatternSystem& sys);

  static constexpr std::size_t kRoot = 0;

  std::size_t state_count() const { return accept_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t next(std::size_t state, std::size_t letter) const {
    return delta_[state * alphabet_size_ + letter];
  }
  /// Index of the pattern completed on entering `state`, if any.
  std::optional<std::size_t> accepting(std::size_t state) const { return accept_[state]; }

 private:
  std::size_t alphabet_size_;
  std::vector<std::size_t> delta_;
  std::vector<std::optional<std::size_t>> accept_;
};

struct DpTable {
  /// first_hits[n][i] = Pr(tau = tau_i = n), n = 0 .. n_max
  std::vector<std::vector<Rational>> first_hits;
  /// tails[n] = Pr(tau > n), n = 0 .. n_max
  std::vector<Rational> tails;
};

/// Exact forward propagation of the state distribution for n_max steps.
/// Throws std::invalid_argument if n_max == 0.
DpTable dp_distribution(const PatternSystem& sys, std::size_t n_max = 30);

/// Maps 64-bit uniform draws to letters. Letter k is chosen when the draw
/// falls in [floor(F_{k-1} 2^64), floor(F_k 2^64)) with F the cumulative
/// distribution, so zero-probability letters are never produced.
class LetterSampler {
 public:
  explicit LetterSampler(const Distribution& dist);
  std::size_t operator()(std::uint64_t draw) const;

 private:
  std::vector<unsigned __int128> upper_;
};

/// The letter sequence of one trial. Streams are keyed by (seed, trial), so
/// every trial can be replayed on its own regardless of scheduling.
class LetterStream {
 public:
  LetterStream(const LetterSampler& sampler, std::uint64_t seed, std::uint64_t trial);
  std::size_t next();

 private:
  const LetterSampler* sampler_;
  std::uint64_t state_;
};

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1000000;
  /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned workers = 0;
};

/// max_steps = ceil(100 E tau) when E tau is computable, else 10^6; never
/// below the longest pattern.
std::uint64_t default_max_steps(const PatternSystem& sys);

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t truncated = 0;
  std::vector<std::uint64_t> wins;
  std::vector<std::uint64_t> wait_sum;            // per winning pattern
  std::vector<unsigned __int128> wait_sq_sum;     // per winning pattern

  std::uint64_t completed() const { return trials - truncated; }
  double win_fraction(std::size_t i) const;
  /// sqrt(f (1 - f) / completed)
  double win_fraction_se(std::size_t i) const;
  double mean_wait() const;
  double mean_wait_se() const;
  /// NaN if pattern i never won.
  double conditional_mean(std::size_t i) const;
  double conditional_mean_se(std::size_t i) const;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Throws std::invalid_argument if trials == 0 or max_steps is shorter than
/// the longest pattern; Error(AllTrialsTruncated) if no trial finished.
SimResult simulate(const PatternSystem& sys, const SimConfig& cfg);

}  // namespace penney

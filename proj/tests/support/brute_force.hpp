#pragma once

// Enumeration oracle: walks every letter sequence of length n_max and finds
// the first pattern occurrence by direct comparison. Shares no code with the
// automaton or the closed forms. Exponential; keep n_max small.

#include <cstddef>
#include <vector>

#include "penney/patterns.hpp"

namespace penney::testing {

struct BruteForceTable {
  std::vector<std::vector<Rational>> first_hits;  // [n][i]
  std::vector<Rational> tails;                    // Pr(tau > n)
};

inline BruteForceTable brute_force_first_hits(const PatternSystem& sys, std::size_t n_max) {
  const std::size_t a = sys.dist().alphabet().size();
  const std::size_t m = sys.size();
  BruteForceTable out;
  out.first_hits.assign(n_max + 1, std::vector<Rational>(m));
  out.tails.assign(n_max + 1, Rational());

  std::vector<std::size_t> seq(n_max, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n_max; ++k) total *= a;

  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    Rational prob(1);
    for (std::size_t k = 0; k < n_max; ++k) {
      seq[k] = c % a;
      c /= a;
      prob *= sys.dist().prob(seq[k]);
    }
    if (prob.is_zero()) continue;

    std::size_t hit_time = 0;
    std::size_t hit_pattern = 0;
    for (std::size_t t = 1; t <= n_max && hit_time == 0; ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        const auto& pat = sys.encoded(i);
        if (pat.size() > t) continue;
        bool match = true;
        for (std::size_t r = 0; r < pat.size(); ++r)
          if (seq[t - pat.size() + r] != pat[r]) { match = false; break; }
        if (match) {
          hit_time = t;
          hit_pattern = i;
          break;
        }
      }
    }
    if (hit_time != 0) out.first_hits[hit_time][hit_pattern] += prob;
    for (std::size_t n = 0; n <= n_max; ++n)
      if (hit_time == 0 || hit_time > n) out.tails[n] += prob;
  }
  return out;
}

}  // namespace penney::testing

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "penney/errors.hpp"
#include "penney/patterns.hpp"

namespace penney::testing {

inline std::vector<Pattern> parse_all(const Alphabet& alphabet, const std::vector<std::string>& texts) {
  std::vector<Pattern> out;
  for (const auto& t : texts) out.push_back(Pattern::parse(alphabet, t));
  return out;
}

/// Patterns over a fair or biased coin with letters H, T.
inline PatternSystem coin_system(const Rational& p, const std::vector<std::string>& texts) {
  Distribution d = Distribution::coin(p);
  auto pats = parse_all(d.alphabet(), texts);
  return validate_system(std::move(d), std::move(pats));
}

/// THH, HTH, HHT
inline PatternSystem three_coin_patterns(const Rational& p = Rational(1, 2)) {
  return coin_system(p, {"THH", "HTH", "HHT"});
}

inline Distribution uniform_dna() { return Distribution::uniform(Alphabet({"A", "C", "G", "T"})); }

/// ACG, ATG, AG
inline PatternSystem dna_patterns(Distribution d = uniform_dna()) {
  auto pats = parse_all(d.alphabet(), {"ACG", "ATG", "AG"});
  return validate_system(std::move(d), std::move(pats));
}

struct CorpusLimits {
  std::size_t min_alphabet = 2;
  std::size_t max_alphabet = 4;
  std::size_t max_patterns = 4;
  std::size_t max_length = 6;
};

/// Random distribution with positive weights w_k / sum w.
inline Distribution random_distribution(std::mt19937_64& rng, std::size_t alphabet_size) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> letters(kNames, kNames + alphabet_size);
  std::uniform_int_distribution<long> weight(1, 9);
  std::vector<long> w(alphabet_size);
  long total = 0;
  for (auto& x : w) total += (x = weight(rng));
  std::vector<Rational> probs;
  for (long x : w) probs.emplace_back(x, total);
  return Distribution(Alphabet(std::move(letters)), std::move(probs));
}

/// Fixes the alphabet and the number of patterns, then draws pattern sets
/// until one validates, so larger races are not filtered out.
inline PatternSystem random_system(std::mt19937_64& rng, const CorpusLimits& lim = {}) {
  std::uniform_int_distribution<std::size_t> alpha(lim.min_alphabet, lim.max_alphabet);
  std::uniform_int_distribution<std::size_t> count(1, lim.max_patterns);
  std::uniform_int_distribution<std::size_t> len(1, lim.max_length);
  const Distribution d = random_distribution(rng, alpha(rng));
  const std::size_t m = count(rng);
  std::uniform_int_distribution<std::size_t> letter(0, d.alphabet().size() - 1);
  for (;;) {
    std::vector<Pattern> pats;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::string> sym(len(rng));
      for (auto& s : sym) s = d.alphabet().letter(letter(rng));
      pats.emplace_back(std::move(sym));
    }
    try {
      return validate_system(d, std::move(pats));
    } catch (const Error&) {
    }
  }
}

inline std::vector<PatternSystem> random_corpus(std::size_t count, std::uint64_t seed, const CorpusLimits& lim = {}) {
  std::mt19937_64 rng(seed);
  std::vector<PatternSystem> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_system(rng, lim));
  return out;
}

}  // namespace penney::testing

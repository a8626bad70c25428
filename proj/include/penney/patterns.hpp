#pragma once

/**
 * @file patterns.hpp
 * @brief Alphabets, i.i.d. letter distributions, patterns and reduced
 *        pattern systems.
 *
 * A letter is an arbitrary non-empty string ("H", "A", "ATG"), so patterns
 * are sequences of tokens rather than character strings.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "penney/poly.hpp"
#include "penney/rational.hpp"

namespace penney {

class Alphabet {
 public:
  /// Throws Error(InvalidAlphabet) if empty, if a letter is empty, or on duplicates.
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter(std::size_t index) const { return letters_[index]; }
  std::optional<std::size_t> index_of(std::string_view letter) const;
  /// True when every letter is a single character, so "THH" can be read
  /// without separators.
  bool single_character() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> letters_;
};

class Distribution {
 public:
  /// Throws Error(BadDistribution) if a letter lacks a probability, names an
  /// unknown letter, lies outside [0, 1], or the total is not exactly 1.
  Distribution(Alphabet alphabet, const std::map<std::string, Rational>& probs);

  /// Probabilities given in alphabet order.
  Distribution(Alphabet alphabet, std::vector<Rational> probs);

  static Distribution uniform(Alphabet alphabet);
  /// Alphabet {H, T} with Pr(H) = p.
  static Distribution coin(const Rational& p);

  const Alphabet& alphabet() const { return alphabet_; }
  const Rational& prob(std::size_t letter_index) const { return probs_[letter_index]; }
  /// Throws Error(UnknownLetter).
  const Rational& prob(std::string_view letter) const;
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  void check() const;

  Alphabet alphabet_;
  std::vector<Rational> probs_;
};

class Pattern {
 public:
  /// Throws Error(InvalidPattern) if `symbols` is empty. An empty label is
  /// replaced by the symbols joined together.
  explicit Pattern(std::vector<std::string> symbols, std::string label = {});

  /// Reads "THH" character by character when the alphabet is single-character
  /// and the text has no whitespace; otherwise splits on whitespace. Throws
  /// Error(UnknownLetter) for tokens outside the alphabet.
  static Pattern parse(const Alphabet& alphabet, std::string_view text, std::string label = {});

  std::size_t length() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& label() const { return label_; }

  /// Symbols joined without separators if all are single characters,
  /// otherwise with single spaces.
  std::string text() const;

  /// Same letter sequence; labels are ignored.
  bool same_word(const Pattern& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::string label_;
};

/// A validated race: reduced, duplicate-free, every used letter possible.
class PatternSystem {
 public:
  const Distribution& dist() const { return dist_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern& pattern(std::size_t i) const { return patterns_[i]; }
  std::size_t size() const { return patterns_.size(); }

  /// Pattern i as alphabet indices.
  const std::vector<std::size_t>& encoded(std::size_t i) const { return encoded_[i]; }
  std::size_t min_length() const;
  std::size_t max_length() const;

 private:
  friend PatternSystem validate_system(Distribution dist, std::vector<Pattern> patterns);
  PatternSystem(Distribution dist, std::vector<Pattern> patterns,
                std::vector<std::vector<std::size_t>> encoded)
      : dist_(std::move(dist)), patterns_(std::move(patterns)), encoded_(std::move(encoded)) {}

  Distribution dist_;
  std::vector<Pattern> patterns_;
  std::vector<std::vector<std::size_t>> encoded_;
};

/// Checks, in order: m >= 1, letters known, no duplicates, reducedness for
/// every ordered pair, positive probability for every used letter.
/// Throws Error(InvalidPattern | UnknownLetter | DuplicatePattern |
/// ZeroProbabilityLetter) or NotReducedError.
PatternSystem validate_system(Distribution dist, std::vector<Pattern> patterns);

/// True if `needle` occurs as a contiguous run inside `haystack`.
bool contains_subword(const Pattern& haystack, const Pattern& needle);

/// Product of the letter probabilities.
Rational pattern_prob(const Distribution& dist, const Pattern& a);

/// w_a^b(s) = sum_k [prefix_k(a) == suffix_k(b)] * Pr(last l_a - k letters of a) * s^(l_a - k),
/// for k = 1 .. min(l_a, l_b).
Poly correlation_poly(const Distribution& dist, const Pattern& a, const Pattern& b);

}  // namespace penney

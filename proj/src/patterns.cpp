#include "penney/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "penney/errors.hpp"

namespace penney {

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string quoted(const Pattern& p) { return "'" + p.text() + "'"; }

bool equal_runs(const std::vector<std::string>& a, std::size_t a_start,
                const std::vector<std::string>& b, std::size_t b_start, std::size_t len) {
  return std::equal(a.begin() + static_cast<std::ptrdiff_t>(a_start),
                    a.begin() + static_cast<std::ptrdiff_t>(a_start + len),
                    b.begin() + static_cast<std::ptrdiff_t>(b_start));
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::InvalidAlphabet, "alphabet is empty");
  std::set<std::string_view> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw Error(ErrorKind::InvalidAlphabet, "empty letter");
    if (has_space(l)) throw Error(ErrorKind::InvalidAlphabet, "letter '" + l + "' contains whitespace");
    if (!seen.insert(l).second) throw Error(ErrorKind::InvalidAlphabet, "duplicate letter '" + l + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view letter) const {
  const auto it = std::find(letters_.begin(), letters_.end(), letter);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Alphabet::single_character() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const auto& l) { return l.size() == 1; });
}

Distribution::Distribution(Alphabet alphabet, const std::map<std::string, Rational>& probs)
    : alphabet_(std::move(alphabet)) {
  for (const auto& [letter, p] : probs) {
    if (!alphabet_.index_of(letter))
      throw Error(ErrorKind::BadDistribution, "probability given for unknown letter '" + letter + "'");
  }
  probs_.reserve(alphabet_.size());
  for (const auto& letter : alphabet_.letters()) {
    const auto it = probs.find(letter);
    if (it == probs.end())
      throw Error(ErrorKind::BadDistribution, "no probability for letter '" + letter + "'");
    probs_.push_back(it->second);
  }
  check();
}

Distribution::Distribution(Alphabet alphabet, std::vector<Rational> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (probs_.size() != alphabet_.size())
    throw Error(ErrorKind::BadDistribution, "expected one probability per letter");
  check();
}

void Distribution::check() const {
  Rational total;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < Rational(0) || probs_[i] > Rational(1))
      throw Error(ErrorKind::BadDistribution, "probability of '" + alphabet_.letter(i) + "' is " +
                                                  probs_[i].to_string() + ", outside [0, 1]");
    total += probs_[i];
  }
  if (total != Rational(1))
    throw Error(ErrorKind::BadDistribution, "probabilities sum to " + total.to_string() + ", not 1");
}

Distribution Distribution::uniform(Alphabet alphabet) {
  const auto n = static_cast<long>(alphabet.size());
  std::vector<Rational> probs(alphabet.size(), Rational(1, n));
  return Distribution(std::move(alphabet), std::move(probs));
}

Distribution Distribution::coin(const Rational& p) {
  return Distribution(Alphabet({"H", "T"}), std::vector<Rational>{p, Rational(1) - p});
}

const Rational& Distribution::prob(std::string_view letter) const {
  const auto idx = alphabet_.index_of(letter);
  if (!idx) throw Error(ErrorKind::UnknownLetter, "letter '" + std::string(letter) + "' is not in the alphabet");
  return probs_[*idx];
}

Pattern::Pattern(std::vector<std::string> symbols, std::string label)
    : symbols_(std::move(symbols)), label_(std::move(label)) {
  if (symbols_.empty()) throw Error(ErrorKind::InvalidPattern, "pattern must have at least one letter");
  if (label_.empty()) label_ = text();
}

Pattern Pattern::parse(const Alphabet& alphabet, std::string_view text, std::string label) {
  std::vector<std::string> symbols;
  if (alphabet.single_character() && !has_space(text)) {
    for (char c : text) symbols.emplace_back(1, c);
  } else {
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) symbols.push_back(tok);
  }
  for (const auto& s : symbols)
    if (!alphabet.index_of(s))
      throw Error(ErrorKind::UnknownLetter,
                  "letter '" + s + "' in pattern '" + std::string(text) + "' is not in the alphabet");
  return Pattern(std::move(symbols), std::move(label));
}

std::string Pattern::text() const {
  const bool compact =
      std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += symbols_[i];
  }
  return out;
}

std::size_t PatternSystem::min_length() const {
  std::size_t r = patterns_.front().length();
  for (const auto& p : patterns_) r = std::min(r, p.length());
  return r;
}

std::size_t PatternSystem::max_length() const {
  std::size_t r = 0;
  for (const auto& p : patterns_) r = std::max(r, p.length());
  return r;
}

bool contains_subword(const Pattern& haystack, const Pattern& needle) {
  const auto& h = haystack.symbols();
  const auto& n = needle.symbols();
  if (n.size() > h.size()) return false;
  for (std::size_t start = 0; start + n.size() <= h.size(); ++start)
    if (equal_runs(h, start, n, 0, n.size())) return true;
  return false;
}

PatternSystem validate_system(Distribution dist, std::vector<Pattern> patterns) {
  if (patterns.empty()) throw Error(ErrorKind::InvalidPattern, "a pattern system needs at least one pattern");

  std::vector<std::vector<std::size_t>> encoded;
  encoded.reserve(patterns.size());
  for (const auto& p : patterns) {
    std::vector<std::size_t> codes;
    for (const auto& s : p.symbols()) {
      const auto idx = dist.alphabet().index_of(s);
      if (!idx)
        throw Error(ErrorKind::UnknownLetter,
                    "letter '" + s + "' in pattern " + quoted(p) + " is not in the alphabet");
      codes.push_back(*idx);
    }
    encoded.push_back(std::move(codes));
  }

  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (std::size_t j = i + 1; j < patterns.size(); ++j)
      if (patterns[i].same_word(patterns[j]))
        throw Error(ErrorKind::DuplicatePattern,
                    "patterns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are both " + quoted(patterns[i]));

  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (std::size_t j = 0; j < patterns.size(); ++j)
      if (i != j && contains_subword(patterns[i], patterns[j]))
        throw NotReducedError(i, j, quoted(patterns[j]) + " is a substring of " + quoted(patterns[i]));

  for (std::size_t i = 0; i < patterns.size(); ++i)
    for (std::size_t code : encoded[i])
      if (dist.prob(code).is_zero())
        throw Error(ErrorKind::ZeroProbabilityLetter,
                    "letter '" + dist.alphabet().letter(code) + "' used by pattern " +
                        quoted(patterns[i]) + " has probability 0");

  return PatternSystem(std::move(dist), std::move(patterns), std::move(encoded));
}

Rational pattern_prob(const Distribution& dist, const Pattern& a) {
  Rational p(1);
  for (const auto& s : a.symbols()) p *= dist.prob(s);
  return p;
}

Poly correlation_poly(const Distribution& dist, const Pattern& a, const Pattern& b) {
  const auto& as = a.symbols();
  const auto& bs = b.symbols();
  const std::size_t la = as.size();
  const std::size_t lb = bs.size();
  std::vector<Rational> coeffs(la);
  for (std::size_t k = 1; k <= std::min(la, lb); ++k) {
    if (!equal_runs(as, 0, bs, lb - k, k)) continue;
    Rational tail(1);
    for (std::size_t t = k; t < la; ++t) tail *= dist.prob(as[t]);
    coeffs[la - k] += tail;
  }
  return Poly(std::move(coeffs));
}

}  // namespace penney

#include "penney/cli/problem_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "penney/errors.hpp"

namespace penney::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + why);
}

enum class Section { None, Alphabet, Probabilities, Patterns };

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  Section section = Section::None;
  std::set<Section> seen;
  std::set<std::string> prob_letters;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line == "[alphabet]") section = Section::Alphabet;
      else if (line == "[probabilities]") section = Section::Probabilities;
      else if (line == "[patterns]") section = Section::Patterns;
      else fail(line_no, "unknown section " + std::string(line));
      if (!seen.insert(section).second) fail(line_no, "section " + std::string(line) + " appears twice");
      continue;
    }

    switch (section) {
      case Section::None:
        fail(line_no, "content before the first section header");
      case Section::Alphabet: {
        std::istringstream in{std::string(line)};
        for (std::string tok; in >> tok;) out.alphabet.push_back(tok);
        break;
      }
      case Section::Probabilities: {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'letter = probability'");
        const std::string letter(trim(line.substr(0, eq)));
        const std::string literal(trim(line.substr(eq + 1)));
        if (letter.empty() || literal.empty()) fail(line_no, "expected 'letter = probability'");
        if (!prob_letters.insert(letter).second) fail(line_no, "probability for '" + letter + "' given twice");
        out.probabilities.emplace_back(letter, literal);
        break;
      }
      case Section::Patterns: {
        PatternEntry entry;
        if (const auto colon = line.find(':'); colon != std::string_view::npos) {
          entry.label = std::string(trim(line.substr(0, colon)));
          entry.text = std::string(trim(line.substr(colon + 1)));
          if (entry.label.empty()) fail(line_no, "empty pattern label");
        } else {
          entry.text = std::string(line);
        }
        if (entry.text.empty()) fail(line_no, "empty pattern");
        out.patterns.push_back(std::move(entry));
        break;
      }
    }
  }

  if (!seen.count(Section::Alphabet) || out.alphabet.empty()) fail(line_no, "missing [alphabet] letters");
  if (!seen.count(Section::Probabilities)) fail(line_no, "missing [probabilities] section");
  if (!seen.count(Section::Patterns) || out.patterns.empty()) fail(line_no, "missing [patterns] entries");
  return out;
}

ProblemFile read_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

PatternSystem to_system(const ProblemFile& file) {
  Alphabet alphabet(file.alphabet);
  std::map<std::string, Rational> probs;
  for (const auto& [letter, literal] : file.probabilities) probs.emplace(letter, Rational::from_literal(literal));
  Distribution dist(alphabet, probs);

  std::vector<Pattern> patterns;
  patterns.reserve(file.patterns.size());
  for (const auto& p : file.patterns) patterns.push_back(Pattern::parse(alphabet, p.text, p.label));
  return validate_system(std::move(dist), std::move(patterns));
}

}  // namespace penney::cli

#include "posit/words.hpp"

#include <cctype>

#include "posit/error.hpp"

namespace posit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLasso: return "MalformedLasso";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::MonoidTooLarge: return "MonoidTooLarge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidStrategy: return "InvalidStrategy";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::SinkVertex: return "SinkVertex";
    case ErrorKind::NotEveOnly: return "NotEveOnly";
    case ErrorKind::InvalidPlan: return "InvalidPlan";
    case ErrorKind::IncomparableLassos: return "IncomparableLassos";
    case ErrorKind::MergeBrokeWinning: return "MergeBrokeWinning";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
  }
  return "Error";
}

Alphabet::Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::ParseError, "empty alphabet");
  index_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i];
    const auto uc = static_cast<unsigned char>(c);
    if (!(std::islower(uc) || std::isdigit(uc)))
      throw Error(ErrorKind::ParseError,
                  std::string("letter '") + c + "' is not a lowercase letter or digit");
    if (index_[uc] >= 0)
      throw Error(ErrorKind::ParseError, std::string("duplicate letter '") + c + "'");
    index_[uc] = static_cast<int>(i);
  }
}

Alphabet Alphabet::from_string(std::string_view letters) {
  return Alphabet(std::vector<char>(letters.begin(), letters.end()));
}

std::optional<std::size_t> Alphabet::index_of(char c) const noexcept {
  if (letters_.empty()) return std::nullopt;
  const int i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

std::size_t Alphabet::require(char c) const {
  if (auto i = index_of(c)) return *i;
  throw Error(ErrorKind::UnknownLetter, std::string("letter '") + c + "' not in alphabet");
}

void Alphabet::check_word(std::string_view word) const {
  for (char c : word) require(c);
}

LassoWord::LassoWord(FiniteWord prefix_word, FiniteWord period_word)
    : prefix(std::move(prefix_word)), period(std::move(period_word)) {
  if (period.empty()) throw Error(ErrorKind::MalformedLasso, "empty period");
}

LassoWord parse_lasso(std::string_view text, const Alphabet& alphabet) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::MalformedLasso, "missing ':' in '" + std::string(text) + "'");
  if (text.find(':', colon + 1) != std::string_view::npos)
    throw Error(ErrorKind::MalformedLasso, "more than one ':' in '" + std::string(text) + "'");
  const auto prefix = text.substr(0, colon);
  const auto period = text.substr(colon + 1);
  if (period.empty())
    throw Error(ErrorKind::MalformedLasso, "empty period in '" + std::string(text) + "'");
  alphabet.check_word(prefix);
  alphabet.check_word(period);
  return LassoWord(std::string(prefix), std::string(period));
}

FiniteWord primitive_root(std::string_view word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return FiniteWord(word.substr(0, d));
  }
  return FiniteWord(word);
}

LassoWord normalize(const LassoWord& w) {
  FiniteWord prefix = w.prefix;
  FiniteWord period = primitive_root(w.period);
  // Rolling the last prefix letter into the period keeps the omega-word and
  // the period primitive.
  while (!prefix.empty() && prefix.back() == period.back()) {
    period.pop_back();
    period.insert(period.begin(), prefix.back());
    prefix.pop_back();
  }
  return LassoWord(std::move(prefix), std::move(period));
}

FiniteWord unroll(const LassoWord& w, std::size_t n) {
  FiniteWord out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < w.prefix.size() ? w.prefix[i]
                                      : w.period[(i - w.prefix.size()) % w.period.size()]);
  }
  return out;
}

bool lasso_equal(const LassoWord& lhs, const LassoWord& rhs) {
  return normalize(lhs) == normalize(rhs);
}

}  // namespace posit

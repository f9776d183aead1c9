#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posit {

/// Finite words are plain strings of single-character letters.  The empty
/// string is the empty word.
using FiniteWord = std::string;

/// Ordered set of single-character letters (lowercase letters and digits).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char> letters);

  static Alphabet from_string(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<char>& letters() const noexcept { return letters_; }
  char letter(std::size_t index) const { return letters_.at(index); }

  bool contains(char c) const noexcept { return index_of(c).has_value(); }
  std::optional<std::size_t> index_of(char c) const noexcept;

  /// Index of `c`, or throws UnknownLetter.
  std::size_t require(char c) const;
  /// Throws UnknownLetter if some letter of `word` is not in the alphabet.
  void check_word(std::string_view word) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.letters_ == rhs.letters_;
  }

 private:
  std::vector<char> letters_;
  std::array<int, 256> index_{};
};

/// The ultimately periodic word prefix . period^omega.
struct LassoWord {
  FiniteWord prefix;
  FiniteWord period;

  LassoWord() = default;
  /// Throws MalformedLasso on an empty period.
  LassoWord(FiniteWord prefix_word, FiniteWord period_word);

  /// `prefix:period`
  std::string to_string() const { return prefix + ":" + period; }

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// Parses `<prefix>:<period>`.
LassoWord parse_lasso(std::string_view text, const Alphabet& alphabet);

/// Shortest word x with x^k == word for some k.
FiniteWord primitive_root(std::string_view word);

/// Canonical representative: primitive period, minimal prefix.
LassoWord normalize(const LassoWord& w);

/// First n letters of the omega-word.
FiniteWord unroll(const LassoWord& w, std::size_t n);

/// Same omega-word.
bool lasso_equal(const LassoWord& lhs, const LassoWord& rhs);

/// The lasso u.w, i.e. `u` prepended to the prefix of `w`.
inline LassoWord prepend(std::string_view u, const LassoWord& w) {
  return LassoWord(std::string(u) + w.prefix, w.period);
}

/// The lasso :v (v^omega).
inline LassoWord omega_power(const FiniteWord& v) { return LassoWord("", v); }

}  // namespace posit

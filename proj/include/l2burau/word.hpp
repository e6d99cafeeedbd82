#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace l2b {

/// A letter is a signed, 1-based generator index: +i stands for x_i and -i
/// for x_i^-1. Zero is never a valid letter.
using Letter = std::int32_t;

constexpr int generator_of(Letter l) { return l < 0 ? -l : l; }
constexpr int sign_of(Letter l) { return l < 0 ? -1 : 1; }

/// Raised by every text parser in the library. Columns and lines are 1-based;
/// line is 0 when the input is a single-line field (a word or a braid).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Freely reduced word in a finitely generated group's alphabet.
///
/// The letter sequence is kept flat and reduced at construction; a content
/// hash is cached because words are the keys of every group-ring element.
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter sequence. Throws std::invalid_argument
  /// on a zero letter.
  static Word reduce(std::span<const Letter> raw);
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }
  static Word generator(int index, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  /// Largest generator index used, 0 for the identity.
  int max_generator() const;

  Word inverse() const;

  /// First k letters. Prefixes of reduced words are reduced.
  Word prefix(std::size_t k) const;

  /// Sum over letters of sign * weights[generator - 1].
  long long weight(std::span<const int> weights) const;

  std::size_t hash() const { return hash_; }

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.hash_ == b.hash_ && a.letters_ == b.letters_;
  }

 private:
  explicit Word(std::vector<Letter> reduced);

  std::vector<Letter> letters_;
  std::size_t hash_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Shortlex order: shorter first, then letter by letter with
/// x1 < x1^-1 < x2 < x2^-1 < ...
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

/// How generators are spelled when printing: "x3", "g2", "s1", or "a"/"b".
struct WordStyle {
  std::string prefix = "x";
  bool lettered = false;  // a, b, c, ... instead of prefix + index

  friend bool operator==(const WordStyle&, const WordStyle&) = default;
};

/// Parses whitespace-separated signed generators: "x1 x2^-1 x1", "1 -2 1",
/// "g2 g1^-1", "a a b^-1", "x1^3". "e" or an empty string is the identity.
Word parse_word(std::string_view text);

/// Inverse of parse_word for the given style; the identity prints as "e".
std::string format_word(const Word& w, const WordStyle& style = {});

}  // namespace l2b

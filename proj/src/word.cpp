#include "l2burau/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace l2b {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what), line_(line), column_(column) {}

namespace {

std::size_t hash_letters(const std::vector<Letter>& letters) {
  // FNV-1a over the raw letter values, shifted so that the empty word hashes
  // to 0 like a default-constructed Word.
  constexpr std::size_t offset = 1469598103934665603ull;
  std::size_t h = offset;
  for (Letter l : letters) {
    auto v = static_cast<std::uint32_t>(l);
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h ^ offset;
}

int letter_rank(Letter l) { return 2 * (generator_of(l) - 1) + (l < 0 ? 1 : 0); }

}  // namespace

Word::Word(std::vector<Letter> reduced) : letters_(std::move(reduced)), hash_(hash_letters(letters_)) {}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word Word::generator(int index, int sign) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  return Word(std::vector<Letter>{sign < 0 ? -index : index});
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, generator_of(l));
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l = -l;
  return Word(std::move(inv));
}

Word Word::prefix(std::size_t k) const {
  k = std::min(k, letters_.size());
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)));
}

long long Word::weight(std::span<const int> weights) const {
  long long total = 0;
  for (Letter l : letters_) {
    auto g = static_cast<std::size_t>(generator_of(l));
    if (g > weights.size()) throw std::out_of_range("word uses a generator without a weight");
    total += sign_of(l) * weights[g - 1];
  }
  return total;
}

Word operator*(const Word& a, const Word& b) {
  // Only the junction can cancel.
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a.letters_[a.size() - 1 - cancel] == -b.letters_[cancel]) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.letters_.begin(), a.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), b.letters_.end());
  return Word(std::move(out));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    int ra = letter_rank(a[k]);
    int rb = letter_rank(b[k]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::size_t at) {
    throw ParseError("word: " + msg + " in \"" + std::string(text) + "\"", 0, static_cast<int>(at) + 1);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    int sign = 1;
    if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t letters_begin = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view name = text.substr(letters_begin, pos - letters_begin);
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view digits = text.substr(digits_begin, pos - digits_begin);

    int index = 0;
    if (!digits.empty()) {
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (index < 1) fail("generator index must be >= 1", digits_begin);
    } else if (name == "e" && sign == 1) {
      // identity token
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) fail("unexpected character", pos);
      continue;
    } else if (name.size() == 1) {
      index = std::tolower(static_cast<unsigned char>(name[0])) - 'a' + 1;
    } else {
      fail("expected a generator", start);
    }

    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_begin = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view exp = text.substr(exp_begin, pos - exp_begin);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc() || ptr != exp.data() + exp.size()) fail("bad exponent", exp_begin);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) fail("unexpected character", pos);
    Letter l = sign * (power < 0 ? -1 : 1) * index;
    for (int k = 0; k < (power < 0 ? -power : power); ++k) raw.push_back(l);
  }
  return Word::reduce(raw);
}

std::string format_word(const Word& w, const WordStyle& style) {
  if (w.is_identity()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out << ' ';
    int g = generator_of(w[k]);
    if (style.lettered) {
      out << static_cast<char>('a' + g - 1);
    } else {
      out << style.prefix << g;
    }
    if (w[k] < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace l2b

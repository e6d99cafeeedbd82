#include "l2burau/fox.hpp"

namespace l2b {

IntElement fox_derivative(const Word& w, int i) {
  if (i < 1) throw std::invalid_argument("fox_derivative: generator index must be >= 1");
  IntElement out;
  const auto letters = w.letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (generator_of(letters[k]) != i) continue;
    if (letters[k] > 0) {
      out.add_term(w.prefix(k), Integer(1));
    } else {
      out.add_term(w.prefix(k + 1), Integer(-1));
    }
  }
  return out;
}

IntElement fox_derivative(const IntElement& a, int i) {
  IntElement out;
  for (const auto& [w, c] : a.terms()) {
    IntElement d = fox_derivative(w, i);
    d *= c;
    out += d;
  }
  return out;
}

Word rewrite_alphabet(const Word& w, std::span<const Word> images) {
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    auto g = static_cast<std::size_t>(generator_of(l));
    if (g > images.size()) throw std::out_of_range("rewrite_alphabet: no image for generator");
    auto img = images[g - 1].letters();
    if (l > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(-*it);
    }
  }
  return Word::reduce(raw);
}

IntElement rewrite_alphabet(const IntElement& a, std::span<const Word> images) {
  return a.map_words([&](const Word& w) { return rewrite_alphabet(w, images); });
}

std::vector<Word> g_in_x(int n) {
  std::vector<Word> out;
  std::vector<Letter> raw;
  for (int i = 1; i <= n; ++i) {
    raw.push_back(i);
    out.push_back(Word::reduce(raw));
  }
  return out;
}

std::vector<Word> x_in_g(int n) {
  std::vector<Word> out;
  out.push_back(Word::generator(1));
  for (int i = 2; i <= n; ++i) out.push_back(Word::reduce({-(i - 1), i}));
  return out;
}

}  // namespace l2b

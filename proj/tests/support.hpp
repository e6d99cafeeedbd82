#pragma once

// Generators and independent oracles shared by the unit tests. Nothing here
// calls the library routine it is meant to check.

#include <random>
#include <vector>

#include "l2burau/braid.hpp"
#include "l2burau/garside.hpp"
#include "l2burau/group_ring.hpp"
#include "l2burau/laurent.hpp"
#include "l2burau/word.hpp"

namespace testing_support {

using l2b::IntElement;
using l2b::Letter;
using l2b::Word;

inline std::vector<Letter> random_letters(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (Letter& l : out) l = neg(rng) ? -gen(rng) : gen(rng);
  return out;
}

inline Word random_word(std::mt19937& rng, int rank, int max_len) {
  auto raw = random_letters(rng, rank, max_len);
  return Word::reduce(raw);
}

// Free reduction by repeated sweeps until nothing cancels.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == -w[k + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Word letters_word(const std::vector<Letter>& raw) { return Word::reduce(raw); }

// Fox derivative straight from the axioms: d(uv) = du + u dv on single letters.
inline IntElement fox_by_product_rule(const std::vector<Letter>& w, int i) {
  if (w.empty()) return {};
  if (w.size() == 1) {
    if (w[0] == i) return IntElement::one();
    if (w[0] == -i) return -IntElement(Word::generator(i, -1));
    return {};
  }
  const std::size_t half = w.size() / 2;
  std::vector<Letter> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Letter> v(w.begin() + static_cast<std::ptrdiff_t>(half), w.end());
  return fox_by_product_rule(u, i) + IntElement(letters_word(u)) * fox_by_product_rule(v, i);
}

// Image table of a single braid generator on x_j.
inline std::vector<Letter> sigma_image(Letter sigma, int j) {
  const int i = sigma > 0 ? sigma : -sigma;
  if (sigma > 0) {
    if (j == i) return {i, i + 1, -i};
    if (j == i + 1) return {i};
  } else {
    if (j == i) return {i + 1};
    if (j == i + 1) return {-(i + 1), i, i + 1};
  }
  return {j};
}

// h_beta on x-generators, built from the right: images of the suffix are
// substituted into the table of the next letter to the left.
inline std::vector<Word> action_from_right(const l2b::BraidWord& beta) {
  const int n = beta.strands();
  std::vector<Word> images;
  for (int j = 1; j <= n; ++j) images.push_back(Word::generator(j));
  const auto& letters = beta.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::vector<Word> next;
    for (int j = 1; j <= n; ++j) {
      std::vector<Letter> raw;
      for (Letter l : sigma_image(*it, j)) {
        const Word& img = images[static_cast<std::size_t>((l > 0 ? l : -l) - 1)];
        const Word piece = l > 0 ? img : img.inverse();
        raw.insert(raw.end(), piece.letters().begin(), piece.letters().end());
      }
      next.push_back(Word::reduce(raw));
    }
    images = std::move(next);
  }
  return images;
}

// Key for braid equality in B_3, where the (unreduced) Burau representation is
// faithful.
inline std::string burau_key(const l2b::LaurentMatrix& m) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key += l2b::format_laurent(m(i, j)) + ";";
  return key;
}

}  // namespace testing_support

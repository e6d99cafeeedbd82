#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "l2burau/word.hpp"

namespace l2b {

/// Word in the braid generators sigma_i^{+-1} of B_n.
///
/// Letters use the same signed encoding as Word (+i = sigma_i, -i = sigma_i^-1)
/// but are not reduced. The product a * b draws a above b, and the induced
/// automorphisms compose in reverse: h_{ab} = h_b o h_a.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws std::invalid_argument when n < 1 or an index is not in 1..n-1.
  BraidWord(int strands, std::vector<Letter> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  static BraidWord generator(int strands, int i, int sign = 1) { return BraidWord(strands, {sign < 0 ? -i : i}); }

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Parses "s1 -s3 s2", "1 -3 2" or "s1^-1". When strands <= 0 the strand count
/// is inferred as max index + 1 (1 for the empty word).
BraidWord parse_braid(std::string_view text, int strands = 0);
std::string format_braid(const BraidWord& b);

/// h_beta(x_j) as a reduced word in x_1..x_n.
Word act_on_x(const BraidWord& beta, int j);
/// All images h_beta(x_1), ..., h_beta(x_n).
std::vector<Word> act_on_x(const BraidWord& beta);

/// h_beta(g_j) as a reduced word in the g-alphabet, g_i = x_1 ... x_i.
Word act_on_g(const BraidWord& beta, int j);
std::vector<Word> act_on_g(const BraidWord& beta);

/// Underlying permutation on strand positions, 1-based values: perm[i - 1] is
/// the bottom position of the strand that starts at top position i. With
/// this convention permutation(a * b) = permutation(b) o permutation(a).
std::vector<int> permutation(const BraidWord& beta);

/// Number of components of the closure (= number of cycles).
int closure_components(const BraidWord& beta);

/// The Long-Paton braid in B_6, floors read top to bottom.
BraidWord longpaton();

}  // namespace l2b

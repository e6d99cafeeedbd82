#pragma once

#include <span>
#include <vector>

#include "l2burau/group_ring.hpp"
#include "l2burau/word.hpp"

namespace l2b {

/// Fox derivative d w / d x_i in Z[F].
///
/// Single left-to-right scan: x_i at position k contributes +prefix(k), and
/// x_i^-1 contributes -prefix(k + 1) (the prefix including the inverse letter).
IntElement fox_derivative(const Word& w, int i);

/// Linear extension to group-ring elements (words must be freely reduced).
IntElement fox_derivative(const IntElement& a, int i);

/// Substitutes each letter x_k by images[k - 1] (inverted for x_k^-1) and
/// freely reduces. Whether the images form a free basis is the caller's concern.
Word rewrite_alphabet(const Word& w, std::span<const Word> images);

IntElement rewrite_alphabet(const IntElement& a, std::span<const Word> images);

/// g_i = x_1 x_2 ... x_i, as x-words (i = 1..n).
std::vector<Word> g_in_x(int n);

/// x_i = g_{i-1}^-1 g_i, as g-words (i = 1..n, g_0 = e).
std::vector<Word> x_in_g(int n);

}  // namespace l2b

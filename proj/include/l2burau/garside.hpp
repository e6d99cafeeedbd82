#pragma once

#include <vector>

#include "l2burau/braid.hpp"
#include "l2burau/word.hpp"

namespace l2b {

/// Left normal form Delta^infimum * A_1 * ... * A_k of a braid.
///
/// Each factor is a permutation braid stored as a 0-based permutation table
/// (product convention (p*q)[x] = p[q[x]], sigma_i <-> the transposition of
/// i-1 and i). Factors are left-weighted and none is Delta or trivial.
struct GarsideNF {
  int strands = 1;
  int infimum = 0;
  std::vector<std::vector<int>> factors;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

GarsideNF garside_nf(const BraidWord& beta);

/// A canonical braid word for the normal form: Delta^infimum spelled with a
/// fixed reduced word for Delta, then each factor's lexicographically least
/// reduced word. Not freely reduced.
BraidWord to_braid_word(const GarsideNF& nf);

/// Word-problem decision in B_n.
inline bool same_braid(const BraidWord& a, const BraidWord& b) {
  return a.strands() == b.strands() && garside_nf(a) == garside_nf(b);
}

}  // namespace l2b

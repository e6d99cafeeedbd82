#pragma once

#include <string>
#include <vector>

#include "l2burau/braid.hpp"
#include "l2burau/group_ring.hpp"
#include "l2burau/groups.hpp"

namespace l2b {

enum class Basis { x, g, reduced };

std::string to_string(Basis b);
Basis basis_from_string(const std::string& s);

/// Matrix over Z[G] read as right-multiplication operators on l2(G)^k.
///
/// At parameter t, a term c*w of an entry stands for c * t^{grading*psi(w)} R_w.
/// Matrices act on column vectors from the left, and since R_a R_b = R_{ba}
/// operator composition is the opposite-ring matrix product (see compose).
/// grading is +1 for everything built from braids; adjoint flips it.
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t rows, std::size_t cols, OraclePtr oracle, Basis basis = Basis::x, int grading = 1);
  static OperatorMatrix identity(std::size_t n, OraclePtr oracle, Basis basis = Basis::x);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const OraclePtr& oracle_ptr() const { return oracle_; }
  const GroupOracle& oracle() const { return *oracle_; }
  Basis basis() const { return basis_; }
  int grading() const { return grading_; }

  const IntElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Stores an entry after normalizing every word with the oracle.
  void set(std::size_t i, std::size_t j, const IntElement& value);

  /// Exponent of t carried by the word w (grading * psi(w)).
  long long grade(const Word& w) const { return grading_ * oracle_->weight(w); }

  /// Structural equality; bases are compared too.
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  OraclePtr oracle_;
  Basis basis_;
  int grading_;
  std::vector<IntElement> entries_;
};

/// Opposite-ring product: (m o k)_{ik} = sum_j k_{jk} * m_{ij}. Represents the
/// operator "m after k".
OperatorMatrix compose(const OperatorMatrix& m, const OperatorMatrix& k);

/// Conjugate transpose: entry (i, j) is the bar of entry (j, i).
OperatorMatrix adjoint(const OperatorMatrix& m);

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);

/// Entries gamma(d h_beta(x_j) / d x_i).
OperatorMatrix l2_burau(const BraidWord& beta, const GammaMap& gamma);

/// The full n x n matrix in the g-basis: gamma(d h_beta(g_j) / d g_i), with
/// gamma evaluated on g-words through gamma(g_i) = gamma(x_1) ... gamma(x_i).
OperatorMatrix g_basis_l2_burau(const BraidWord& beta, const GammaMap& gamma);

/// Upper-left (n-1) x (n-1) block of the g-basis matrix.
OperatorMatrix reduced_l2_burau(const BraidWord& beta, const GammaMap& gamma);

/// The g-basis matrix recomputed from x-basis Fox derivatives through the
/// triangular change of basis dg_j/dx_k. Slower; used only to cross-check.
OperatorMatrix g_basis_l2_burau_via_x(const BraidWord& beta, const GammaMap& gamma);

/// gamma o h_beta, with images gamma(h_beta(x_i)).
GammaMap precompose_gamma(const GammaMap& gamma, const BraidWord& beta);

/// For matrices over a free group on x_1..x_n: the same matrix with every word
/// rewritten in the g-alphabet and printed with a "g" prefix.
OperatorMatrix to_g_coordinates(const OperatorMatrix& m);

}  // namespace l2b

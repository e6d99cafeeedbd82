#pragma once

#include <map>
#include <string>
#include <vector>

#include "l2burau/group_ring.hpp"

namespace l2b {

/// Integer Laurent polynomial in one variable T, stored as exponent -> nonzero
/// coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long long c) { add_term(0, Integer(static_cast<long>(c))); }  // NOLINT: implicit constant
  static LaurentPolynomial monomial(long long exponent, const Integer& c = 1);

  void add_term(long long exponent, const Integer& c);
  const std::map<long long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(long long exponent) const;

  /// Value at T = 1 (sum of coefficients).
  Integer at_one() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<long long, Integer> terms_;
};

/// "1 - T + 2*T^-1" style, "0" for zero.
std::string format_laurent(const LaurentPolynomial& p);

/// Applies g -> T^{psi(g)} to a group-ring element.
LaurentPolynomial specialize(const IntElement& a, std::span<const int> weights);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPolynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LaurentPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  LaurentMatrix transpose() const;
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPolynomial> entries_;
};

/// Exact determinant by fraction-free expansion (small matrices only).
LaurentPolynomial determinant(const LaurentMatrix& m);

}  // namespace l2b

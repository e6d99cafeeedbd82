#include "l2burau/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace l2b {

LaurentPolynomial LaurentPolynomial::monomial(long long exponent, const Integer& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPolynomial::add_term(long long exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPolynomial::coefficient(long long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Integer(-c));
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_) out.add_term(e, Integer(-c));
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Integer(ca * cb));
  return out;
}

std::string format_laurent(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "T";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPolynomial specialize(const IntElement& a, std::span<const int> weights) {
  LaurentPolynomial out;
  for (const auto& [w, c] : a.terms()) out.add_term(w.weight(weights), c);
  return out;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPolynomial(1);
  return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("LaurentMatrix product: dimension mismatch");
  LaurentMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("LaurentMatrix difference: shape mismatch");
  LaurentMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

namespace {

LaurentPolynomial minor_det(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return LaurentPolynomial(1);
  LaurentPolynomial acc;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      LaurentPolynomial sub = m(row, c) * minor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (sign > 0) acc += sub;
      else acc -= sub;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

LaurentPolynomial determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() > 8) throw std::invalid_argument("determinant: cofactor expansion limited to 8x8");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
  return minor_det(m, cols, 0);
}

}  // namespace l2b

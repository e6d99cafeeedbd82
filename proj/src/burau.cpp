#include "l2burau/burau.hpp"

#include "l2burau/fox.hpp"

namespace l2b {

LaurentMatrix burau(const BraidWord& beta) {
  const auto n = static_cast<std::size_t>(beta.strands());
  const std::vector<int> ones(n, 1);
  const std::vector<Word> images = act_on_x(beta);
  LaurentMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = specialize(fox_derivative(images[j], static_cast<int>(i + 1)), ones);
  return out;
}

LaurentMatrix burau_by_generators(const BraidWord& beta) {
  const auto n = static_cast<std::size_t>(beta.strands());
  LaurentMatrix acc = LaurentMatrix::identity(n);
  const LaurentPolynomial T = LaurentPolynomial::monomial(1);
  const LaurentPolynomial Tinv = LaurentPolynomial::monomial(-1);
  for (Letter l : beta.letters()) {
    const auto i = static_cast<std::size_t>(generator_of(l) - 1);
    LaurentMatrix s = LaurentMatrix::identity(n);
    if (l > 0) {
      s(i, i) = LaurentPolynomial(1) - T;
      s(i, i + 1) = LaurentPolynomial(1);
      s(i + 1, i) = T;
      s(i + 1, i + 1) = LaurentPolynomial();
    } else {
      s(i, i) = LaurentPolynomial();
      s(i, i + 1) = Tinv;
      s(i + 1, i) = LaurentPolynomial(1);
      s(i + 1, i + 1) = LaurentPolynomial(1) - Tinv;
    }
    acc = s * acc;
  }
  return acc;
}

LaurentMatrix reduced_burau(const BraidWord& beta) {
  const auto n = static_cast<std::size_t>(beta.strands());
  if (n < 2) throw std::invalid_argument("reduced Burau needs at least 2 strands");
  std::vector<int> g_weights(n);
  for (std::size_t i = 0; i < n; ++i) g_weights[i] = static_cast<int>(i + 1);
  const std::vector<Word> images = act_on_g(beta);
  LaurentMatrix out(n - 1, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = 0; i + 1 < n; ++i)
      out(i, j) = specialize(fox_derivative(images[j], static_cast<int>(i + 1)), g_weights);
  return out;
}

LaurentMatrix theta(const OperatorMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      LaurentPolynomial p;
      for (const auto& [w, c] : m(i, j).terms()) p.add_term(m.grade(w), c);
      out(i, j) = std::move(p);
    }
  return out;
}

}  // namespace l2b

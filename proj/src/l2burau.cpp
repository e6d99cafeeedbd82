#include "l2burau/l2burau.hpp"

#include <stdexcept>

#include "l2burau/fox.hpp"

namespace l2b {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::x: return "x";
    case Basis::g: return "g";
    case Basis::reduced: return "reduced";
  }
  return "?";
}

Basis basis_from_string(const std::string& s) {
  if (s == "x") return Basis::x;
  if (s == "g") return Basis::g;
  if (s == "reduced") return Basis::reduced;
  throw std::invalid_argument("unknown basis \"" + s + "\"");
}

OperatorMatrix::OperatorMatrix(std::size_t rows, std::size_t cols, OraclePtr oracle, Basis basis, int grading)
    : rows_(rows), cols_(cols), oracle_(std::move(oracle)), basis_(basis), grading_(grading), entries_(rows * cols) {
  if (!oracle_) throw std::invalid_argument("OperatorMatrix: missing oracle");
  if (grading_ != 1 && grading_ != -1) throw std::invalid_argument("OperatorMatrix: grading must be +1 or -1");
}

OperatorMatrix OperatorMatrix::identity(std::size_t n, OraclePtr oracle, Basis basis) {
  OperatorMatrix m(n, n, std::move(oracle), basis);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = IntElement::one();
  return m;
}

void OperatorMatrix::set(std::size_t i, std::size_t j, const IntElement& value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("OperatorMatrix::set: index out of range");
  entries_[i * cols_ + j] = value.map_words([this](const Word& w) { return oracle_->normalize(w); });
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.basis_ == b.basis_ && a.grading_ == b.grading_ &&
         a.oracle_->spec() == b.oracle_->spec() && a.entries_ == b.entries_;
}

namespace {

void require_same_oracle(const OperatorMatrix& a, const OperatorMatrix& b, const char* what) {
  if (!(a.oracle().spec() == b.oracle().spec())) throw std::invalid_argument(std::string(what) + ": oracles differ");
  if (a.grading() != b.grading()) throw std::invalid_argument(std::string(what) + ": gradings differ");
}

}  // namespace

OperatorMatrix compose(const OperatorMatrix& m, const OperatorMatrix& k) {
  if (m.cols() != k.rows()) throw std::invalid_argument("compose: dimension mismatch");
  require_same_oracle(m, k, "compose");
  const GroupOracle& o = m.oracle();
  auto mul = [&o](const Word& u, const Word& v) { return o.multiply(u, v); };
  OperatorMatrix out(m.rows(), k.cols(), m.oracle_ptr(), m.basis(), m.grading());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < k.cols(); ++c) {
      IntElement acc;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero() || k(j, c).is_zero()) continue;
        acc += IntElement::multiply(k(j, c), m(i, j), mul);
      }
      out.set(i, c, acc);
    }
  }
  return out;
}

OperatorMatrix adjoint(const OperatorMatrix& m) {
  OperatorMatrix out(m.cols(), m.rows(), m.oracle_ptr(), m.basis(), -m.grading());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m(i, j).conjugate());
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("operator difference: shape mismatch");
  require_same_oracle(a, b, "operator difference");
  OperatorMatrix out(a.rows(), a.cols(), a.oracle_ptr(), a.basis(), a.grading());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j) - b(i, j));
  return out;
}

namespace {

void require_rank(const BraidWord& beta, const GammaMap& gamma) {
  if (gamma.rank() != beta.strands()) {
    throw std::invalid_argument("gamma has " + std::to_string(gamma.rank()) + " images but the braid has " +
                                std::to_string(beta.strands()) + " strands");
  }
}

}  // namespace

OperatorMatrix l2_burau(const BraidWord& beta, const GammaMap& gamma) {
  require_rank(beta, gamma);
  const auto n = static_cast<std::size_t>(beta.strands());
  const std::vector<Word> images = act_on_x(beta);
  OperatorMatrix out(n, n, gamma.target(), Basis::x);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      out.set(i, j, apply_gamma(gamma, fox_derivative(images[j], static_cast<int>(i + 1)), Alphabet::x));
  return out;
}

OperatorMatrix g_basis_l2_burau(const BraidWord& beta, const GammaMap& gamma) {
  require_rank(beta, gamma);
  const auto n = static_cast<std::size_t>(beta.strands());
  const std::vector<Word> images = act_on_g(beta);
  OperatorMatrix out(n, n, gamma.target(), Basis::g);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      out.set(i, j, apply_gamma(gamma, fox_derivative(images[j], static_cast<int>(i + 1)), Alphabet::g));
  return out;
}

OperatorMatrix reduced_l2_burau(const BraidWord& beta, const GammaMap& gamma) {
  require_rank(beta, gamma);
  if (beta.strands() < 2) throw std::invalid_argument("reduced L2-Burau needs at least 2 strands");
  const auto n = static_cast<std::size_t>(beta.strands());
  const std::vector<Word> images = act_on_g(beta);
  OperatorMatrix out(n - 1, n - 1, gamma.target(), Basis::reduced);
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = 0; i + 1 < n; ++i)
      out.set(i, j, apply_gamma(gamma, fox_derivative(images[j], static_cast<int>(i + 1)), Alphabet::g));
  return out;
}

OperatorMatrix g_basis_l2_burau_via_x(const BraidWord& beta, const GammaMap& gamma) {
  require_rank(beta, gamma);
  const int n = beta.strands();
  const auto N = static_cast<std::size_t>(n);
  const std::vector<Word> g = g_in_x(n);
  const std::vector<Word> hx = act_on_x(beta);

  // C(k, j) = dg_j/dx_k, upper triangular with C(j, j) = g_{j-1}.
  std::vector<IntElement> C(N * N), hC(N * N), X(N * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) {
      C[k * N + j] = fox_derivative(g[j], static_cast<int>(k + 1));
      hC[k * N + j] = rewrite_alphabet(C[k * N + j], hx);
      X[k * N + j] = fox_derivative(hx[j], static_cast<int>(k + 1));
    }
  }
  // D(k, j) = d h(g_j)/dx_k = sum_l h(C(l, j)) X(k, l) = sum_i Gm(i, j) C(k, i).
  OperatorMatrix out(N, N, gamma.target(), Basis::g);
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<IntElement> col(N);
    for (std::size_t k = N; k-- > 0;) {
      IntElement rhs;
      for (std::size_t l = 0; l < N; ++l) rhs += hC[l * N + j] * X[k * N + l];
      for (std::size_t i = k + 1; i < N; ++i) rhs -= col[i] * C[k * N + i];
      // Right-divide by the unit C(k, k) = g_{k-1}.
      const Word inv = k == 0 ? Word{} : g[k - 1].inverse();
      col[k] = rhs * IntElement(inv);
    }
    const std::vector<Word> to_g = x_in_g(n);
    for (std::size_t i = 0; i < N; ++i) {
      out.set(i, j, apply_gamma(gamma, rewrite_alphabet(col[i], to_g), Alphabet::g));
    }
  }
  return out;
}

GammaMap precompose_gamma(const GammaMap& gamma, const BraidWord& beta) {
  require_rank(beta, gamma);
  std::vector<Word> images;
  for (const Word& w : act_on_x(beta)) images.push_back(gamma.apply(w));
  return GammaMap(gamma.target(), std::move(images));
}

OperatorMatrix to_g_coordinates(const OperatorMatrix& m) {
  const OracleSpec& spec = m.oracle().spec();
  if (spec.kind != OracleKind::free) throw std::invalid_argument("g-coordinates need a free-group oracle");
  const int n = spec.rank;
  OracleSpec g_spec = spec;
  g_spec.prefix = "g";
  int acc = 0;
  for (std::size_t i = 0; i < g_spec.weights.size(); ++i) {
    acc += spec.weights[i];
    g_spec.weights[i] = acc;
  }
  OperatorMatrix out(m.rows(), m.cols(), make_oracle(g_spec), m.basis(), m.grading());
  const std::vector<Word> to_g = x_in_g(n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, rewrite_alphabet(m(i, j), to_g));
  return out;
}

}  // namespace l2b

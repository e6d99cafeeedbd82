#include "l2burau/fkdet.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>

namespace l2b {

namespace {

Rational rational_pow(const Rational& t, long long e) {
  Rational base = e < 0 ? Rational(1 / t) : t;
  const auto n = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

template <class C, class Coef>
EvaluatedMatrix<C> evaluate_with(const OperatorMatrix& m, Coef&& coef) {
  EvaluatedMatrix<C> out{m.rows(), m.cols(), m.oracle_ptr(), std::vector<GroupRingElement<C>>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [w, c] : m(i, j).terms()) out(i, j).add_term(w, coef(c, m.grade(w)));
  return out;
}

template <class C>
C magnitude(const C& c) {
  return c < 0 ? C(-c) : c;
}

// (m o k)_{ik} = sum_j k_{jk} * m_{ij}, as for OperatorMatrix.
template <class C>
EvaluatedMatrix<C> compose_evaluated(const EvaluatedMatrix<C>& m, const EvaluatedMatrix<C>& k) {
  const GroupOracle& o = *m.oracle;
  auto mul = [&o](const Word& u, const Word& v) { return o.multiply(u, v); };
  EvaluatedMatrix<C> out{m.rows, k.cols, m.oracle, std::vector<GroupRingElement<C>>(m.rows * k.cols)};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t c = 0; c < k.cols; ++c)
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (m(i, j).is_zero() || k(j, c).is_zero()) continue;
        out(i, c) += GroupRingElement<C>::multiply(k(j, c), m(i, j), mul);
      }
  return out;
}

template <class C>
EvaluatedMatrix<C> gram_impl(const EvaluatedMatrix<C>& m) {
  EvaluatedMatrix<C> adj{m.cols, m.rows, m.oracle, std::vector<GroupRingElement<C>>(m.rows * m.cols)};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) adj(j, i) = m(i, j).conjugate();
  return compose_evaluated(adj, m);
}

template <class C>
C trace_impl(const EvaluatedMatrix<C>& m) {
  C acc = 0;
  for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i) acc += m(i, i).coefficient(Word{});
  return acc;
}

// Row l1 bound on the operator norm of a self-adjoint matrix over R[G].
template <class C>
C row_bound(const EvaluatedMatrix<C>& s) {
  C best = 0;
  for (std::size_t i = 0; i < s.rows; ++i) {
    C row = 0;
    for (std::size_t j = 0; j < s.cols; ++j)
      for (const auto& [w, c] : s(i, j).terms()) row += magnitude(c);
    if (row > best) best = row;
  }
  return best;
}

bool is_zero_operator(const OperatorMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

DetEstimate zero_estimate(const std::string& method) {
  DetEstimate d;
  d.method = method;
  d.value = 0.0;
  d.zero_operator = true;
  d.budgets = {0};
  d.estimates = {0.0};
  d.notes.push_back("operator is zero, hence not injective");
  return d;
}

void require_square(const OperatorMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square operator matrix");
  if (m.rows() == 0) throw std::invalid_argument("determinant of an empty operator matrix");
}

std::vector<int> ladder(int radius, const std::vector<int>& divisors_num, int denom) {
  std::vector<int> out;
  for (int k : divisors_num) {
    int r = std::max(1, radius * k / denom);
    if (out.empty() || r > out.back()) out.push_back(r);
  }
  if (out.empty() || out.back() != radius) out.push_back(radius);
  return out;
}

struct LevelResult {
  double log_det_half = 0.0;  // estimate of ln det_FK(m)
  double smallest = 0.0;
  bool failed = false;
};

LevelResult averaged_level(const RealMatrix& S, int radius, std::size_t cap) {
  TruncationBall ball = make_truncation_ball(S.oracle, radius, cap);
  const std::size_t nb = ball.elements.size();
  const std::size_t k = S.rows;
  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& [s, c] : S(i, j).terms())
        for (std::size_t v = 0; v < nb; ++v) {
          auto it = ball.index.find(S.oracle->multiply(ball.elements[v], s));
          if (it != ball.index.end()) {
            trip.emplace_back(static_cast<int>(i * nb + it->second), static_cast<int>(j * nb + v), c);
          }
        }
  const auto dim = static_cast<Eigen::Index>(k * nb);
  Eigen::SparseMatrix<double> A(dim, dim);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  LevelResult r;
  if (ldlt.info() != Eigen::Success) {
    r.failed = true;
    return r;
  }
  const auto D = ldlt.vectorD();
  double log_det = 0.0;
  r.smallest = std::numeric_limits<double>::infinity();
  for (Eigen::Index p = 0; p < D.size(); ++p) {
    r.smallest = std::min(r.smallest, D[p]);
    if (D[p] <= 0.0) {
      r.failed = true;
      return r;
    }
    log_det += std::log(D[p]);
  }
  r.log_det_half = log_det / (2.0 * static_cast<double>(nb));
  return r;
}

using SparseVec = std::unordered_map<Word, double, WordHash>;

double dot(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& small = a[i].size() < b[i].size() ? a[i] : b[i];
    const auto& large = a[i].size() < b[i].size() ? b[i] : a[i];
    for (const auto& [w, x] : small) {
      auto it = large.find(w);
      if (it != large.end()) acc += x * it->second;
    }
  }
  return acc;
}

void axpy(std::vector<SparseVec>& y, double a, const std::vector<SparseVec>& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    for (const auto& [w, v] : x[i]) y[i][w] += a * v;
}

std::vector<SparseVec> apply_gram(const RealMatrix& S, const std::vector<SparseVec>& v) {
  std::vector<SparseVec> out(S.rows);
  for (std::size_t i = 0; i < S.rows; ++i)
    for (std::size_t j = 0; j < S.cols; ++j)
      for (const auto& [s, c] : S(i, j).terms())
        for (const auto& [u, x] : v[j]) out[i][S.oracle->multiply(u, s)] += c * x;
  return out;
}

// Largest word-metric distance from e of the terms of S, by breadth-first
// search (normal-form length overestimates it in quotient groups).
int support_radius(const RealMatrix& S, std::size_t cap) {
  std::unordered_map<Word, int, WordHash> wanted;
  for (const auto& entry : S.entries)
    for (const auto& [s, c] : entry.terms()) wanted.emplace(s, -1);
  if (wanted.empty()) return 0;
  int found = 0;
  int max_dist = 0;
  if (auto it = wanted.find(Word{}); it != wanted.end()) {
    it->second = 0;
    ++found;
  }
  std::unordered_map<Word, int, WordHash> seen{{Word{}, 0}};
  std::vector<Word> frontier{Word{}};
  for (int r = 1; found < static_cast<int>(wanted.size()) && !frontier.empty(); ++r) {
    std::vector<Word> next;
    for (const Word& u : frontier)
      for (int g = 1; g <= S.oracle->alphabet_size(); ++g)
        for (int sign : {1, -1}) {
          Word v = S.oracle->multiply(u, Word::generator(g, sign));
          if (!seen.emplace(v, r).second) continue;
          next.push_back(v);
          if (auto it = wanted.find(v); it != wanted.end()) {
            it->second = r;
            max_dist = r;
            ++found;
          }
        }
    if (seen.size() > cap) throw ResourceLimit("support radius search exceeded the ball cap");
    frontier = std::move(next);
  }
  return max_dist;
}

// Gauss quadrature of ln against the spectral measure of S at delta_(copy, e),
// with `steps` Lanczos steps; exact for polynomials of degree < 2 * steps.
LevelResult rooted_level(const RealMatrix& S, int steps) {
  LevelResult r;
  r.smallest = std::numeric_limits<double>::infinity();
  const std::size_t k = S.rows;
  for (std::size_t copy = 0; copy < k; ++copy) {
    std::vector<SparseVec> q(k), q_prev(k);
    q[copy][Word{}] = 1.0;
    std::vector<double> alpha, beta;
    for (int j = 0; j < steps; ++j) {
      std::vector<SparseVec> w = apply_gram(S, q);
      if (j > 0) axpy(w, -beta.back(), q_prev);
      const double a = dot(w, q);
      alpha.push_back(a);
      axpy(w, -a, q);
      const double b = std::sqrt(std::max(0.0, dot(w, w)));
      if (j + 1 == steps || b <= 1e-13 * std::max(1.0, std::abs(a))) break;
      beta.push_back(b);
      for (auto& part : w)
        for (auto& [u, x] : part) x /= b;
      q_prev = std::move(q);
      q = std::move(w);
    }
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      T(a, a) = alpha[static_cast<std::size_t>(a)];
      if (a + 1 < m) T(a, a + 1) = T(a + 1, a) = beta[static_cast<std::size_t>(a)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
    for (Eigen::Index a = 0; a < m; ++a) {
      const double theta = eig.eigenvalues()[a];
      const double weight = eig.eigenvectors()(0, a) * eig.eigenvectors()(0, a);
      if (weight < 1e-14) continue;
      r.smallest = std::min(r.smallest, theta);
      if (theta <= 0.0) {
        r.failed = true;
        return r;
      }
      r.log_det_half += 0.5 * weight * std::log(theta);
    }
  }
  return r;
}

}  // namespace

RealMatrix evaluate(const OperatorMatrix& m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  return evaluate_with<double>(m, [t](const Integer& c, long long e) { return c.get_d() * std::pow(t, static_cast<double>(e)); });
}

RationalMatrix evaluate_exact(const OperatorMatrix& m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
  const Rational tq(t);
  return evaluate_with<Rational>(m, [&tq](const Integer& c, long long e) { return Rational(Rational(c) * rational_pow(tq, e)); });
}

RealMatrix gram(const RealMatrix& m) { return gram_impl(m); }
RationalMatrix gram(const RationalMatrix& m) { return gram_impl(m); }

double trace(const OperatorMatrix& m, double t) { return trace(evaluate(m, t)); }
double trace(const RealMatrix& m) { return trace_impl(m); }
Rational trace(const RationalMatrix& m) { return trace_impl(m); }

TruncationBall make_truncation_ball(OraclePtr oracle, int radius, std::size_t cap) {
  TruncationBall b;
  b.radius = radius;
  b.elements = ball(*oracle, radius, cap);
  b.oracle = std::move(oracle);
  b.index.reserve(b.elements.size());
  for (std::size_t k = 0; k < b.elements.size(); ++k) b.index.emplace(b.elements[k], k);
  return b;
}

std::string to_string(TruncationMode m) {
  switch (m) {
    case TruncationMode::automatic: return "auto";
    case TruncationMode::averaged: return "averaged";
    case TruncationMode::rooted: return "rooted";
  }
  return "?";
}

TruncationMode truncation_mode_from_string(const std::string& s) {
  if (s == "auto") return TruncationMode::automatic;
  if (s == "averaged") return TruncationMode::averaged;
  if (s == "rooted") return TruncationMode::rooted;
  throw std::invalid_argument("unknown truncation mode \"" + s + "\" (expected auto, averaged, rooted)");
}

DetEstimate fk_det_truncation(const OperatorMatrix& m, double t, const DetOptions& opts) {
  require_square(m);
  TruncationMode mode = opts.mode;
  if (mode == TruncationMode::automatic) {
    mode = m.oracle().is_infinite_cyclic() ? TruncationMode::averaged : TruncationMode::rooted;
  }
  const std::string method = "truncation:" + to_string(mode);
  if (is_zero_operator(m)) return zero_estimate(method);
  const int radius = opts.radius > 0 ? opts.radius : (mode == TruncationMode::averaged ? 2000 : 8);

  const RealMatrix S = gram(evaluate(m, t));
  const double scale = row_bound(S);
  DetEstimate d;
  d.method = method;
  const std::vector<int> radii =
      mode == TruncationMode::averaged ? ladder(radius, {1, 2, 4}, 8) : ladder(radius, {1, 2, 3}, 4);
  int support = 0;
  if (mode == TruncationMode::rooted) support = support_radius(S, opts.ball_cap);
  for (int r : radii) {
    LevelResult level;
    if (mode == TruncationMode::averaged) {
      level = averaged_level(S, r, opts.ball_cap);
    } else {
      // Krylov vectors stay inside the ball of radius r.
      const int steps = support == 0 ? static_cast<int>(m.rows()) : std::max(1, r / support);
      level = rooted_level(S, std::min(steps, 400));
    }
    d.budgets.push_back(r);
    d.smallest.push_back(level.failed ? 0.0 : level.smallest);
    d.estimates.push_back(level.failed ? 0.0 : std::exp(level.log_det_half));
    if (level.failed) d.notes.push_back("factorization found a non-positive pivot at radius " + std::to_string(r));
  }
  d.value = d.estimates.back();
  const std::size_t L = d.smallest.size();
  const double tiny = 1e-9 * std::max(scale, 1e-300);
  if (d.value == 0.0 || (L >= 2 && d.smallest[L - 1] < tiny && d.smallest[L - 2] < tiny)) {
    d.rank_deficient = true;
    d.notes.push_back("smallest truncated eigenvalue vanishes at the largest radii; treated as non-injective");
  }
  return d;
}

DetEstimate fk_det_series(const OperatorMatrix& m, double t, const DetOptions& opts) {
  require_square(m);
  if (opts.order < 1) throw std::invalid_argument("series order must be >= 1");
  if (is_zero_operator(m)) return zero_estimate("series");
  const RationalMatrix S = gram(evaluate_exact(m, t));
  const Rational b = row_bound(S);
  const std::size_t k = S.rows;

  RationalMatrix Q{k, k, S.oracle, std::vector<GroupRingElement<Rational>>(k * k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [w, c] : S(i, j).terms()) Q(i, j).add_term(w, Rational(-c / b));
      if (i == j) Q(i, j).add_term(Word{}, Rational(1));
    }
  const double log_b = std::log(b.get_num().get_d()) - std::log(b.get_den().get_d());

  DetEstimate d;
  d.method = "series";
  Rational sum = 0;
  RationalMatrix P = Q;
  for (int order = 1; order <= opts.order; ++order) {
    sum += trace(P) / Rational(order);
    d.budgets.push_back(order);
    d.estimates.push_back(std::exp(0.5 * (static_cast<double>(k) * log_b - sum.get_d())));
    if (order == opts.order) break;
    P = compose_evaluated(P, Q);
    std::size_t terms = 0;
    for (const auto& e : P.entries) terms += e.term_count();
    if (terms > opts.term_cap) {
      throw SeriesOverflow("series power " + std::to_string(order + 1) + " has " + std::to_string(terms) +
                           " terms, above the cap of " + std::to_string(opts.term_cap));
    }
  }
  d.value = d.estimates.back();
  return d;
}

DetEstimate fk_det(const OperatorMatrix& m, double t, const DetOptions& opts) {
  require_square(m);
  if (is_zero_operator(m)) return zero_estimate("truncation");
  DetEstimate d = fk_det_truncation(m, t, opts);
  try {
    const DetEstimate s = fk_det_series(m, t, opts);
    const double denom = std::max(std::abs(d.value), std::abs(s.value));
    d.cross_deviation = denom > 0 ? std::abs(d.value - s.value) / denom : 0.0;
    d.notes.push_back("series estimate " + std::to_string(s.value) + " at order " + std::to_string(opts.order));
  } catch (const ResourceLimit& e) {
    d.notes.push_back(std::string("series skipped: ") + e.what());
  }
  if (d.rank_deficient) d.value = 0.0;
  return d;
}

}  // namespace l2b

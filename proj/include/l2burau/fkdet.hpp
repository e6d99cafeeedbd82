#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "l2burau/group_ring.hpp"
#include "l2burau/groups.hpp"
#include "l2burau/l2burau.hpp"

namespace l2b {

/// A matrix over R[G] with numeric coefficients, obtained from an
/// OperatorMatrix by substituting a value for t. Products of evaluated
/// matrices no longer carry a single grading, which is why S = m* m is formed
/// after evaluation.
template <class C>
struct EvaluatedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  OraclePtr oracle;
  std::vector<GroupRingElement<C>> entries;

  const GroupRingElement<C>& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  GroupRingElement<C>& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

using RealMatrix = EvaluatedMatrix<double>;
using RationalMatrix = EvaluatedMatrix<Rational>;

RealMatrix evaluate(const OperatorMatrix& m, double t);
/// t is converted exactly (every double is a dyadic rational).
RationalMatrix evaluate_exact(const OperatorMatrix& m, double t);

/// adjoint(m) o m, i.e. the positive operator whose log-determinant is twice
/// that of m.
RealMatrix gram(const RealMatrix& m);
RationalMatrix gram(const RationalMatrix& m);

/// von Neumann trace: sum of the identity coefficients on the diagonal.
double trace(const OperatorMatrix& m, double t);
double trace(const RealMatrix& m);
Rational trace(const RationalMatrix& m);

/// The ball of the truncation together with its index map; e sits at 0.
struct TruncationBall {
  OraclePtr oracle;
  int radius = 0;
  std::vector<Word> elements;
  std::unordered_map<Word, std::size_t, WordHash> index;
};

TruncationBall make_truncation_ball(OraclePtr oracle, int radius, std::size_t cap = 2'000'000);

enum class TruncationMode {
  automatic,  // averaged on infinite cyclic groups, rooted otherwise
  averaged,   // ln det of the compression divided by the ball size
  rooted,     // Gauss quadrature of the spectral measure at the identity
};

std::string to_string(TruncationMode m);
TruncationMode truncation_mode_from_string(const std::string& s);

struct DetOptions {
  int radius = 0;  // 0 picks 2000 for averaged mode, 8 for rooted mode
  TruncationMode mode = TruncationMode::automatic;
  int order = 40;
  std::size_t term_cap = 2'000'000;  // series: terms per power
  std::size_t ball_cap = 2'000'000;
};

struct DetEstimate {
  double value = 0.0;
  std::string method;  // "truncation:averaged", "truncation:rooted", "series", ...
  std::vector<int> budgets;          // radii or orders
  std::vector<double> estimates;     // estimate at each budget
  std::vector<double> smallest;      // smallest pivot / Ritz value per budget (truncation only)
  double cross_deviation = -1.0;     // relative deviation to the other estimator, < 0 if not run
  bool zero_operator = false;
  bool rank_deficient = false;
  std::vector<std::string> notes;

  friend bool operator==(const DetEstimate&, const DetEstimate&) = default;
};

/// Thrown when an exact series power exceeds its term cap.
using SeriesOverflow = ResourceLimit;

DetEstimate fk_det_truncation(const OperatorMatrix& m, double t, const DetOptions& opts = {});
DetEstimate fk_det_series(const OperatorMatrix& m, double t, const DetOptions& opts = {});

/// Both estimators; returns the truncation value with the cross deviation
/// recorded, or 0 (regular determinant) when the operator is zero or the
/// rank-deficiency heuristic fires.
DetEstimate fk_det(const OperatorMatrix& m, double t, const DetOptions& opts = {});

}  // namespace l2b

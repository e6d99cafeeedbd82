#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "l2burau/braid.hpp"
#include "l2burau/fkdet.hpp"
#include "l2burau/groups.hpp"
#include "l2burau/l2burau.hpp"

namespace l2b {

/// gamma does not kill the closure relators.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deficiency-one presentation <g_1..g_n | h_beta(g_j) g_j^-1, j < n> of the
/// closure's link group, relators in the g-alphabet.
struct ClosurePresentation {
  BraidWord braid;
  std::vector<Word> relators;
};

/// Throws std::logic_error if h_beta(g_n) != g_n (cannot happen for a braid).
ClosurePresentation closure_presentation(const BraidWord& beta);

/// The same presentation with every relator conjugated by g_n^k. The Fox
/// matrix is multiplied on the left by g_n^k, so the determinant changes by the
/// monomial t^{n k (n-1)} and nothing else.
ClosurePresentation shift_relators(const ClosurePresentation& p, int k);

/// (n-1) x (n-1) matrix gamma(d r_j / d g_i).
OperatorMatrix fox_matrix(const ClosurePresentation& p, const GammaMap& gamma);

struct TorsionRecord {
  double t = 0.0;
  double det = 0.0;
  double torsion = 0.0;  // det / max(1, t)^n, defined up to a power of t
  DetEstimate estimate;

  friend bool operator==(const TorsionRecord&, const TorsionRecord&) = default;
};

struct TorsionReport {
  std::string braid;
  int strands = 0;
  std::string oracle;
  std::vector<std::string> gamma_images;
  std::string path;  // "reduced-burau" or "fox-presentation"
  std::vector<TorsionRecord> records;

  friend bool operator==(const TorsionReport&, const TorsionReport&) = default;
};

/// det^r(reduced L2-Burau - Id) per t, evaluated in parallel over the grid.
/// Throws VerificationError if gamma does not respect the closure relators.
TorsionReport torsion_determinant(const BraidWord& beta, const GammaMap& gamma, const std::vector<double>& t_grid,
                                  const DetOptions& opts = {});

/// The torsion from the Fox matrix of the presentation: det^r / max(1, t)^n.
DetEstimate fox_torsion_from_presentation(const ClosurePresentation& p, const GammaMap& gamma, double t,
                                          const DetOptions& opts = {});

/// Report for the Fox-presentation path over a t-grid.
TorsionReport fox_torsion_report(const ClosurePresentation& p, const GammaMap& gamma, const std::vector<double>& t_grid,
                                 const DetOptions& opts = {});

}  // namespace l2b

#include "l2burau/torsion.hpp"

#include <cmath>
#include <future>

#include "l2burau/fox.hpp"

namespace l2b {

ClosurePresentation closure_presentation(const BraidWord& beta) {
  const int n = beta.strands();
  const std::vector<Word> images = act_on_g(beta);
  ClosurePresentation p{beta, {}};
  for (int j = 1; j <= n; ++j) {
    Word r = images[static_cast<std::size_t>(j - 1)] * Word::generator(j, -1);
    if (j == n) {
      if (!r.is_identity()) throw std::logic_error("closure presentation: h_beta(g_n) differs from g_n");
    } else {
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

ClosurePresentation shift_relators(const ClosurePresentation& p, int k) {
  ClosurePresentation out{p.braid, {}};
  const int n = p.braid.strands();
  std::vector<Letter> shift(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? -n : n);
  const Word g = Word::reduce(shift);
  for (const Word& r : p.relators) out.relators.push_back(g * r * g.inverse());
  return out;
}

OperatorMatrix fox_matrix(const ClosurePresentation& p, const GammaMap& gamma) {
  const int n = p.braid.strands();
  if (gamma.rank() != n) throw std::invalid_argument("gamma rank does not match the braid");
  const auto m = static_cast<std::size_t>(n - 1);
  OperatorMatrix out(m, m, gamma.target(), Basis::reduced);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      out.set(i, j, apply_gamma(gamma, fox_derivative(p.relators[j], static_cast<int>(i + 1)), Alphabet::g));
  return out;
}

namespace {

void require_verified(const ClosurePresentation& p, const GammaMap& gamma) {
  if (gamma.rank() != p.braid.strands()) throw std::invalid_argument("gamma rank does not match the braid");
  if (!verify_gamma(gamma, p.relators, Alphabet::g)) {
    throw VerificationError("gamma does not send the closure relators of " + format_braid(p.braid) +
                            " to the identity of " + gamma.oracle().describe());
  }
}

TorsionReport report_header(const BraidWord& beta, const GammaMap& gamma, const std::string& path) {
  TorsionReport r;
  r.braid = format_braid(beta);
  r.strands = beta.strands();
  r.oracle = gamma.oracle().describe();
  for (const Word& w : gamma.images()) r.gamma_images.push_back(format_word(w, gamma.oracle().style()));
  r.path = path;
  return r;
}

std::vector<TorsionRecord> run_grid(const OperatorMatrix& op, int n, const std::vector<double>& grid,
                                    const DetOptions& opts) {
  std::vector<std::future<TorsionRecord>> jobs;
  for (double t : grid) {
    if (!(t > 0.0)) throw std::invalid_argument("t values must be positive");
    jobs.push_back(std::async(std::launch::async, [&op, n, t, &opts] {
      TorsionRecord rec;
      rec.t = t;
      rec.estimate = fk_det(op, t, opts);
      rec.det = rec.estimate.value;
      rec.torsion = rec.det / std::pow(std::max(1.0, t), n);
      return rec;
    }));
  }
  std::vector<TorsionRecord> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

TorsionReport torsion_determinant(const BraidWord& beta, const GammaMap& gamma, const std::vector<double>& t_grid,
                                  const DetOptions& opts) {
  const ClosurePresentation p = closure_presentation(beta);
  require_verified(p, gamma);
  const std::size_t m = static_cast<std::size_t>(beta.strands() - 1);
  const OperatorMatrix op = reduced_l2_burau(beta, gamma) - OperatorMatrix::identity(m, gamma.target(), Basis::reduced);
  TorsionReport r = report_header(beta, gamma, "reduced-burau");
  r.records = run_grid(op, beta.strands(), t_grid, opts);
  return r;
}

DetEstimate fox_torsion_from_presentation(const ClosurePresentation& p, const GammaMap& gamma, double t,
                                          const DetOptions& opts) {
  require_verified(p, gamma);
  DetEstimate d = fk_det(fox_matrix(p, gamma), t, opts);
  const double scale = std::pow(std::max(1.0, t), p.braid.strands());
  d.value /= scale;
  for (double& e : d.estimates) e /= scale;
  d.notes.push_back("value divided by max(1,t)^" + std::to_string(p.braid.strands()));
  return d;
}

TorsionReport fox_torsion_report(const ClosurePresentation& p, const GammaMap& gamma, const std::vector<double>& t_grid,
                                 const DetOptions& opts) {
  require_verified(p, gamma);
  TorsionReport r = report_header(p.braid, gamma, "fox-presentation");
  r.records = run_grid(fox_matrix(p, gamma), p.braid.strands(), t_grid, opts);
  return r;
}

}  // namespace l2b

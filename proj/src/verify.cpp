#include "l2burau/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "l2burau/burau.hpp"
#include "l2burau/l2burau.hpp"
#include "l2burau/torsion.hpp"

namespace l2b {

BraidWord random_braid(std::mt19937& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
  for (Letter& l : letters) l = inv(rng) ? -gen(rng) : gen(rng);
  return BraidWord(strands, std::move(letters));
}

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

CheckResult check(const std::string& suite, const std::string& name, bool pass, std::string detail = {}) {
  return {suite, name, pass, std::move(detail)};
}

bool within(double value, double expected, double rel) { return std::abs(value - expected) <= rel * std::abs(expected); }

std::vector<CheckResult> suite_longpaton(const DetOptions&) {
  const BraidWord b = longpaton();
  std::vector<CheckResult> out;
  out.push_back(check("longpaton", "classical Burau is the identity", burau(b) == LaurentMatrix::identity(6)));
  std::vector<int> id = {1, 2, 3, 4, 5, 6};
  out.push_back(check("longpaton", "permutation is trivial", permutation(b) == id,
                      std::to_string(closure_components(b)) + " closure components"));
  const Word h1 = act_on_x(b, 1);
  out.push_back(check("longpaton", "h_beta(x1) differs from x1", !(h1 == Word::generator(1)),
                      "|h_beta(x1)| = " + std::to_string(h1.size())));
  const GammaMap gamma = identity_gamma(6);
  const OperatorMatrix l2 = l2_burau(b, gamma);
  out.push_back(check("longpaton", "L2-Burau at gamma = id differs from Id",
                      !(l2 == OperatorMatrix::identity(6, gamma.target()))));
  return out;
}

std::vector<CheckResult> suite_cocycle(const DetOptions&) {
  std::mt19937 rng(20231);
  int full_ok = 0, reduced_ok = 0;
  const int cases = 100;
  for (int c = 0; c < cases; ++c) {
    const int n = 3 + c % 3;
    const BraidWord a = random_braid(rng, n, 8);
    const BraidWord b = random_braid(rng, n, 8);
    const GammaMap gamma = identity_gamma(n);
    const GammaMap shifted = precompose_gamma(gamma, b);
    if (l2_burau(a * b, gamma) == compose(l2_burau(b, gamma), l2_burau(a, shifted))) ++full_ok;
    if (reduced_l2_burau(a * b, gamma) == compose(reduced_l2_burau(b, gamma), reduced_l2_burau(a, shifted))) ++reduced_ok;
  }
  return {check("cocycle", "full map, 100 random pairs in B_3..B_5", full_ok == cases, std::to_string(full_ok) + "/100"),
          check("cocycle", "reduced map, 100 random pairs in B_3..B_5", reduced_ok == cases,
                std::to_string(reduced_ok) + "/100")};
}

std::vector<CheckResult> suite_theta(const DetOptions&) {
  std::mt19937 rng(7741);
  int id_ok = 0, ab_ok = 0, block_ok = 0;
  const int cases = 100;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + c % 5;
    const BraidWord b = random_braid(rng, n, 10);
    const LaurentMatrix classical = burau(b);
    if (theta(l2_burau(b, identity_gamma(n))) == classical) ++id_ok;
    if (theta(l2_burau(b, abelianization_gamma(n))) == classical) ++ab_ok;
    const OperatorMatrix g = g_basis_l2_burau(b, identity_gamma(n));
    bool last_column = true;
    for (int i = 0; i < n; ++i) {
      const IntElement expected = i == n - 1 ? IntElement::one() : IntElement();
      if (!(g(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1)) == expected)) last_column = false;
    }
    if (last_column) ++block_ok;
  }
  return {check("theta", "Theta(L2-Burau) = Burau, gamma = id", id_ok == cases, std::to_string(id_ok) + "/100"),
          check("theta", "Theta(L2-Burau) = Burau, gamma = abelianization", ab_ok == cases, std::to_string(ab_ok) + "/100"),
          check("theta", "g-basis matrix has standard last column", block_ok == cases, std::to_string(block_ok) + "/100")};
}

OperatorMatrix one_minus_t_g(const OraclePtr& o) {
  OperatorMatrix m(1, 1, o);
  IntElement e = IntElement::one();
  e.add_term(Word::generator(1), -1);
  m.set(0, 0, e);
  return m;
}

std::vector<CheckResult> suite_prop23(const DetOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, OraclePtr>> groups = {{"Z", free_abelian_group(1)}, {"F_2", free_group(2)}};
  for (const auto& [name, oracle] : groups) {
    const double tol = name == "Z" ? 0.02 : 0.05;
    const OperatorMatrix m = one_minus_t_g(oracle);
    for (double t : {0.25, 0.5, 2.0, 4.0}) {
      const double expected = std::max(1.0, t);
      const DetEstimate tr = fk_det_truncation(m, t, opts);
      const DetEstimate se = fk_det_series(m, t, opts);
      out.push_back(check("prop23", "Id - t R_g over " + name + ", t = " + fmt(t),
                          within(tr.value, expected, tol) && within(se.value, expected, tol),
                          "truncation " + fmt(tr.value) + ", series " + fmt(se.value) + ", expected " + fmt(expected)));
    }
  }
  return out;
}

std::vector<CheckResult> suite_unknot(const DetOptions& opts) {
  const BraidWord b(2, {1});
  const GammaMap gamma = cyclic_gamma(2);
  std::vector<CheckResult> out;
  const TorsionReport rep = torsion_determinant(b, gamma, {0.5, 2.0}, opts);
  for (const auto& rec : rep.records) {
    const double m = std::max(1.0, rec.t);
    out.push_back(check("unknot", "det = max(1,t) at t = " + fmt(rec.t), within(rec.det, m, 0.05),
                        "det " + fmt(rec.det) + ", cross deviation " + fmt(rec.estimate.cross_deviation)));
    out.push_back(check("unknot", "torsion = 1/max(1,t) at t = " + fmt(rec.t), within(rec.torsion, 1.0 / m, 0.05),
                        "torsion " + fmt(rec.torsion)));
  }
  return out;
}

std::vector<CheckResult> suite_unlink(const DetOptions& opts) {
  const BraidWord b = BraidWord::identity(2);
  const GammaMap gamma = identity_gamma(2);
  std::vector<CheckResult> out;
  const TorsionReport rep = torsion_determinant(b, gamma, {0.5, 2.0}, opts);
  for (const auto& rec : rep.records)
    out.push_back(check("unlink", "det = 0 at t = " + fmt(rec.t), rec.det == 0.0 && rec.estimate.zero_operator,
                        "det " + fmt(rec.det)));
  const DetEstimate fox = fox_torsion_from_presentation(closure_presentation(b), gamma, 2.0, opts);
  out.push_back(check("unlink", "Fox presentation path gives 0", fox.value == 0.0));
  return out;
}

std::vector<CheckResult> suite_trefoil(const DetOptions& opts) {
  const BraidWord b(2, {1, 1, 1});
  const GammaMap gamma(torus_knot_group(2, 3), {parse_word("b^-1 a"), parse_word("a^-1 b^2")});
  std::vector<CheckResult> out;
  const ClosurePresentation p = closure_presentation(b);
  out.push_back(check("trefoil", "gamma respects the closure relators", verify_gamma(gamma, p.relators, Alphabet::g)));
  const TorsionReport rep = torsion_determinant(b, gamma, {0.5, 2.0}, opts);
  const TorsionReport fox = fox_torsion_report(p, gamma, {0.5, 2.0}, opts);
  for (std::size_t k = 0; k < rep.records.size(); ++k) {
    const auto& rec = rep.records[k];
    const double expected = std::pow(std::max(1.0, rec.t), 3);
    out.push_back(check("trefoil", "det = max(1,t)^3 at t = " + fmt(rec.t), within(rec.det, expected, 0.15),
                        "det " + fmt(rec.det) + ", expected " + fmt(expected)));
    out.push_back(check("trefoil", "estimators agree at t = " + fmt(rec.t),
                        rec.estimate.cross_deviation >= 0 && rec.estimate.cross_deviation <= 0.10,
                        "cross deviation " + fmt(rec.estimate.cross_deviation)));
    const double f = fox.records[k].det;
    out.push_back(check("trefoil", "Fox presentation path agrees at t = " + fmt(rec.t),
                        within(f, rec.det, 0.15), "fox det " + fmt(f)));
  }
  return out;
}

using Suite = std::function<std::vector<CheckResult>(const DetOptions&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"longpaton", suite_longpaton}, {"cocycle", suite_cocycle}, {"theta", suite_theta},
      {"prop23", suite_prop23},       {"unknot", suite_unknot},   {"unlink", suite_unlink},
      {"trefoil", suite_trefoil},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"longpaton", "cocycle", "theta",  "prop23",
                                                 "unknot",    "unlink",  "trefoil"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const DetOptions& opts) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = suites().at(s)(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown verify suite \"" + name + "\"");
  return it->second(opts);
}

}  // namespace l2b

#pragma once

#include <random>
#include <string>
#include <vector>

#include "l2burau/braid.hpp"
#include "l2burau/fkdet.hpp"

namespace l2b {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Uniform random braid word: each letter is sigma_i^{+-1} with i uniform.
BraidWord random_braid(std::mt19937& rng, int strands, int max_length);

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" runs every suite). Throws std::invalid_argument
/// on an unknown name. Budgets in opts apply to the numeric suites.
std::vector<CheckResult> run_suite(const std::string& name, const DetOptions& opts = {});

}  // namespace l2b

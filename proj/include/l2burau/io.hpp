#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "l2burau/fkdet.hpp"
#include "l2burau/groups.hpp"
#include "l2burau/l2burau.hpp"
#include "l2burau/laurent.hpp"
#include "l2burau/torsion.hpp"

namespace l2b {

using json = nlohmann::json;

// Coefficients are JSON integers when they fit in 64 bits, decimal strings otherwise.
json to_json(const Integer& c);
Integer integer_from_json(const json& j);

/// {"rows", "cols", "entries": [[[[exponent, coefficient], ...], ...], ...]}
json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const json& j);

json to_json(const OracleSpec& s);
OracleSpec oracle_spec_from_json(const json& j);

/// {"rows", "cols", "basis", "grading", "group": spec,
///  "entries": [[[[word, coefficient, grade], ...], ...], ...]}
json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const json& j);

json to_json(const DetEstimate& d);
DetEstimate det_estimate_from_json(const json& j);

json to_json(const TorsionReport& r);
TorsionReport torsion_report_from_json(const json& j);

std::string to_csv(const LaurentMatrix& m);
std::string to_csv(const OperatorMatrix& m);
std::string to_csv(const TorsionReport& r);

/// A group config file: the target oracle and, optionally, gamma images.
///
///   {"kind": "torus-knot", "p": 2, "q": 3, "weights": [3, 2],
///    "gamma": ["b^-1 a", "a^-1 b^2"]}
///
/// "rank" sizes free and free-abelian groups, "strands" braid groups.
struct GroupConfig {
  OracleSpec spec;
  std::optional<std::vector<Word>> gamma;
};

/// Throws ParseError carrying the line and column of the offending input.
GroupConfig parse_group_config(const std::string& text);
GroupConfig load_group_config(const std::string& path);

}  // namespace l2b

#include "l2burau/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace l2b {

json to_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer coefficient, got " + j.dump());
}

json to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      json entry = json::array();
      for (const auto& [e, c] : m(i, j).terms()) entry.push_back(json::array({e, to_json(c)}));
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

LaurentMatrix laurent_matrix_from_json(const json& j) {
  LaurentMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const json& rows = j.at("entries");
  if (rows.size() != m.rows()) throw std::invalid_argument("LaurentMatrix: row count mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("LaurentMatrix: column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const json& term : rows[i][c]) m(i, c).add_term(term.at(0).get<long long>(), integer_from_json(term.at(1)));
  }
  return m;
}

json to_json(const OracleSpec& s) {
  json j{{"kind", to_string(s.kind)}, {"weights", s.weights}};
  switch (s.kind) {
    case OracleKind::torus_knot:
      j["p"] = s.p;
      j["q"] = s.q;
      break;
    case OracleKind::braid: j["strands"] = s.rank; break;
    default: j["rank"] = s.rank; break;
  }
  if (!s.prefix.empty()) j["prefix"] = s.prefix;
  return j;
}

OracleSpec oracle_spec_from_json(const json& j) {
  OracleSpec s;
  s.kind = oracle_kind_from_string(j.at("kind").get<std::string>());
  switch (s.kind) {
    case OracleKind::torus_knot:
      s.p = j.at("p").get<int>();
      s.q = j.at("q").get<int>();
      s.rank = 2;
      break;
    case OracleKind::braid: s.rank = j.at("strands").get<int>(); break;
    default: s.rank = j.at("rank").get<int>(); break;
  }
  if (j.contains("weights")) s.weights = j.at("weights").get<std::vector<int>>();
  if (j.contains("prefix")) s.prefix = j.at("prefix").get<std::string>();
  return s;
}

json to_json(const OperatorMatrix& m) {
  const WordStyle& style = m.oracle().style();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      json entry = json::array();
      for (const auto& [w, coef] : m(i, c).sorted_terms())
        entry.push_back(json::array({format_word(w, style), to_json(coef), m.grade(w)}));
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"basis", to_string(m.basis())},
          {"grading", m.grading()},
          {"group", to_json(m.oracle().spec())},
          {"entries", std::move(rows)}};
}

OperatorMatrix operator_matrix_from_json(const json& j) {
  OraclePtr oracle = make_oracle(oracle_spec_from_json(j.at("group")));
  OperatorMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), oracle,
                   basis_from_string(j.at("basis").get<std::string>()), j.value("grading", 1));
  const json& rows = j.at("entries");
  if (rows.size() != m.rows()) throw std::invalid_argument("OperatorMatrix: row count mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("OperatorMatrix: column count mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      IntElement e;
      for (const json& term : rows[i][c]) {
        Word w = oracle->normalize(parse_word(term.at(0).get<std::string>()));
        if (term.size() > 2 && term.at(2).get<long long>() != m.grade(w)) {
          throw std::invalid_argument("OperatorMatrix: grade of " + term.at(0).get<std::string>() +
                                      " disagrees with the group weights");
        }
        e.add_term(w, integer_from_json(term.at(1)));
      }
      m.set(i, c, e);
    }
  }
  return m;
}

json to_json(const DetEstimate& d) {
  return {{"value", d.value},
          {"method", d.method},
          {"budgets", d.budgets},
          {"estimates", d.estimates},
          {"smallest", d.smallest},
          {"cross_deviation", d.cross_deviation},
          {"zero_operator", d.zero_operator},
          {"rank_deficient", d.rank_deficient},
          {"notes", d.notes}};
}

DetEstimate det_estimate_from_json(const json& j) {
  DetEstimate d;
  d.value = j.at("value").get<double>();
  d.method = j.at("method").get<std::string>();
  d.budgets = j.at("budgets").get<std::vector<int>>();
  d.estimates = j.at("estimates").get<std::vector<double>>();
  d.smallest = j.value("smallest", std::vector<double>{});
  d.cross_deviation = j.value("cross_deviation", -1.0);
  d.zero_operator = j.value("zero_operator", false);
  d.rank_deficient = j.value("rank_deficient", false);
  d.notes = j.value("notes", std::vector<std::string>{});
  return d;
}

json to_json(const TorsionReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"t", rec.t}, {"det", rec.det}, {"torsion", rec.torsion}, {"det_tolerance_diag", to_json(rec.estimate)}});
  }
  return {{"braid", r.braid},
          {"strands", r.strands},
          {"oracle", r.oracle},
          {"gamma", r.gamma_images},
          {"path", r.path},
          {"note", "torsion = det / max(1,t)^n; both are defined up to multiplication by t^k"},
          {"records", std::move(records)}};
}

TorsionReport torsion_report_from_json(const json& j) {
  TorsionReport r;
  r.braid = j.at("braid").get<std::string>();
  r.strands = j.at("strands").get<int>();
  r.oracle = j.at("oracle").get<std::string>();
  r.gamma_images = j.at("gamma").get<std::vector<std::string>>();
  r.path = j.at("path").get<std::string>();
  for (const json& rec : j.at("records")) {
    TorsionRecord t;
    t.t = rec.at("t").get<double>();
    t.det = rec.at("det").get<double>();
    t.torsion = rec.at("torsion").get<double>();
    t.estimate = det_estimate_from_json(rec.at("det_tolerance_diag"));
    r.records.push_back(std::move(t));
  }
  return r;
}

std::string to_csv(const LaurentMatrix& m) {
  std::ostringstream out;
  out << "row,col,exponent,coefficient\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [e, c] : m(i, j).terms()) out << i + 1 << ',' << j + 1 << ',' << e << ',' << c.get_str() << '\n';
  return out.str();
}

std::string to_csv(const OperatorMatrix& m) {
  std::ostringstream out;
  out << "row,col,word,coefficient,grade\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& [w, c] : m(i, j).sorted_terms())
        out << i + 1 << ',' << j + 1 << ",\"" << format_word(w, m.oracle().style()) << "\"," << c.get_str() << ','
            << m.grade(w) << '\n';
  return out.str();
}

std::string to_csv(const TorsionReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "t,det,torsion,method,cross_deviation\n";
  for (const auto& rec : r.records)
    out << rec.t << ',' << rec.det << ',' << rec.torsion << ',' << rec.estimate.method << ','
        << rec.estimate.cross_deviation << '\n';
  return out.str();
}

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void config_error(const std::string& text, const std::string& key, const std::string& msg) {
  std::size_t at = key.empty() ? std::string::npos : text.find("\"" + key + "\"");
  auto [line, col] = at == std::string::npos ? std::pair{1, 1} : line_column(text, at);
  throw ParseError("group config: " + msg, line, col);
}

}  // namespace

GroupConfig parse_group_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("group config: malformed JSON (") + e.what() + ")", line, col);
  }
  if (!j.is_object()) config_error(text, "", "top level must be an object");
  static const std::set<std::string> known = {"kind", "rank", "strands", "p", "q", "weights", "gamma", "prefix"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) config_error(text, key, "unknown key \"" + key + "\"");
  }
  GroupConfig cfg;
  auto get_int = [&](const char* key) {
    if (!j.contains(key)) config_error(text, "kind", std::string("missing \"") + key + "\" for this kind");
    if (!j[key].is_number_integer()) config_error(text, key, std::string("\"") + key + "\" must be an integer");
    return j[key].get<int>();
  };
  if (!j.contains("kind") || !j["kind"].is_string()) config_error(text, "kind", "\"kind\" must be a string");
  try {
    cfg.spec.kind = oracle_kind_from_string(j["kind"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    config_error(text, "kind", e.what());
  }
  switch (cfg.spec.kind) {
    case OracleKind::torus_knot:
      cfg.spec.p = get_int("p");
      cfg.spec.q = get_int("q");
      cfg.spec.rank = 2;
      break;
    case OracleKind::braid: cfg.spec.rank = get_int("strands"); break;
    default: cfg.spec.rank = get_int("rank"); break;
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) config_error(text, "weights", "\"weights\" must be an array of integers");
    for (const json& w : j["weights"]) {
      if (!w.is_number_integer()) config_error(text, "weights", "\"weights\" must be an array of integers");
      cfg.spec.weights.push_back(w.get<int>());
    }
  }
  if (j.contains("prefix")) {
    if (!j["prefix"].is_string()) config_error(text, "prefix", "\"prefix\" must be a string");
    cfg.spec.prefix = j["prefix"].get<std::string>();
  }
  if (j.contains("gamma")) {
    if (!j["gamma"].is_array()) config_error(text, "gamma", "\"gamma\" must be an array of words");
    std::vector<Word> images;
    for (const json& w : j["gamma"]) {
      if (!w.is_string()) config_error(text, "gamma", "\"gamma\" entries must be strings");
      try {
        images.push_back(parse_word(w.get<std::string>()));
      } catch (const ParseError& e) {
        config_error(text, "gamma", e.what());
      }
    }
    cfg.gamma = std::move(images);
  }
  return cfg;
}

GroupConfig load_group_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group config \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_config(buf.str());
}

}  // namespace l2b

#include "l2burau/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "l2burau/burau.hpp"
#include "l2burau/io.hpp"
#include "l2burau/torsion.hpp"
#include "l2burau/verify.hpp"

namespace l2b {

namespace {

struct RunConfig {
  std::string braid;
  int strands = 0;
  std::string gamma = "id";
  std::string group;
  std::string t_list = "0.5,2";
  int radius = 0;
  int order = 40;
  std::string mode = "auto";
  std::string out;
  std::string format = "json";
  bool fox = false;
  std::string suite;
};

std::vector<double> parse_t_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  std::size_t column = 1;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double t = 0;
    try {
      t = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || item.empty()) throw ParseError("--t: \"" + item + "\" is not a number", 0, static_cast<int>(column));
    if (!(t > 0)) throw ParseError("--t: values must be positive", 0, static_cast<int>(column));
    out.push_back(t);
    column += item.size() + 1;
  }
  if (out.empty()) throw ParseError("--t: empty list", 0, 1);
  return out;
}

BraidWord braid_from(const RunConfig& cfg) { return parse_braid(cfg.braid, cfg.strands); }

// Resolves --group / --gamma into a gamma map for n strands.
GammaMap gamma_from(const RunConfig& cfg, int n) {
  if (!cfg.group.empty()) {
    GroupConfig g = load_group_config(cfg.group);
    if (!g.gamma) throw std::invalid_argument("group config \"" + cfg.group + "\" has no \"gamma\" images");
    return GammaMap(make_oracle(g.spec), *g.gamma);
  }
  if (cfg.gamma == "id") return identity_gamma(n);
  if (cfg.gamma == "abelianization") return abelianization_gamma(n);
  if (cfg.gamma == "cyclic") return cyclic_gamma(n);
  if (std::filesystem::exists(cfg.gamma)) {
    GroupConfig g = load_group_config(cfg.gamma);
    if (!g.gamma) throw std::invalid_argument("gamma file \"" + cfg.gamma + "\" has no \"gamma\" images");
    return GammaMap(make_oracle(g.spec), *g.gamma);
  }
  throw std::invalid_argument("--gamma must be id, abelianization, cyclic or a config file path; got \"" + cfg.gamma + "\"");
}

DetOptions det_options(const RunConfig& cfg) {
  if (cfg.radius < 0) throw std::invalid_argument("--radius must be positive");
  if (cfg.order < 1) throw std::invalid_argument("--order must be positive");
  DetOptions o;
  o.radius = cfg.radius;
  o.order = cfg.order;
  o.mode = truncation_mode_from_string(cfg.mode);
  return o;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw std::runtime_error("cannot write \"" + cfg.out + "\"");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

bool csv(const RunConfig& cfg) { return cfg.format == "csv"; }

int cmd_burau(const RunConfig& cfg, std::ostream& out) {
  const BraidWord b = braid_from(cfg);
  const LaurentMatrix m = burau(b);
  if (csv(cfg)) {
    emit(cfg, out, to_csv(m));
  } else {
    json j = to_json(m);
    j["braid"] = format_braid(b);
    j["strands"] = b.strands();
    emit(cfg, out, j.dump(2));
  }
  return exit_ok;
}

int cmd_operator(const RunConfig& cfg, std::ostream& out, bool reduced) {
  const BraidWord b = braid_from(cfg);
  const GammaMap gamma = gamma_from(cfg, b.strands());
  OperatorMatrix m = reduced ? reduced_l2_burau(b, gamma) : l2_burau(b, gamma);
  // With gamma = id the reduced matrix lives in F_n; show it in g-coordinates.
  if (reduced && cfg.group.empty() && cfg.gamma == "id") m = to_g_coordinates(m);
  if (csv(cfg)) {
    emit(cfg, out, to_csv(m));
  } else {
    json j = to_json(m);
    j["braid"] = format_braid(b);
    emit(cfg, out, j.dump(2));
  }
  return exit_ok;
}

int cmd_torsion(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BraidWord b = braid_from(cfg);
  const GammaMap gamma = gamma_from(cfg, b.strands());
  const std::vector<double> grid = parse_t_list(cfg.t_list);
  const DetOptions opts = det_options(cfg);
  TorsionReport rep;
  try {
    rep = cfg.fox ? fox_torsion_report(closure_presentation(b), gamma, grid, opts)
                  : torsion_determinant(b, gamma, grid, opts);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return exit_verification_failed;
  }
  emit(cfg, out, csv(cfg) ? to_csv(rep) : to_json(rep).dump(2));
  for (const auto& rec : rep.records) {
    err << "t = " << rec.t << "  det = " << rec.det << "  torsion = " << rec.torsion << "  [" << rec.estimate.method
        << (rec.estimate.cross_deviation >= 0 ? ", cross deviation " + std::to_string(rec.estimate.cross_deviation) : "")
        << "]\n";
  }
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<CheckResult> results = run_suite(cfg.suite, det_options(cfg));
  bool all = true;
  json j = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    err << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << r.suite << r.name;
    if (!r.detail.empty()) err << "  (" << r.detail << ")";
    err << "\n";
    j.push_back({{"suite", r.suite}, {"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  emit(cfg, out, json{{"suite", cfg.suite}, {"pass", all}, {"checks", j}}.dump(2));
  return all ? exit_ok : exit_verification_failed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical and L2-Burau matrices, Fuglede-Kadison determinants and L2-Alexander torsion of braid closures"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto braid_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--braid", cfg.braid, "braid word, e.g. \"s1 -s2\" or \"1 -2\"")->required();
    sub->add_option("--strands", cfg.strands, "strand count (default: max index + 1)");
  };
  auto output_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write the result to this file instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto gamma_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "id, abelianization, cyclic, or a group config file with gamma images");
    sub->add_option("--group", cfg.group, "group config file (JSON) with target group and gamma images");
  };
  auto det_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--radius", cfg.radius, "truncation radius (default 2000 on Z-like groups, 8 otherwise)");
    sub->add_option("--order", cfg.order, "series order (default 40)");
    sub->add_option("--mode", cfg.mode, "truncation mode: auto, averaged, rooted")
        ->check(CLI::IsMember({"auto", "averaged", "rooted"}));
  };

  CLI::App* burau_cmd = app.add_subcommand("burau", "classical Burau matrix over Z[T, T^-1]");
  braid_opts(burau_cmd);
  output_opts(burau_cmd);

  CLI::App* l2_cmd = app.add_subcommand("l2", "symbolic L2-Burau matrix over Z[G]");
  braid_opts(l2_cmd);
  gamma_opts(l2_cmd);
  output_opts(l2_cmd);

  CLI::App* reduced_cmd = app.add_subcommand("reduced", "symbolic reduced L2-Burau matrix");
  braid_opts(reduced_cmd);
  gamma_opts(reduced_cmd);
  output_opts(reduced_cmd);

  CLI::App* torsion_cmd = app.add_subcommand("torsion", "det^r(reduced L2-Burau - Id) and the implied torsion");
  braid_opts(torsion_cmd);
  gamma_opts(torsion_cmd);
  output_opts(torsion_cmd);
  det_opts(torsion_cmd);
  torsion_cmd->add_option("--t", cfg.t_list, "comma-separated t values (default 0.5,2)");
  torsion_cmd->add_flag("--fox", cfg.fox, "use the Fox matrix of the closure presentation instead");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a built-in verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  verify_cmd->add_option("suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(names));
  det_opts(verify_cmd);
  verify_cmd->add_option("--out", cfg.out, "write the JSON summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }

  try {
    if (burau_cmd->parsed()) return cmd_burau(cfg, out);
    if (l2_cmd->parsed()) return cmd_operator(cfg, out, false);
    if (reduced_cmd->parsed()) return cmd_operator(cfg, out, true);
    if (torsion_cmd->parsed()) return cmd_torsion(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error";
    if (e.line() > 0) err << ": line " << e.line();
    err << (e.line() > 0 ? ", column " : ": column ") << e.column() << ": " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace l2b

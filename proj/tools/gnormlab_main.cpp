// gnormlab CLI: randomized inequality suites over matrix-analysis
// checkers, worst-instance replay, and matrix norm reports.
//
//   gnormlab run --suite all --trials 200 --dims 2,4,8 --seed 7 --out report.json
//   gnormlab replay --from report.json --index 3
//   gnormlab check-matrix --file matrix.json --norms all
//
// Exit codes: 0 success, 1 theorem violation, 2 usage/config error, 3 I/O.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gnormlab/json_io.hpp"

namespace {

using namespace gnormlab;

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    dims.push_back(std::stoi(part));
  }
  return dims;
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) items.push_back(part);
  }
  return items;
}

int cmd_run(const SuiteConfig& config) {
  SuiteReport report = run_suite(config);
  const std::string format = config.report_format;
  if (!config.output_path.empty())
    emit_report(report, format, config.output_path);
  else
    std::cout << render_report(report, format);

  std::cerr << "gnormlab: " << report.evaluations << " evaluations, " << report.violations
            << " violations, " << report.wall_seconds << " s\n";
  for (const CheckerReport& cr : report.checkers) {
    if (!cr.recording) continue;
    long viol = 0, total = 0;
    for (const KindStats& ks : cr.kinds) {
      viol += ks.violations;
      total += ks.trials;
    }
    std::cerr << "gnormlab: recording suite " << cr.name << ": " << viol << "/" << total
              << " evaluations violated (worst slack " << cr.worst_slack << ")\n";
  }
  return exit_status(report);
}

int cmd_replay(const std::string& from, int index) {
  const nlohmann::json doc = load_json(from);
  if (!doc.contains("checkers") || !doc["checkers"].is_array())
    throw ConfigError("replay: not a suite report: " + from);
  const auto& checkers = doc["checkers"];
  if (index < 0 || size_t(index) >= checkers.size())
    throw ConfigError("replay: index out of range (report has " +
                      std::to_string(checkers.size()) + " checkers)");
  const nlohmann::json& worst = checkers[size_t(index)].at("worst");
  const IneqReport r = replay(worst);
  std::cout << report_to_json(r).dump(2) << "\n";

  const bool matches = r.lhs == worst.at("lhs").get<double>() &&
                       r.rhs == worst.at("rhs").get<double>();
  if (!matches) {
    std::cerr << "gnormlab: replay mismatch against stored lhs/rhs\n";
    return 1;
  }
  std::cerr << "gnormlab: replay reproduced stored lhs/rhs exactly\n";
  return 0;
}

int cmd_check_matrix(const std::string& file, const std::string& norms) {
  const CMatrix a = load_matrix(file);
  nlohmann::json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  if (a.square()) {
    const MatrixClass cls = classify(a, 1e-10);
    out["classify"] = {{"hermitian", cls.hermitian},
                       {"normal", cls.normal},
                       {"unitary", cls.unitary},
                       {"contraction", cls.contraction}};
  }
  std::vector<NormKind> kinds;
  if (norms == "all") {
    kinds = audit_grid(std::min(a.rows(), a.cols()));
  } else {
    for (const std::string& label : parse_list(norms)) {
      if (label == "operator")
        kinds.push_back(NormKind::operator_norm());
      else if (label == "hs" || label == "hilbert-schmidt")
        kinds.push_back(NormKind::hilbert_schmidt());
      else if (label.rfind("schatten:", 0) == 0)
        kinds.push_back(NormKind::schatten(std::stod(label.substr(9))));
      else if (label.rfind("kyfan:", 0) == 0)
        kinds.push_back(NormKind::kyfan(std::stoi(label.substr(6))));
      else
        throw ConfigError("unknown norm: " + label +
                          " (use all, operator, hs, schatten:P, kyfan:K)");
    }
  }
  const auto s = singular_values(a);
  nlohmann::json norms_out = nlohmann::json::array();
  for (const NormKind& kind : kinds)
    norms_out.push_back(
        {{"norm", norm_kind_to_json(kind)}, {"value", norm_from_singular_values(s, kind)}});
  out["norms"] = std::move(norms_out);
  out["singular_values"] = s;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-analysis norm inequality laboratory"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run randomized inequality suites");
  std::string suite_arg = "all";
  std::string dims_arg, config_path, format_arg, out_path;
  int trials = -1, contour_nodes = -1;
  double radius = -1.0, atol = -1.0, rtol = -1.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  run->add_option("--suite", suite_arg, "checker name list or 'all'");
  run->add_option("--trials", trials, "trials per checker per dim");
  run->add_option("--dims", dims_arg, "comma-separated dimensions, e.g. 2,4,8");
  auto* seed_opt = run->add_option("--seed", seed, "master seed");
  run->add_option("--radius", radius, "spectrum radius in (0,1)");
  run->add_option("--atol", atol, "absolute slack tolerance");
  run->add_option("--rtol", rtol, "relative slack tolerance");
  run->add_option("--contour-nodes", contour_nodes, "trapezoid nodes for the contour oracle");
  run->add_option("--format", format_arg, "json or csv");
  run->add_option("--out", out_path, "report path (stdout when omitted)");
  run->add_option("--config", config_path, "JSON config file; flags override");

  // replay
  auto* rep = app.add_subcommand("replay", "re-evaluate a stored worst instance");
  std::string from_path;
  int index = 0;
  rep->add_option("--from", from_path, "suite report (json)")->required();
  rep->add_option("--index", index, "checker index within the report");

  // check-matrix
  auto* chk = app.add_subcommand("check-matrix", "classify a matrix and print its norms");
  std::string matrix_path, norms_arg = "all";
  chk->add_option("--file", matrix_path, "matrix json file")->required();
  chk->add_option("--norms", norms_arg, "all or list like operator,hs,schatten:3,kyfan:2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  seed_set = seed_opt->count() > 0;

  try {
    if (run->parsed()) {
      SuiteConfig config;
      if (!config_path.empty()) config = config_from_json(load_json(config_path));
      if (run->count("--suite")) config.suites = parse_list(suite_arg);
      if (trials >= 0) config.trials = trials;
      if (!dims_arg.empty()) config.dims = parse_dims(dims_arg);
      if (seed_set) config.seed = seed;
      if (radius > 0.0) config.spectrum_radius = radius;
      if (atol >= 0.0) config.atol = atol;
      if (rtol >= 0.0) config.rtol = rtol;
      if (contour_nodes > 0) config.contour_nodes = contour_nodes;
      if (!format_arg.empty()) config.report_format = format_arg;
      if (!out_path.empty()) config.output_path = out_path;
      config.validate();
      return cmd_run(config);
    }
    if (rep->parsed()) return cmd_replay(from_path, index);
    if (chk->parsed()) return cmd_check_matrix(matrix_path, norms_arg);
  } catch (const ConfigError& e) {
    std::cerr << "gnormlab: config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "gnormlab: i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gnormlab: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gnormlab: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

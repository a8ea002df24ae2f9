#include "gnormlab/json_io.hpp"

#include <fstream>

namespace gnormlab {

nlohmann::json matrix_to_json(const CMatrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      entries.push_back({a(i, j).real(), a(i, j).imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != size_t(rows) * size_t(cols))
    throw std::invalid_argument("matrix json: entries length must be rows*cols");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("matrix json: each entry must be [re, im]");
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return CMatrix(rows, cols, std::move(values));
}

nlohmann::json herglotz_to_json(const HerglotzFunction& f) {
  return {{"atoms", f.atoms}, {"weights", f.weights}};
}

HerglotzFunction herglotz_from_json(const nlohmann::json& j) {
  return HerglotzFunction::from(j.at("atoms").get<std::vector<double>>(),
                                j.at("weights").get<std::vector<double>>());
}

nlohmann::json norm_kind_to_json(const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::op:
      return {{"tag", "operator"}};
    case NormKind::Tag::hilbert_schmidt:
      return {{"tag", "hilbert-schmidt"}};
    case NormKind::Tag::schatten:
      return {{"tag", "schatten"}, {"p", kind.p}};
    case NormKind::Tag::kyfan:
      return {{"tag", "kyfan"}, {"k", kind.k}};
  }
  throw std::logic_error("norm_kind_to_json: bad tag");
}

NormKind norm_kind_from_json(const nlohmann::json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "operator") return NormKind::operator_norm();
  if (tag == "hilbert-schmidt") return NormKind::hilbert_schmidt();
  if (tag == "schatten") return NormKind::schatten(j.at("p").get<double>());
  if (tag == "kyfan") return NormKind::kyfan(j.at("k").get<int>());
  throw std::invalid_argument("norm kind json: unknown tag " + tag);
}

nlohmann::json report_to_json(const IneqReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["norm"] = r.norm_kind ? norm_kind_to_json(*r.norm_kind)
                          : nlohmann::json{{"tag", r.norm_label}};
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["slack"] = r.slack;
  j["holds"] = r.holds;
  j["params"] = r.params;
  return j;
}

nlohmann::json config_to_json(const SuiteConfig& c) {
  return {{"trials", c.trials},
          {"dims", c.dims},
          {"seed", c.seed},
          {"spectrum_radius", c.spectrum_radius},
          {"atol", c.atol},
          {"rtol", c.rtol},
          {"suites", c.suites},
          {"contour_nodes", c.contour_nodes},
          {"report_format", c.report_format},
          {"output_path", c.output_path}};
}

SuiteConfig config_from_json(const nlohmann::json& j) {
  SuiteConfig c;
  if (j.contains("trials")) c.trials = j["trials"].get<int>();
  if (j.contains("dims")) c.dims = j["dims"].get<std::vector<int>>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("spectrum_radius")) c.spectrum_radius = j["spectrum_radius"].get<double>();
  if (j.contains("atol")) c.atol = j["atol"].get<double>();
  if (j.contains("rtol")) c.rtol = j["rtol"].get<double>();
  if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
  if (j.contains("contour_nodes")) c.contour_nodes = j["contour_nodes"].get<int>();
  if (j.contains("report_format")) c.report_format = j["report_format"].get<std::string>();
  if (j.contains("output_path")) c.output_path = j["output_path"].get<std::string>();
  return c;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("parse error in " + path + ": " + e.what());
  }
  return j;
}

CMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json(path)); }

}  // namespace gnormlab

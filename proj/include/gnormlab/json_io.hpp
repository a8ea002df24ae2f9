#ifndef GNORMLAB_JSON_IO_HPP
#define GNORMLAB_JSON_IO_HPP

#include <string>

#include "gnormlab/harness.hpp"

namespace gnormlab {

// {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major; doubles
// round-trip bit-exactly through the shortest-representation serializer.
nlohmann::json matrix_to_json(const CMatrix& a);
CMatrix matrix_from_json(const nlohmann::json& j);

// {"atoms": [...], "weights": [...]}
nlohmann::json herglotz_to_json(const HerglotzFunction& f);
HerglotzFunction herglotz_from_json(const nlohmann::json& j);

// {"tag": ..., "p"/"k": ...}
nlohmann::json norm_kind_to_json(const NormKind& kind);
NormKind norm_kind_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const IneqReport& r);

nlohmann::json config_to_json(const SuiteConfig& c);
SuiteConfig config_from_json(const nlohmann::json& j);

CMatrix load_matrix(const std::string& path);       // throws IoError
nlohmann::json load_json(const std::string& path);  // throws IoError

}  // namespace gnormlab

#endif

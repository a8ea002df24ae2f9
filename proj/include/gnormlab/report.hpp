#ifndef GNORMLAB_REPORT_HPP
#define GNORMLAB_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"

namespace gnormlab {

// Which unitarily invariant norm to evaluate.
struct NormKind {
  enum class Tag { op, hilbert_schmidt, schatten, kyfan };

  Tag tag = Tag::op;
  double p = 0.0;  // schatten only, >= 1
  int k = 0;       // kyfan only, >= 1

  static NormKind operator_norm() { return {Tag::op, 0.0, 0}; }
  static NormKind hilbert_schmidt() { return {Tag::hilbert_schmidt, 0.0, 0}; }
  static NormKind schatten(double p);
  static NormKind kyfan(int k);

  // "operator", "hilbert-schmidt", "schatten-1.5", "kyfan-3"
  std::string label() const;
};

struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-9;

  double margin(double lhs, double rhs) const;
  bool holds(double lhs, double rhs) const;  // rhs - lhs >= -margin
};

// One inequality evaluation. `norm_kind` is empty for all-singular-value
// and identity-defect checks; `norm_label` is always set.
struct IneqReport {
  std::string name;
  std::optional<NormKind> norm_kind;
  std::string norm_label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  nlohmann::json params = nlohmann::json::object();

  static IneqReport make(std::string name, std::optional<NormKind> kind,
                         double lhs, double rhs, const Tolerance& tol);
};

}  // namespace gnormlab

#endif

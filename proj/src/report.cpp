#include "gnormlab/report.hpp"

#include <cmath>
#include <stdexcept>

namespace gnormlab {

NormKind NormKind::schatten(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("NormKind::schatten: p must be finite and >= 1");
  return {Tag::schatten, p, 0};
}

NormKind NormKind::kyfan(int k) {
  if (k < 1) throw std::invalid_argument("NormKind::kyfan: k must be >= 1");
  return {Tag::kyfan, 0.0, k};
}

std::string NormKind::label() const {
  switch (tag) {
    case Tag::op:
      return "operator";
    case Tag::hilbert_schmidt:
      return "hilbert-schmidt";
    case Tag::schatten: {
      // trim trailing zeros so labels read "schatten-1.5", "schatten-2"
      std::string v = std::to_string(p);
      while (!v.empty() && v.back() == '0') v.pop_back();
      if (!v.empty() && v.back() == '.') v.pop_back();
      return "schatten-" + v;
    }
    case Tag::kyfan:
      return "kyfan-" + std::to_string(k);
  }
  return "?";
}

double Tolerance::margin(double lhs, double rhs) const {
  return atol + rtol * std::max(std::abs(lhs), std::abs(rhs));
}

bool Tolerance::holds(double lhs, double rhs) const { return rhs - lhs >= -margin(lhs, rhs); }

IneqReport IneqReport::make(std::string name, std::optional<NormKind> kind, double lhs, double rhs,
                            const Tolerance& tol) {
  IneqReport r;
  r.name = std::move(name);
  r.norm_kind = kind;
  r.norm_label = kind ? kind->label() : "sv";
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = tol.holds(lhs, rhs);
  return r;
}

}  // namespace gnormlab

#include "gnormlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gnormlab/spectral.hpp"

namespace gnormlab {

double norm_from_singular_values(std::span<const double> s, const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::op:
      return s.empty() ? 0.0 : s.front();
    case NormKind::Tag::hilbert_schmidt: {
      double sum = 0.0;
      for (double v : s) sum += v * v;
      return std::sqrt(sum);
    }
    case NormKind::Tag::schatten: {
      double sum = 0.0;
      for (double v : s) sum += std::pow(v, kind.p);
      return std::pow(sum, 1.0 / kind.p);
    }
    case NormKind::Tag::kyfan: {
      // k beyond the value count clamps to the full sum (tail values are 0)
      const size_t k = std::min<size_t>(size_t(kind.k), s.size());
      double sum = 0.0;
      for (size_t j = 0; j < k; ++j) sum += s[j];
      return sum;
    }
  }
  throw std::logic_error("norm_from_singular_values: bad tag");
}

double uinorm(const CMatrix& a, const NormKind& kind) {
  return norm_from_singular_values(singular_values(a), kind);
}

double hs_norm_direct(const CMatrix& a) { return frobenius(a); }

std::vector<NormKind> audit_grid(int dim) {
  std::vector<NormKind> grid;
  grid.push_back(NormKind::operator_norm());
  grid.push_back(NormKind::hilbert_schmidt());
  for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) grid.push_back(NormKind::schatten(p));
  for (int k = 1; k <= dim; ++k) grid.push_back(NormKind::kyfan(k));
  return grid;
}

IneqReport check_submultiplicative(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                   const NormKind& kind, const Tolerance& tol) {
  if (a.cols() != x.rows() || x.cols() != b.rows())
    throw std::invalid_argument("check_submultiplicative: shapes not composable");
  const double lhs = uinorm(a * x * b, kind);
  const auto sa = singular_values(a);
  const auto sb = singular_values(b);
  const double rhs = (sa.empty() ? 0.0 : sa.front()) * (sb.empty() ? 0.0 : sb.front()) *
                     uinorm(x, kind);
  return IneqReport::make("submult", kind, lhs, rhs, tol);
}

namespace {

double rel_defect(double x, double y) { return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y))); }

}  // namespace

IneqReport check_direct_sum_identities(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (!a.square() || !b.square())
    throw std::invalid_argument("check_direct_sum_identities: operands must be square");
  const CMatrix ds = direct_sum(a, b);
  const auto s_ds = singular_values(ds);
  const auto s_a = singular_values(a);
  const auto s_b = singular_values(b);

  double defect = 0.0;
  const double op_ds = s_ds.empty() ? 0.0 : s_ds.front();
  const double op_max = std::max(s_a.empty() ? 0.0 : s_a.front(), s_b.empty() ? 0.0 : s_b.front());
  defect = std::max(defect, rel_defect(op_ds, op_max));

  const double hs_ds = norm_from_singular_values(s_ds, NormKind::hilbert_schmidt());
  const double hs_pyth = std::hypot(frobenius(a), frobenius(b));
  defect = std::max(defect, rel_defect(hs_ds, hs_pyth));

  if (!a.empty() && !b.empty() && a.rows() == b.rows()) {
    const auto s_off = singular_values(block_offdiag(a, b));
    for (const NormKind& kind : audit_grid(ds.rows()))
      defect = std::max(defect, rel_defect(norm_from_singular_values(s_off, kind),
                                           norm_from_singular_values(s_ds, kind)));
  }

  auto r = IneqReport::make("dsum_ids", std::nullopt, defect, 0.0, tol);
  r.norm_label = "grid";
  return r;
}

IneqReport kyfan_dominance_check(const CMatrix& x, const CMatrix& y, const Tolerance& tol) {
  if (!same_shape(x, y)) throw std::invalid_argument("kyfan_dominance_check: size mismatch");
  const auto sx = singular_values(x);
  const auto sy = singular_values(y);
  const int n = int(sx.size());

  bool premise = true;
  double runx = 0.0, runy = 0.0;
  for (int k = 0; k < n && premise; ++k) {
    runx += sx[k];
    runy += sy[k];
    if (!tol.holds(runx, runy)) premise = false;
  }

  IneqReport r;
  if (!premise) {
    r = IneqReport::make("kyfan_dom", std::nullopt, 0.0, 0.0, tol);
    r.params["premise"] = false;
  } else {
    // conclusions: every Schatten p and the operator norm dominate too
    double min_slack = std::numeric_limits<double>::infinity();
    double wl = 0.0, wr = 0.0;
    bool all_hold = true;
    auto probe = [&](const NormKind& kind) {
      const double lx = norm_from_singular_values(sx, kind);
      const double ly = norm_from_singular_values(sy, kind);
      all_hold = all_hold && tol.holds(lx, ly);
      if (ly - lx < min_slack) {
        min_slack = ly - lx;
        wl = lx;
        wr = ly;
      }
    };
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) probe(NormKind::schatten(p));
    probe(NormKind::operator_norm());
    r = IneqReport::make("kyfan_dom", std::nullopt, wl, wr, tol);
    r.holds = all_hold;
    r.params["premise"] = true;
  }
  r.norm_label = "grid";
  return r;
}

}  // namespace gnormlab

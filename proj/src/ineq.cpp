#include "gnormlab/ineq.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gnormlab {

const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

const char* to_string(MixedForm f) {
  switch (f) {
    case MixedForm::fx_minus_xg: return "fx_minus_xg";
    case MixedForm::fx_plus_xg: return "fx_plus_xg";
    case MixedForm::fxg_minus_x: return "fxg_minus_x";
    case MixedForm::fxg_plus_x: return "fxg_plus_x";
  }
  return "?";
}

const char* to_string(BlockForm f) { return f == BlockForm::difference ? "difference" : "sum"; }
const char* to_string(FbarForm f) { return f == FbarForm::two_matrix ? "two_matrix" : "re_part"; }
const char* to_string(PosMultVariant v) {
  return v == PosMultVariant::stated_plus ? "stated_plus" : "proof_minus";
}
const char* to_string(RediffVariant v) {
  return v == RediffVariant::stated ? "stated" : "near_unitary";
}
const char* to_string(RemarkForm f) { return f == RemarkForm::general ? "general" : "re_special"; }

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double sign_factor(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

void require_in_disk(const SpectralDecomposition& d, const char* who) {
  if (!(d.spectral_radius() < 1.0))
    throw std::invalid_argument(std::string(who) + ": spectrum not inside the unit disk");
}

void require_real_spectrum(const SpectralDecomposition& d, const char* who) {
  for (const Complex& lam : d.eigenvalues)
    if (std::abs(lam.imag()) > 1e-8 * (1.0 + std::abs(lam)))
      throw std::invalid_argument(std::string(who) + ": spectrum must be real (Hermitian)");
}

void require_square_same(const CMatrix& x, int n, const char* who) {
  if (!x.square() || x.rows() != n)
    throw std::invalid_argument(std::string(who) + ": operand size mismatch");
}

void require_hermitian_matrix(const CMatrix& a, const char* who) {
  if (!a.square()) throw std::invalid_argument(std::string(who) + ": operand must be square");
  if (frobenius(a - a.adjoint()) > 1e-8 * (1.0 + frobenius(a)))
    throw std::invalid_argument(std::string(who) + ": operand must be Hermitian");
}

// |A| for a normal matrix given by its decomposition: U diag(|lambda|) U*.
CMatrix abs_from_decomp(const SpectralDecomposition& d) {
  std::vector<Complex> mags(d.eigenvalues.size());
  for (size_t j = 0; j < mags.size(); ++j) mags[j] = std::abs(d.eigenvalues[j]);
  return d.u * CMatrix::diag(std::span<const Complex>(mags)) * d.u.adjoint();
}

double operator_norm(const CMatrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

CMatrix re_part(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

// lhs = |||L|||, rhs = scale * |||R||| over the kind list, one SVD each.
std::vector<IneqReport> eval_pair(const std::string& name, const CMatrix& lhs_mat,
                                  const CMatrix& rhs_mat, double scale, KindSpan kinds,
                                  const Tolerance& tol, const nlohmann::json& params) {
  const auto sl = singular_values(lhs_mat);
  const auto sr = singular_values(rhs_mat);
  std::vector<IneqReport> out;
  out.reserve(kinds.size());
  for (const NormKind& kind : kinds) {
    const double lhs = norm_from_singular_values(sl, kind);
    const double rhs = scale * norm_from_singular_values(sr, kind);
    IneqReport r = IneqReport::make(name, kind, lhs, rhs, tol);
    r.params = params;
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json base_params(double da, double db) {
  return nlohmann::json{{"d_a", da}, {"d_b", db}};
}

}  // namespace

std::vector<IneqReport> check_fg_mixed_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, const HerglotzFunction& g,
                                            MixedForm form, KindSpan kinds, const Tolerance& tol) {
  require_in_disk(a, "check_fg_mixed");
  require_in_disk(b, "check_fg_mixed");
  require_square_same(x, a.dim(), "check_fg_mixed");
  if (b.dim() != a.dim()) throw std::invalid_argument("check_fg_mixed: operand size mismatch");
  const CMatrix am = a.reconstruct(), bm = b.reconstruct();
  const CMatrix fa = apply_spectral(f, a), gb = apply_spectral(g, b);
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  const double scale = 2.0 * kSqrt2 / (da * db);

  CMatrix lhs_mat, rhs_mat;
  switch (form) {
    case MixedForm::fx_minus_xg:
      lhs_mat = fa * x - x * gb;
      rhs_mat = abs_matrix(am * x) + abs_matrix(x * bm);
      break;
    case MixedForm::fx_plus_xg:
      lhs_mat = fa * x + x * gb;
      rhs_mat = abs_matrix(am * x * bm) + abs_matrix(x);
      break;
    case MixedForm::fxg_minus_x:
      lhs_mat = fa * x * gb - x;
      rhs_mat = abs_matrix(am * x) + abs_matrix(x * bm);
      break;
    case MixedForm::fxg_plus_x:
      lhs_mat = fa * x * gb + x;
      rhs_mat = abs_matrix(am * x * bm) + abs_matrix(x);
      break;
  }
  nlohmann::json params = base_params(da, db);
  params["form"] = to_string(form);
  return eval_pair(to_string(form), lhs_mat, rhs_mat, scale, kinds, tol, params);
}

IneqReport check_fg_mixed(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                          MixedForm form, const NormKind& kind, const Tolerance& tol) {
  return check_fg_mixed_grid(a, b, x, f, g, form, KindSpan(&kind, 1), tol).front();
}

namespace {

IneqReport hs_report(const std::string& name, const CMatrix& lhs_mat, const CMatrix& rhs_mat,
                     Sign sign, double da, double db, const Tolerance& tol) {
  IneqReport r = IneqReport::make(name, NormKind::hilbert_schmidt(), hs_norm_direct(lhs_mat),
                                  hs_norm_direct(rhs_mat), tol);
  r.params = base_params(da, db);
  r.params["sign"] = to_string(sign);
  return r;
}

}  // namespace

IneqReport check_hs_triple(const SpectralDecomposition& a, const SpectralDecomposition& b,
                           const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                           Sign sign, const Tolerance& tol) {
  require_in_disk(a, "check_hs_triple");
  require_in_disk(b, "check_hs_triple");
  require_real_spectrum(a, "check_hs_triple");
  require_real_spectrum(b, "check_hs_triple");
  require_square_same(x, a.dim(), "check_hs_triple");
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  const CMatrix fa = apply_spectral(f, a), gb = apply_spectral(g, b);
  const CMatrix absa = abs_from_decomp(a), absb = abs_from_decomp(b);
  const CMatrix eye = CMatrix::identity(a.dim());
  const double s = sign_factor(sign);

  const CMatrix lhs_mat = fa * x + x * gb + Complex(s, 0.0) * (fa * x * gb);
  const CMatrix rhs_mat = (1.0 / da) * (x + absa * x) + (1.0 / db) * (x + x * absb) +
                          (1.0 / (da * db)) * ((eye + absa) * x * (eye + absb));
  return hs_report("hs_fx_xg_fxg", lhs_mat, rhs_mat, sign, da, db, tol);
}

IneqReport check_hs_sandwich(const SpectralDecomposition& a, const SpectralDecomposition& b,
                             const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                             Sign sign, const Tolerance& tol) {
  require_in_disk(a, "check_hs_sandwich");
  require_in_disk(b, "check_hs_sandwich");
  require_real_spectrum(a, "check_hs_sandwich");
  require_real_spectrum(b, "check_hs_sandwich");
  require_square_same(x, a.dim(), "check_hs_sandwich");
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  const CMatrix fa = apply_spectral(f, a), gb = apply_spectral(g, b);
  const CMatrix absa = abs_from_decomp(a), absb = abs_from_decomp(b);
  const CMatrix eye = CMatrix::identity(a.dim());
  const double s = sign_factor(sign);

  const CMatrix lhs_mat = fa * x * gb + Complex(s, 0.0) * (gb * x * fa);
  const CMatrix rhs_mat =
      (1.0 / (da * db)) * ((eye + absa) * x * (eye + absb) + (eye + absb) * x * (eye + absa));
  return hs_report("hs_fxg_gxf", lhs_mat, rhs_mat, sign, da, db, tol);
}

IneqReport check_hs_triple_identity(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                    const HerglotzFunction& f, const HerglotzFunction& g, Sign sign,
                                    const Tolerance& tol) {
  IneqReport r = check_hs_triple(a, b, CMatrix::identity(a.dim()), f, g, sign, tol);
  r.name = "hs_f_g_fg";
  return r;
}

IneqReport check_hs_sandwich_identity(const SpectralDecomposition& a,
                                      const SpectralDecomposition& b, const HerglotzFunction& f,
                                      const HerglotzFunction& g, Sign sign, const Tolerance& tol) {
  IneqReport r = check_hs_sandwich(a, b, CMatrix::identity(a.dim()), f, g, sign, tol);
  r.name = "hs_fg_gf";
  return r;
}

IneqReport check_sv_geomean(const CMatrix& a, const CMatrix& b, const CMatrix& x, const CMatrix& y,
                            Sign sign, const Tolerance& tol) {
  const int n = a.rows();
  require_square_same(a, n, "check_sv_geomean");
  require_square_same(b, n, "check_sv_geomean");
  require_square_same(x, n, "check_sv_geomean");
  require_square_same(y, n, "check_sv_geomean");
  const double na = operator_norm(a), nb = operator_norm(b);
  const double scale = 2.0 * std::sqrt(na * nb);
  const auto sl = singular_values(a * x + sign_factor(sign) * (y * b));
  const auto sr = singular_values(direct_sum(x, y));

  bool all_hold = true;
  double min_slack = std::numeric_limits<double>::infinity();
  double wl = 0.0, wr = 0.0;
  for (size_t j = 0; j < sl.size(); ++j) {
    const double lhs = sl[j];
    const double rhs = scale * sr[j];
    all_hold = all_hold && tol.holds(lhs, rhs);
    if (rhs - lhs < min_slack) {
      min_slack = rhs - lhs;
      wl = lhs;
      wr = rhs;
    }
  }
  IneqReport r = IneqReport::make("sv_ax_yb", std::nullopt, wl, wr, tol);
  r.holds = all_hold;
  r.params = {{"sign", to_string(sign)}, {"norm_a", na}, {"norm_b", nb}};
  return r;
}

std::vector<IneqReport> check_norm_geomean_grid(const CMatrix& a, const CMatrix& b,
                                                const CMatrix& x, const CMatrix& y, Sign sign,
                                                KindSpan kinds, const Tolerance& tol) {
  const int n = a.rows();
  require_square_same(a, n, "check_norm_geomean");
  require_square_same(b, n, "check_norm_geomean");
  require_square_same(x, n, "check_norm_geomean");
  require_square_same(y, n, "check_norm_geomean");
  const double na = operator_norm(a), nb = operator_norm(b);
  const double scale = 2.0 * std::sqrt(na * nb);
  const CMatrix lhs_mat = pad_to(a * x + sign_factor(sign) * (y * b), 2 * n);
  const CMatrix rhs_mat = direct_sum(x, y);
  nlohmann::json params{{"sign", to_string(sign)}, {"norm_a", na}, {"norm_b", nb}};
  return eval_pair("norm_ax_yb", lhs_mat, rhs_mat, scale, kinds, tol, params);
}

IneqReport check_norm_geomean(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                              const CMatrix& y, Sign sign, const NormKind& kind,
                              const Tolerance& tol) {
  return check_norm_geomean_grid(a, b, x, y, sign, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_block_cross_grid(const SpectralDecomposition& a,
                                               const SpectralDecomposition& b, const CMatrix& x,
                                               const CMatrix& y, const HerglotzFunction& f,
                                               const HerglotzFunction& g, Sign sign, BlockForm form,
                                               KindSpan kinds, const Tolerance& tol) {
  require_in_disk(a, "check_block_cross");
  require_in_disk(b, "check_block_cross");
  const int n = a.dim();
  require_square_same(x, n, "check_block_cross");
  require_square_same(y, n, "check_block_cross");
  if (b.dim() != n) throw std::invalid_argument("check_block_cross: operand size mismatch");
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  const CMatrix fa = apply_spectral(f, a), ga = apply_spectral(g, a);
  const CMatrix fb = apply_spectral(f, b), gb = apply_spectral(g, b);
  const double s = sign_factor(sign);

  CMatrix lhs_core;
  double coeff;
  if (form == BlockForm::difference) {
    lhs_core = (fa - gb) * x + Complex(s, 0.0) * (y * (fb - ga));
    coeff = operator_norm(abs_from_decomp(a) + abs_from_decomp(b));
  } else {
    lhs_core = (fa + gb) * x + Complex(s, 0.0) * (y * (fb + ga));
    coeff = operator_norm(CMatrix::identity(n) + abs_matrix(a.reconstruct() * b.reconstruct()));
  }
  const double scale = 4.0 * kSqrt2 / (da * db) * coeff;
  nlohmann::json params = base_params(da, db);
  params["sign"] = to_string(sign);
  params["form"] = to_string(form);
  return eval_pair(form == BlockForm::difference ? "block_fdiff" : "block_fsum",
                   pad_to(lhs_core, 2 * n), direct_sum(x, y), scale, kinds, tol, params);
}

IneqReport check_block_cross(const SpectralDecomposition& a, const SpectralDecomposition& b,
                             const CMatrix& x, const CMatrix& y, const HerglotzFunction& f,
                             const HerglotzFunction& g, Sign sign, BlockForm form,
                             const NormKind& kind, const Tolerance& tol) {
  return check_block_cross_grid(a, b, x, y, f, g, sign, form, KindSpan(&kind, 1), tol).front();
}

namespace {

std::vector<IneqReport> fx_xfbar_impl(const char* who, const std::string& name_sum,
                                      const std::string& name_diff,
                                      const SpectralDecomposition& a,
                                      const SpectralDecomposition& b, const CMatrix& x,
                                      const HerglotzFunction& f, Sign sign, bool mirrored,
                                      double da, double db, KindSpan kinds, const Tolerance& tol,
                                      nlohmann::json params) {
  require_in_disk(a, who);
  require_in_disk(b, who);
  require_square_same(x, a.dim(), who);
  if (b.dim() != a.dim()) throw std::invalid_argument(std::string(who) + ": size mismatch");
  const CMatrix am = a.reconstruct(), bm = b.reconstruct();
  // left factor carries the conjugate when mirrored
  const CMatrix left = apply_spectral(f, a, mirrored);
  const CMatrix right = apply_spectral(f, b, !mirrored);

  CMatrix lhs_mat, rhs_mat;
  double scale;
  if (sign == Sign::plus) {
    lhs_mat = left * x + x * right;
    rhs_mat = mirrored ? (x - am.adjoint() * x * bm) : (x - am * x * bm.adjoint());
    scale = 2.0 / (da * db);
  } else {
    lhs_mat = left * x - x * right;
    rhs_mat = mirrored ? (abs_matrix(am.adjoint() * x) + abs_matrix(x * bm))
                       : (abs_matrix(am * x) + abs_matrix(x * bm.adjoint()));
    scale = 2.0 * kSqrt2 / (da * db);
  }
  params["sign"] = to_string(sign);
  return eval_pair(sign == Sign::plus ? name_sum : name_diff, lhs_mat, rhs_mat, scale, kinds, tol,
                   std::move(params));
}

}  // namespace

std::vector<IneqReport> check_fx_xfbar_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, Sign sign, KindSpan kinds,
                                            const Tolerance& tol) {
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  return fx_xfbar_impl("check_fx_xfbar", "fx_xfbar_sum", "fx_xfbar_diff", a, b, x, f, sign,
                       /*mirrored=*/false, da, db, kinds, tol, base_params(da, db));
}

IneqReport check_fx_xfbar(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, Sign sign,
                          const NormKind& kind, const Tolerance& tol) {
  return check_fx_xfbar_grid(a, b, x, f, sign, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_fbarx_xf_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, Sign sign, KindSpan kinds,
                                            const Tolerance& tol) {
  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  return fx_xfbar_impl("check_fbarx_xf", "fbarx_xf_sum", "fbarx_xf_diff", a, b, x, f, sign,
                       /*mirrored=*/true, da, db, kinds, tol, base_params(da, db));
}

IneqReport check_fbarx_xf(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, Sign sign,
                          const NormKind& kind, const Tolerance& tol) {
  return check_fbarx_xf_grid(a, b, x, f, sign, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_phase_bound_grid(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                               double alpha, double beta, KindSpan kinds,
                                               const Tolerance& tol) {
  const int n = a.rows();
  require_square_same(a, n, "check_phase_bound");
  require_square_same(b, n, "check_phase_bound");
  require_square_same(x, n, "check_phase_bound");
  const CMatrix ax = a * x;
  const CMatrix xbs = x * b.adjoint();
  const CMatrix lhs_mat = std::polar(1.0, -beta) * ax + std::polar(1.0, alpha) * xbs;
  const CMatrix rhs_mat = abs_matrix(ax) + abs_matrix(xbs);
  nlohmann::json params{{"alpha", alpha}, {"beta", beta}};
  return eval_pair("phase_bound", lhs_mat, rhs_mat, kSqrt2, kinds, tol, params);
}

IneqReport check_phase_bound(const CMatrix& a, const CMatrix& b, const CMatrix& x, double alpha,
                             double beta, const NormKind& kind, const Tolerance& tol) {
  return check_phase_bound_grid(a, b, x, alpha, beta, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_fx_xfbar_numrange_grid(const SpectralDecomposition& a,
                                                     const SpectralDecomposition& b,
                                                     const CMatrix& x, const HerglotzFunction& f,
                                                     Sign sign, KindSpan kinds, int angle_count,
                                                     const Tolerance& tol) {
  const double dna = numerical_range_distance(a.reconstruct(), angle_count);
  const double dnb = numerical_range_distance(b.reconstruct(), angle_count);
  nlohmann::json params{{"D_a", dna}, {"D_b", dnb}, {"angle_count", angle_count}};
  return fx_xfbar_impl("check_fx_xfbar_numrange", "numrange_sum", "numrange_diff", a, b, x, f, sign,
                       /*mirrored=*/false, dna, dnb, kinds, tol, std::move(params));
}

IneqReport check_fx_xfbar_numrange(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                   const CMatrix& x, const HerglotzFunction& f, Sign sign,
                                   const NormKind& kind, int angle_count, const Tolerance& tol) {
  return check_fx_xfbar_numrange_grid(a, b, x, f, sign, KindSpan(&kind, 1), angle_count, tol)
      .front();
}

std::vector<IneqReport> check_f_fbar_identity_grid(const SpectralDecomposition& a,
                                                    const SpectralDecomposition& b,
                                                    const HerglotzFunction& f, FbarForm form,
                                                    KindSpan kinds, const Tolerance& tol) {
  require_in_disk(a, "check_f_fbar_identity");
  const CMatrix am = a.reconstruct();
  const CMatrix eye = CMatrix::identity(a.dim());
  const double da = dist_boundary_spectrum(a);

  if (form == FbarForm::two_matrix) {
    require_in_disk(b, "check_f_fbar_identity");
    if (b.dim() != a.dim())
      throw std::invalid_argument("check_f_fbar_identity: size mismatch");
    const double db = dist_boundary_spectrum(b);
    const CMatrix bm = b.reconstruct();
    const CMatrix lhs_mat = apply_spectral(f, a) + apply_spectral(f, b, true);
    const CMatrix rhs_mat = eye - am * bm.adjoint();
    nlohmann::json params = base_params(da, db);
    params["form"] = to_string(form);
    return eval_pair("f_plus_fbar", lhs_mat, rhs_mat, 2.0 / (da * db), kinds, tol, params);
  }
  const CMatrix lhs_mat = re_part(apply_spectral(f, a));
  const CMatrix rhs_mat = eye - am * am.adjoint();
  nlohmann::json params{{"d_a", da}, {"form", to_string(form)}};
  return eval_pair("re_f", lhs_mat, rhs_mat, 1.0 / (da * da), kinds, tol, params);
}

IneqReport check_f_fbar_identity(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                  const HerglotzFunction& f, FbarForm form, const NormKind& kind,
                                  const Tolerance& tol) {
  return check_f_fbar_identity_grid(a, b, f, form, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_pos_multiplier_grid(const CMatrix& a, const CMatrix& b,
                                                  const CMatrix& x, double m,
                                                  PosMultVariant variant, KindSpan kinds,
                                                  const Tolerance& tol) {
  require_hermitian_matrix(a, "check_pos_multiplier");
  require_hermitian_matrix(b, "check_pos_multiplier");
  require_hermitian_matrix(x, "check_pos_multiplier");
  if (a.rows() != b.rows() || a.rows() != x.rows())
    throw std::invalid_argument("check_pos_multiplier: size mismatch");
  if (!(m > 0.0)) throw std::invalid_argument("check_pos_multiplier: m must be positive");
  const double xmin = hermitian_eigenvalues(x).back();
  if (xmin < m - 1e-9 * (1.0 + std::abs(m)))
    throw std::invalid_argument("check_pos_multiplier: X does not dominate mI");

  const CMatrix rhs_mat =
      variant == PosMultVariant::stated_plus ? (a * x + x * b) : (a * x - x * b);
  nlohmann::json params{{"m", m}, {"variant", to_string(variant)}, {"lambda_min_x", xmin}};
  return eval_pair(variant == PosMultVariant::stated_plus ? "posmult_plus" : "posmult_minus",
                   m * (a - b), rhs_mat, 1.0, kinds, tol, params);
}

IneqReport check_pos_multiplier(const CMatrix& a, const CMatrix& b, const CMatrix& x, double m,
                                PosMultVariant variant, const NormKind& kind,
                                const Tolerance& tol) {
  return check_pos_multiplier_grid(a, b, x, m, variant, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_re_difference_grid(const SpectralDecomposition& a,
                                                 const SpectralDecomposition& b, const CMatrix& x,
                                                 double m, const HerglotzFunction& f,
                                                 RediffVariant variant, KindSpan kinds,
                                                 const Tolerance& tol) {
  require_in_disk(a, "check_re_difference");
  require_in_disk(b, "check_re_difference");
  require_square_same(x, a.dim(), "check_re_difference");
  if (b.dim() != a.dim()) throw std::invalid_argument("check_re_difference: size mismatch");
  require_hermitian_matrix(x, "check_re_difference");
  if (!(m > 0.0)) throw std::invalid_argument("check_re_difference: m must be positive");
  const double xmin = hermitian_eigenvalues(x).back();
  if (xmin < m - 1e-9 * (1.0 + std::abs(m)))
    throw std::invalid_argument("check_re_difference: X does not dominate mI");

  const double da = dist_boundary_spectrum(a), db = dist_boundary_spectrum(b);
  const CMatrix am = a.reconstruct(), bm = b.reconstruct();
  const CMatrix lhs_mat =
      Complex(m, 0.0) * (re_part(apply_spectral(f, a)) - re_part(apply_spectral(f, b)));
  nlohmann::json params = base_params(da, db);
  params["m"] = m;
  params["variant"] = to_string(variant);

  // both sides are evaluated per kind; the stated form has two RHS terms,
  // so the generic single-pair path does not apply
  const auto sl = singular_values(lhs_mat);
  const auto sr1 = singular_values(x - am * x * bm.adjoint());
  std::vector<double> sr2;
  if (variant == RediffVariant::stated) sr2 = singular_values(x - am.adjoint() * x * bm);

  std::vector<IneqReport> out;
  out.reserve(kinds.size());
  for (const NormKind& kind : kinds) {
    const double lhs = norm_from_singular_values(sl, kind);
    double rhs;
    if (variant == RediffVariant::stated)
      rhs = (norm_from_singular_values(sr1, kind) + norm_from_singular_values(sr2, kind)) /
            (da * db);
    else
      rhs = 2.0 * norm_from_singular_values(sr1, kind) / (da * db);
    IneqReport r = IneqReport::make(
        variant == RediffVariant::stated ? "rediff" : "rediff_nearunitary", kind, lhs, rhs, tol);
    r.params = params;
    out.push_back(std::move(r));
  }
  return out;
}

IneqReport check_re_difference(const SpectralDecomposition& a, const SpectralDecomposition& b,
                               const CMatrix& x, double m, const HerglotzFunction& f,
                               RediffVariant variant, const NormKind& kind, const Tolerance& tol) {
  return check_re_difference_grid(a, b, x, m, f, variant, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_block_f_fbar_grid(const SpectralDecomposition& a,
                                                const SpectralDecomposition& b, const CMatrix& x,
                                                const CMatrix& y, const HerglotzFunction& f,
                                                RemarkForm form, KindSpan kinds,
                                                const Tolerance& tol) {
  require_in_disk(a, "check_block_f_fbar");
  const int n = a.dim();
  require_square_same(x, n, "check_block_f_fbar");
  require_square_same(y, n, "check_block_f_fbar");
  const CMatrix am = a.reconstruct();
  const CMatrix eye = CMatrix::identity(n);
  const double da = dist_boundary_spectrum(a);

  CMatrix lhs_core;
  double scale;
  nlohmann::json params;
  if (form == RemarkForm::general) {
    require_in_disk(b, "check_block_f_fbar");
    if (b.dim() != n) throw std::invalid_argument("check_block_f_fbar: size mismatch");
    const double db = dist_boundary_spectrum(b);
    const CMatrix bm = b.reconstruct();
    lhs_core = (apply_spectral(f, a) + apply_spectral(f, b, true)) * x -
               y * (apply_spectral(f, b) + apply_spectral(f, a, true));
    scale = 4.0 / (da * db) * operator_norm(eye - am * bm.adjoint());
    params = base_params(da, db);
  } else {
    const CMatrix ref = re_part(apply_spectral(f, a));
    lhs_core = ref * x - y * ref;
    scale = 2.0 / (da * da) * operator_norm(eye - am * am.adjoint());
    params = {{"d_a", da}};
  }
  params["form"] = to_string(form);
  return eval_pair(form == RemarkForm::general ? "block_f_fbar" : "block_re", pad_to(lhs_core, 2 * n),
                   direct_sum(x, y), scale, kinds, tol, params);
}

IneqReport check_block_f_fbar(const SpectralDecomposition& a, const SpectralDecomposition& b,
                              const CMatrix& x, const CMatrix& y, const HerglotzFunction& f,
                              RemarkForm form, const NormKind& kind, const Tolerance& tol) {
  return check_block_f_fbar_grid(a, b, x, y, f, form, KindSpan(&kind, 1), tol).front();
}

std::vector<IneqReport> check_submultiplicative_grid(const CMatrix& a, const CMatrix& b,
                                                     const CMatrix& x, KindSpan kinds,
                                                     const Tolerance& tol) {
  if (a.cols() != x.rows() || x.cols() != b.rows())
    throw std::invalid_argument("check_submultiplicative: shapes not composable");
  const double scale = operator_norm(a) * operator_norm(b);
  return eval_pair("submult", a * x * b, x, scale, kinds, tol, nlohmann::json::object());
}

}  // namespace gnormlab

#ifndef GNORMLAB_INEQ_HPP
#define GNORMLAB_INEQ_HPP

#include "gnormlab/herglotz.hpp"
#include "gnormlab/norms.hpp"

namespace gnormlab {

// One checker per inequality: each evaluates its left and right side
// exactly as stated and returns a slack report. Hypotheses are verified
// and violations throw std::invalid_argument. Sides built from f(A)
// always go through apply_spectral; d_A, d_B come from the ground-truth
// decomposition spectra.

enum class Sign { plus, minus };
const char* to_string(Sign s);

// The four bounds with constant 2*sqrt(2)/(d_A d_B) for normal A, B with
// spectra in the unit disk:
//   fx_minus_xg : |||f(A)X - Xg(B)|||  <= c ||| |AX| + |XB| |||
//   fx_plus_xg  : |||f(A)X + Xg(B)|||  <= c ||| |AXB| + |X| |||
//   fxg_minus_x : |||f(A)Xg(B) - X|||  <= c ||| |AX| + |XB| |||
//   fxg_plus_x  : |||f(A)Xg(B) + X|||  <= c ||| |AXB| + |X| |||
enum class MixedForm { fx_minus_xg, fx_plus_xg, fxg_minus_x, fxg_plus_x };
const char* to_string(MixedForm f);

IneqReport check_fg_mixed(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                          MixedForm form, const NormKind& kind, const Tolerance& tol = {});

// Hilbert-Schmidt bound for Hermitian A, B with spectra in the disk:
// ||f(A)X + Xg(B) +- f(A)Xg(B)||_2
//   <= ||(X+|A|X)/d_A + (X+X|B|)/d_B + (I+|A|)X(I+|B|)/(d_A d_B)||_2
IneqReport check_hs_triple(const SpectralDecomposition& a, const SpectralDecomposition& b,
                           const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                           Sign sign, const Tolerance& tol = {});

// ||f(A)Xg(B) +- g(B)Xf(A)||_2
//   <= ||((I+|A|)X(I+|B|) + (I+|B|)X(I+|A|))/(d_A d_B)||_2
IneqReport check_hs_sandwich(const SpectralDecomposition& a, const SpectralDecomposition& b,
                             const CMatrix& x, const HerglotzFunction& f, const HerglotzFunction& g,
                             Sign sign, const Tolerance& tol = {});

// X = I specializations of the two bounds above.
IneqReport check_hs_triple_identity(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                    const HerglotzFunction& f, const HerglotzFunction& g,
                                    Sign sign, const Tolerance& tol = {});
IneqReport check_hs_sandwich_identity(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                      const HerglotzFunction& f, const HerglotzFunction& g,
                                      Sign sign, const Tolerance& tol = {});

// s_j(AX +- YB) <= 2 sqrt(||A|| ||B||) s_j(X + Y) for every j.
// Slack is the minimum over j. The printed constant is provable when
// ||A|| = ||B|| (it then equals the additive bound); for strongly
// imbalanced operator norms it can genuinely fail and the report says so.
IneqReport check_sv_geomean(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                            const CMatrix& y, Sign sign, const Tolerance& tol = {});

// |||(AX +- YB) + 0||| <= 2 sqrt(||A|| ||B||) |||X + Y|||
IneqReport check_norm_geomean(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                              const CMatrix& y, Sign sign, const NormKind& kind,
                              const Tolerance& tol = {});

// |||((f(A)-g(B))X +- Y(f(B)-g(A))) + 0|||
//   <= (4 sqrt(2)/(d_A d_B)) || |A|+|B| || |||X + Y|||   (difference)
// |||((f(A)+g(B))X +- Y(f(B)+g(A))) + 0|||
//   <= (4 sqrt(2)/(d_A d_B)) || I+|AB| || |||X + Y|||    (sum)
enum class BlockForm { difference, sum };
const char* to_string(BlockForm f);

IneqReport check_block_cross(const SpectralDecomposition& a, const SpectralDecomposition& b,
                             const CMatrix& x, const CMatrix& y, const HerglotzFunction& f,
                             const HerglotzFunction& g, Sign sign, BlockForm form,
                             const NormKind& kind, const Tolerance& tol = {});

// |||f(A)X + X conj_f(B)||| <= (2/(d_A d_B)) |||X - AXB*|||        (plus)
// |||f(A)X - X conj_f(B)||| <= (2 sqrt2/(d_A d_B)) ||| |AX|+|XB*| |||  (minus)
IneqReport check_fx_xfbar(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, Sign sign,
                          const NormKind& kind, const Tolerance& tol = {});

// Mirror with the conjugate on the left:
// |||conj_f(A)X + Xf(B)||| <= (2/(d_A d_B)) |||X - A*XB|||
// |||conj_f(A)X - Xf(B)||| <= (2 sqrt2/(d_A d_B)) ||| |A*X|+|XB| |||
IneqReport check_fbarx_xf(const SpectralDecomposition& a, const SpectralDecomposition& b,
                          const CMatrix& x, const HerglotzFunction& f, Sign sign,
                          const NormKind& kind, const Tolerance& tol = {});

// |||e^{-i beta} A X + e^{i alpha} X B*||| <= sqrt(2) ||| |AX| + |XB*| |||
// for arbitrary matrices and phases.
IneqReport check_phase_bound(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                             double alpha, double beta, const NormKind& kind,
                             const Tolerance& tol = {});

// check_fx_xfbar with the boundary distances of the numerical-range
// closures replacing the spectral ones (harder constants).
IneqReport check_fx_xfbar_numrange(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                   const CMatrix& x, const HerglotzFunction& f, Sign sign,
                                   const NormKind& kind, int angle_count = 720,
                                   const Tolerance& tol = {});

// X = I specializations:
//   two_matrix : |||f(A) + conj_f(B)||| <= (2/(d_A d_B)) |||I - AB*|||
//   re_part    : |||Re f(A)||| <= (1/d_A^2) |||I - AA*|||
enum class FbarForm { two_matrix, re_part };
const char* to_string(FbarForm f);

IneqReport check_f_fbar_identity(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                  const HerglotzFunction& f, FbarForm form, const NormKind& kind,
                                  const Tolerance& tol = {});

// m|||A - B||| <= |||AX + XB||| (stated) or <= |||AX - XB||| (proof form)
// for self-adjoint A, B and X >= mI > 0. The stated form fails on
// adversarial instances (e.g. A=1, B=-1, X=m=1 gives slack -2); it is
// evaluated in recording mode, never asserted.
enum class PosMultVariant { stated_plus, proof_minus };
const char* to_string(PosMultVariant v);

IneqReport check_pos_multiplier(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                double m, PosMultVariant variant, const NormKind& kind,
                                const Tolerance& tol = {});

// m|||Re f(A) - Re f(B)||| <=
//   (1/(d_A d_B)) (|||X - AXB*||| + |||X - A*XB|||)        (stated)
//   (2/(d_A d_B)) |||X - AXB*|||                           (unitary case)
// The unitary case is exercised with near-unitary normal matrices
// (|lambda_j| = 1 - delta); exact unitaries would make d_A = 0.
enum class RediffVariant { stated, near_unitary };
const char* to_string(RediffVariant v);

IneqReport check_re_difference(const SpectralDecomposition& a, const SpectralDecomposition& b,
                               const CMatrix& x, double m, const HerglotzFunction& f,
                               RediffVariant variant, const NormKind& kind,
                               const Tolerance& tol = {});

// |||((f(A)+conj_f(B))X - Y(f(B)+conj_f(A))) + 0|||
//   <= (4/(d_A d_B)) ||I - AB*|| |||X + Y|||               (general)
// and the B = A specialization
// |||(Re f(A) X - Y Re f(A)) + 0||| <= (2/d_A^2) ||I - AA*|| |||X + Y|||
enum class RemarkForm { general, re_special };
const char* to_string(RemarkForm f);

IneqReport check_block_f_fbar(const SpectralDecomposition& a, const SpectralDecomposition& b,
                              const CMatrix& x, const CMatrix& y, const HerglotzFunction& f,
                              RemarkForm form, const NormKind& kind, const Tolerance& tol = {});

// Grid variants: each evaluates the instance once (one SVD per side) and
// reads every requested norm kind off the same singular values. The
// single-kind checkers above are thin wrappers over these.
using KindSpan = std::span<const NormKind>;

std::vector<IneqReport> check_fg_mixed_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, const HerglotzFunction& g,
                                            MixedForm form, KindSpan kinds, const Tolerance& tol = {});
std::vector<IneqReport> check_norm_geomean_grid(const CMatrix& a, const CMatrix& b,
                                                const CMatrix& x, const CMatrix& y, Sign sign,
                                                KindSpan kinds, const Tolerance& tol = {});
std::vector<IneqReport> check_block_cross_grid(const SpectralDecomposition& a,
                                               const SpectralDecomposition& b, const CMatrix& x,
                                               const CMatrix& y, const HerglotzFunction& f,
                                               const HerglotzFunction& g, Sign sign, BlockForm form,
                                               KindSpan kinds, const Tolerance& tol = {});
std::vector<IneqReport> check_fx_xfbar_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, Sign sign, KindSpan kinds,
                                            const Tolerance& tol = {});
std::vector<IneqReport> check_fbarx_xf_grid(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b, const CMatrix& x,
                                            const HerglotzFunction& f, Sign sign, KindSpan kinds,
                                            const Tolerance& tol = {});
std::vector<IneqReport> check_phase_bound_grid(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                               double alpha, double beta, KindSpan kinds,
                                               const Tolerance& tol = {});
std::vector<IneqReport> check_fx_xfbar_numrange_grid(const SpectralDecomposition& a,
                                                     const SpectralDecomposition& b,
                                                     const CMatrix& x, const HerglotzFunction& f,
                                                     Sign sign, KindSpan kinds, int angle_count = 720,
                                                     const Tolerance& tol = {});
std::vector<IneqReport> check_f_fbar_identity_grid(const SpectralDecomposition& a,
                                                    const SpectralDecomposition& b,
                                                    const HerglotzFunction& f, FbarForm form,
                                                    KindSpan kinds, const Tolerance& tol = {});
std::vector<IneqReport> check_pos_multiplier_grid(const CMatrix& a, const CMatrix& b,
                                                  const CMatrix& x, double m, PosMultVariant variant,
                                                  KindSpan kinds, const Tolerance& tol = {});
std::vector<IneqReport> check_re_difference_grid(const SpectralDecomposition& a,
                                                 const SpectralDecomposition& b, const CMatrix& x,
                                                 double m, const HerglotzFunction& f,
                                                 RediffVariant variant, KindSpan kinds,
                                                 const Tolerance& tol = {});
std::vector<IneqReport> check_block_f_fbar_grid(const SpectralDecomposition& a,
                                                const SpectralDecomposition& b, const CMatrix& x,
                                                const CMatrix& y, const HerglotzFunction& f,
                                                RemarkForm form, KindSpan kinds,
                                                const Tolerance& tol = {});
std::vector<IneqReport> check_submultiplicative_grid(const CMatrix& a, const CMatrix& b,
                                                     const CMatrix& x, KindSpan kinds,
                                                     const Tolerance& tol = {});

}  // namespace gnormlab

#endif

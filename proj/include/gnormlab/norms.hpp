#ifndef GNORMLAB_NORMS_HPP
#define GNORMLAB_NORMS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnormlab/matcore.hpp"
#include "gnormlab/report.hpp"

namespace gnormlab {

// Singular-value norm from a precomputed non-increasing value list.
double norm_from_singular_values(std::span<const double> s, const NormKind& kind);

// Unitarily invariant norm of A for the given kind (via SVD).
double uinorm(const CMatrix& a, const NormKind& kind);

// Entrywise Hilbert-Schmidt norm; independent of the SVD path.
double hs_norm_direct(const CMatrix& a);

// The finite audit surrogate for "all unitarily invariant norms":
// operator, HS, Schatten p in {1, 1.5, 2, 3, 5}, Ky Fan k in {1..dim}.
// Ky Fan dominance makes this grid decisive for the inequalities here.
std::vector<NormKind> audit_grid(int dim);

// |||AXB||| <= ||A|| ||B|| |||X|||
IneqReport check_submultiplicative(const CMatrix& a, const CMatrix& b, const CMatrix& x,
                                   const NormKind& kind, const Tolerance& tol = {});

// ||A + B|| identities for direct sums:
//   ||A + B|| = max(||A||, ||B||)        (operator)
//   ||A + B||_2 = sqrt(||A||_2^2 + ||B||_2^2)
//   |||[[0,A],[B,0]]||| = |||A + B|||    across the audit grid
// The report carries the maximum relative defect as lhs (rhs = 0).
IneqReport check_direct_sum_identities(const CMatrix& a, const CMatrix& b,
                                       const Tolerance& tol = {});

// If kyfan_k(X) <= kyfan_k(Y) for every k, then schatten_p(X) <=
// schatten_p(Y) for p in {1, 1.5, 2, 3, 5} and the operator norm.
// When the premise fails the report records that and asserts nothing.
IneqReport kyfan_dominance_check(const CMatrix& x, const CMatrix& y,
                                 const Tolerance& tol = {});

}  // namespace gnormlab

#endif

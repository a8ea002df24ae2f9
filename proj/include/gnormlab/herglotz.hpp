#ifndef GNORMLAB_HERGLOTZ_HPP
#define GNORMLAB_HERGLOTZ_HPP

#include <cstdint>
#include <vector>

#include "gnormlab/spectral.hpp"

namespace gnormlab {

// Finitely atomic Herglotz transform
//   f(z) = sum_m w_m (e^{i a_m} + z) / (e^{i a_m} - z),
// with w_m > 0 and sum w_m = 1. Every such f is analytic on the unit
// disk with Re f > 0 and f(0) = 1.
struct HerglotzFunction {
  std::vector<double> atoms;    // angles in radians
  std::vector<double> weights;  // positive, sum to 1 (within 1e-12)

  static HerglotzFunction single_atom(double alpha);
  static HerglotzFunction from(std::vector<double> atoms, std::vector<double> weights);

  void validate() const;  // throws std::invalid_argument
};

// f(z) for |z| < 1.
Complex herglotz_eval(const HerglotzFunction& f, Complex z);

// conj(f(z)): the scalar trace of the conjugate function
//   sum_m w_m (e^{-i a_m} + conj z) / (e^{-i a_m} - conj z).
Complex conj_eval(const HerglotzFunction& f, Complex z);

// f(A) = U diag(f(lambda_j)) U* for normal A given by its decomposition;
// with conjugate set, U diag(conj f(lambda_j)) U* = (f(A))*.
// Requires the whole spectrum inside the unit disk.
CMatrix apply_spectral(const HerglotzFunction& f, const SpectralDecomposition& decomp,
                       bool conjugate = false);

// Trapezoidal nodes on the circle |z| = radius.
struct ContourSpec {
  double radius = 0.5;
  int nodes = 256;
};

// radius midway between the spectral radius and 1, 256 nodes.
ContourSpec default_contour(const SpectralDecomposition& decomp);

// (1/2 pi i) * contour integral of f(z) (zI - A)^{-1} dz, discretized by
// the trapezoid rule (exponentially convergent on circles). Independent
// of apply_spectral; serves as its oracle.
CMatrix apply_contour(const HerglotzFunction& f, const CMatrix& a, const ContourSpec& spec);

// 1 - max_j |lambda_j|; requires the spectrum inside the unit disk.
double dist_boundary_spectrum(const SpectralDecomposition& decomp);

// 1 - w(A) where the numerical radius w(A) is the max over an angle grid
// of lambda_max(Re(e^{i theta} A)). Error O(angle_count^{-2}) by
// convexity of the numerical range. Throws if w(A) >= 1.
double numerical_range_distance(const CMatrix& a, int angle_count = 720);

// Uniform atoms, exponential weights normalized to mass one.
HerglotzFunction random_herglotz(int atom_count, std::uint64_t seed);

class Rng;
HerglotzFunction random_herglotz(int atom_count, Rng& rng);

}  // namespace gnormlab

#endif

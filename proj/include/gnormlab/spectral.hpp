#ifndef GNORMLAB_SPECTRAL_HPP
#define GNORMLAB_SPECTRAL_HPP

#include <span>
#include <vector>

#include "gnormlab/matcore.hpp"

namespace gnormlab {

// A = U diag(eigenvalues) U* with U unitary.
struct SpectralDecomposition {
  CMatrix u;
  std::vector<Complex> eigenvalues;

  int dim() const { return int(eigenvalues.size()); }
  CMatrix reconstruct() const;
  double spectral_radius() const;
};

// A = U diag(singular_values) V*, values sorted non-increasing.
struct SVDResult {
  CMatrix u;
  std::vector<double> singular_values;
  CMatrix v;

  CMatrix reconstruct(int rows, int cols) const;
};

// Cyclic Jacobi for complex Hermitian matrices. Eigenvalues are returned
// non-increasing; ties keep the rotation output order (stable sort).
// Throws on non-Hermitian input or if 30 sweeps do not converge.
SpectralDecomposition eig_hermitian(const CMatrix& a);

// One-sided Jacobi SVD (works on columns; transposed internally when
// rows < cols). Valid for any finite matrix.
SVDResult svd(const CMatrix& a);

// Singular values only, non-increasing.
std::vector<double> singular_values(const CMatrix& a);

// Eigenvalues only (non-increasing) of a Hermitian matrix; skips the
// basis accumulation of eig_hermitian.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

// |A| = (A*A)^{1/2}, computed as V diag(s) V* from the SVD.
CMatrix abs_matrix(const CMatrix& a);

// max over samples of | 1/s_min(zI - A) - 1/dist(z, sigma(A)) |.
// Zero (up to roundoff) certifies resolvent-growth behaviour at the
// sampled points; every sample must stay >= 1e-3 away from the spectrum.
double resolvent_defect(const CMatrix& a, const SpectralDecomposition& decomp,
                        std::span<const Complex> z_samples);

struct DiskSample {
  CMatrix matrix;
  SpectralDecomposition decomposition;
};

// U diag(lambda) U* with Haar U; hermitian kind draws lambda real uniform
// in (-r, r), normal kind complex uniform in the disk of radius r. The
// decomposition is returned so the spectrum is known exactly.
DiskSample random_in_disk(const RandomSpec& spec);

class Rng;
DiskSample random_in_disk(int dim, double radius, bool hermitian, Rng& rng);

}  // namespace gnormlab

#endif

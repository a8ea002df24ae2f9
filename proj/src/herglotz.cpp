#include "gnormlab/herglotz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gnormlab/rng.hpp"

namespace gnormlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

}  // namespace

HerglotzFunction HerglotzFunction::single_atom(double alpha) {
  return from({wrap_angle(alpha)}, {1.0});
}

HerglotzFunction HerglotzFunction::from(std::vector<double> atoms, std::vector<double> weights) {
  HerglotzFunction f{std::move(atoms), std::move(weights)};
  f.validate();
  return f;
}

void HerglotzFunction::validate() const {
  if (atoms.empty() || atoms.size() != weights.size())
    throw std::invalid_argument("HerglotzFunction: atoms/weights must be non-empty, equal length");
  double mass = 0.0;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i])) throw std::invalid_argument("HerglotzFunction: bad atom");
    if (!(weights[i] > 0.0)) throw std::invalid_argument("HerglotzFunction: weights must be > 0");
    mass += weights[i];
  }
  if (std::abs(mass - 1.0) > 1e-12)
    throw std::invalid_argument("HerglotzFunction: weights must sum to 1");
}

Complex herglotz_eval(const HerglotzFunction& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("herglotz_eval: |z| must be < 1");
  Complex sum(0.0, 0.0);
  for (size_t m = 0; m < f.atoms.size(); ++m) {
    const Complex e = std::polar(1.0, f.atoms[m]);
    sum += f.weights[m] * (e + z) / (e - z);
  }
  return sum;
}

Complex conj_eval(const HerglotzFunction& f, Complex z) {
  return std::conj(herglotz_eval(f, z));
}

CMatrix apply_spectral(const HerglotzFunction& f, const SpectralDecomposition& decomp,
                       bool conjugate) {
  std::vector<Complex> vals(decomp.eigenvalues.size());
  for (size_t j = 0; j < vals.size(); ++j) {
    if (!(std::abs(decomp.eigenvalues[j]) < 1.0))
      throw std::domain_error("apply_spectral: spectrum not inside the unit disk");
    vals[j] = conjugate ? conj_eval(f, decomp.eigenvalues[j])
                        : herglotz_eval(f, decomp.eigenvalues[j]);
  }
  return decomp.u * CMatrix::diag(std::span<const Complex>(vals)) * decomp.u.adjoint();
}

ContourSpec default_contour(const SpectralDecomposition& decomp) {
  return ContourSpec{(decomp.spectral_radius() + 1.0) / 2.0, 256};
}

namespace {

// Solve (zI - A) X = I by Gaussian elimination with partial pivoting.
CMatrix resolvent(Complex z, const CMatrix& a) {
  const int n = a.rows();
  CMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = (i == j ? z : Complex(0.0, 0.0)) - a(i, j);
    m(i, n + i) = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > best) {
        best = std::abs(m(r, col));
        piv = r;
      }
    if (best < 1e-14)
      throw std::runtime_error("apply_contour: node too close to an eigenvalue");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(m(col, j), m(piv, j));
    const Complex d = m(col, col);
    for (int j = col; j < 2 * n; ++j) m(col, j) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = m(r, col);
      if (factor == Complex(0.0, 0.0)) continue;
      for (int j = col; j < 2 * n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  CMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

}  // namespace

CMatrix apply_contour(const HerglotzFunction& f, const CMatrix& a, const ContourSpec& spec) {
  if (!a.square()) throw std::invalid_argument("apply_contour: matrix must be square");
  if (!(spec.radius > 0.0 && spec.radius < 1.0))
    throw std::invalid_argument("apply_contour: radius must lie in (0,1)");
  if (spec.nodes < 4) throw std::invalid_argument("apply_contour: too few nodes");
  const int n = a.rows();
  // (1/2 pi i) integral over |z| = R of f(z) (zI - A)^{-1} dz
  //   ~ (1/N) sum_k f(z_k) z_k (z_k I - A)^{-1},  z_k = R e^{2 pi i k / N}
  CMatrix acc(n, n);
  for (int k = 0; k < spec.nodes; ++k) {
    const double theta = kTwoPi * double(k) / double(spec.nodes);
    const Complex z = std::polar(spec.radius, theta);
    const Complex w = herglotz_eval(f, z) * z;
    acc = acc + w * resolvent(z, a);
  }
  return (1.0 / double(spec.nodes)) * acc;
}

double dist_boundary_spectrum(const SpectralDecomposition& decomp) {
  const double rho = decomp.spectral_radius();
  if (!(rho < 1.0))
    throw std::domain_error("dist_boundary_spectrum: eigenvalue on or outside the unit circle");
  return 1.0 - rho;
}

double numerical_range_distance(const CMatrix& a, int angle_count) {
  if (!a.square()) throw std::invalid_argument("numerical_range_distance: matrix must be square");
  if (angle_count < 4) throw std::invalid_argument("numerical_range_distance: grid too coarse");
  const int n = a.rows();
  double w = -std::numeric_limits<double>::infinity();
  const CMatrix adj = a.adjoint();
  // Re(e^{i(theta+pi)} A) = -Re(e^{i theta} A), so an even grid needs only
  // half the eigensolves: lambda_max at theta and -lambda_min for theta+pi.
  const bool paired = angle_count % 2 == 0;
  const int sweeps = paired ? angle_count / 2 : angle_count;
  for (int i = 0; i < sweeps; ++i) {
    const double theta = kTwoPi * double(i) / double(angle_count);
    const Complex e = std::polar(1.0, theta);
    CMatrix h(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (e * a(r, c) + std::conj(e) * adj(r, c));
    const auto eigs = hermitian_eigenvalues(h);
    w = std::max(w, eigs.front());
    if (paired) w = std::max(w, -eigs.back());
  }
  if (!(w < 1.0))
    throw std::domain_error("numerical_range_distance: numerical range reaches the unit circle");
  return 1.0 - w;
}

HerglotzFunction random_herglotz(int atom_count, Rng& rng) {
  if (atom_count < 1) throw std::invalid_argument("random_herglotz: atom_count must be >= 1");
  std::vector<double> atoms(atom_count), weights(atom_count);
  double mass = 0.0;
  for (int m = 0; m < atom_count; ++m) {
    atoms[m] = rng.uniform(0.0, kTwoPi);
    double u = rng.uniform();
    if (u < 1e-300) u = 1e-300;
    weights[m] = -std::log(u);
    mass += weights[m];
  }
  for (double& w : weights) w /= mass;
  // renormalize exactly against accumulated roundoff
  double s = 0.0;
  for (size_t i = 0; i + 1 < weights.size(); ++i) s += weights[i];
  weights.back() = 1.0 - s;
  return HerglotzFunction::from(std::move(atoms), std::move(weights));
}

HerglotzFunction random_herglotz(int atom_count, std::uint64_t seed) {
  Rng rng(seed);
  return random_herglotz(atom_count, rng);
}

}  // namespace gnormlab

#include "gnormlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "gnormlab/rng.hpp"

namespace gnormlab {

namespace {

constexpr int kMaxSweeps = 30;

bool nearly_hermitian(const CMatrix& a, double tol) {
  if (!a.square()) return false;
  double off = 0.0, all = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      all += std::norm(a(i, j));
      off += std::norm(a(i, j) - std::conj(a(j, i)));
    }
  return std::sqrt(off) <= tol * (1.0 + std::sqrt(all));
}

// Rotation zeroing the off-diagonal of [[alpha, gamma], [conj(gamma), beta]]
// (alpha, beta real). Returns c (real) and s with the unitary
// R = [[c, s], [-conj(s), c]]; R* M R is diagonal.
void jacobi_rotation(double alpha, double beta, Complex gamma, double& c, Complex& s) {
  const double ag = std::abs(gamma);
  const Complex phase = gamma / ag;
  const double tau = (alpha - beta) / (2.0 * ag);
  // zero cross term: (alpha-beta) t + |gamma| (1 - t^2) = 0, i.e.
  // t^2 - 2 tau t - 1 = 0; take the root of smaller magnitude
  double t;
  if (tau >= 0.0)
    t = -1.0 / (tau + std::sqrt(tau * tau + 1.0));
  else
    t = 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = (t * c) * phase;
}

double offdiag_mass(const CMatrix& h) {
  double sum = 0.0;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (i != j) sum += std::norm(h(i, j));
  return std::sqrt(sum);
}

// Cyclic Jacobi core; accumulates the basis into *u when non-null.
std::vector<double> jacobi_eigen(CMatrix h, CMatrix* u) {
  const int n = h.rows();
  if (u) *u = CMatrix::identity(n);
  // force an exactly Hermitian working copy
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = m;
      h(j, i) = std::conj(m);
    }
    h(i, i) = Complex(h(i, i).real(), 0.0);
  }

  const double initial_off = offdiag_mass(h);
  double fro = frobenius(h);
  const double target = std::max(1e-14 * initial_off, 1e-15 * fro);
  if (initial_off > 0.0) {
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const Complex gamma = h(p, q);
          const double ag = std::abs(gamma);
          if (ag <= 1e-300) continue;
          const double app = h(p, p).real();
          const double aqq = h(q, q).real();
          if (ag <= 1e-16 * (std::abs(app) + std::abs(aqq))) continue;
          double c;
          Complex s;
          jacobi_rotation(app, aqq, gamma, c, s);
          const Complex sc = std::conj(s);
          // columns: H <- H R
          for (int k = 0; k < n; ++k) {
            const Complex hp = h(k, p), hq = h(k, q);
            h(k, p) = c * hp - sc * hq;
            h(k, q) = s * hp + c * hq;
          }
          // rows: H <- R* H
          for (int k = 0; k < n; ++k) {
            const Complex hp = h(p, k), hq = h(q, k);
            h(p, k) = c * hp - s * hq;
            h(q, k) = sc * hp + c * hq;
          }
          h(p, q) = Complex(0.0, 0.0);
          h(q, p) = Complex(0.0, 0.0);
          h(p, p) = Complex(h(p, p).real(), 0.0);
          h(q, q) = Complex(h(q, q).real(), 0.0);
          if (u) {
            for (int k = 0; k < n; ++k) {
              const Complex up = (*u)(k, p), uq = (*u)(k, q);
              (*u)(k, p) = c * up - sc * uq;
              (*u)(k, q) = s * up + c * uq;
            }
          }
        }
      }
      if (offdiag_mass(h) <= target) break;
    }
    if (sweep == kMaxSweeps)
      throw std::runtime_error("eig_hermitian: no convergence after 30 sweeps");
  }

  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = h(i, i).real();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return eigs[i] > eigs[j]; });
  std::vector<double> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = eigs[order[i]];
  if (u) {
    CMatrix pu(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) pu(k, j) = (*u)(k, order[j]);
    *u = std::move(pu);
  }
  return sorted;
}

// One-sided Jacobi on the columns of w (rows >= cols); accumulates the
// right factor into *v when non-null. Returns unsorted column norms.
std::vector<double> jacobi_onesided(CMatrix& w, CMatrix* v) {
  const int m = w.rows(), n = w.cols();
  if (v) *v = CMatrix::identity(n);
  std::vector<double> colsq(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 0; k < m; ++k) sum += std::norm(w(k, j));
    colsq[j] = sum;
  }
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double app = colsq[p], aqq = colsq[q];
        if (app == 0.0 || aqq == 0.0) continue;
        Complex apq(0.0, 0.0);
        for (int k = 0; k < m; ++k) apq += std::conj(w(k, p)) * w(k, q);
        const double ag = std::abs(apq);
        if (ag <= 1e-15 * std::sqrt(app * aqq)) continue;
        rotated = true;
        double c;
        Complex s;
        jacobi_rotation(app, aqq, apq, c, s);
        const Complex sc = std::conj(s);
        for (int k = 0; k < m; ++k) {
          const Complex wp = w(k, p), wq = w(k, q);
          w(k, p) = c * wp - sc * wq;
          w(k, q) = s * wp + c * wq;
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            const Complex vp = (*v)(k, p), vq = (*v)(k, q);
            (*v)(k, p) = c * vp - sc * vq;
            (*v)(k, q) = s * vp + c * vq;
          }
        }
        double sp = 0.0, sq = 0.0;
        for (int k = 0; k < m; ++k) {
          sp += std::norm(w(k, p));
          sq += std::norm(w(k, q));
        }
        colsq[p] = sp;
        colsq[q] = sq;
      }
    }
    if (!rotated) break;
  }
  if (sweep == kMaxSweeps) throw std::runtime_error("svd: no convergence after 30 sweeps");
  std::vector<double> norms(n);
  for (int j = 0; j < n; ++j) norms[j] = std::sqrt(colsq[j]);
  return norms;
}

// Extend the accepted orthonormal columns of u (count `have`) to a full
// basis using canonical vectors (deterministic).
void complete_basis(CMatrix& u, int have) {
  const int m = u.rows();
  int next = have;
  for (int cand = 0; cand < m && next < m; ++cand) {
    std::vector<Complex> vec(m, Complex(0.0, 0.0));
    vec[cand] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < next; ++i) {
        Complex proj(0.0, 0.0);
        for (int k = 0; k < m; ++k) proj += std::conj(u(k, i)) * vec[k];
        for (int k = 0; k < m; ++k) vec[k] -= proj * u(k, i);
      }
    }
    double nrm = 0.0;
    for (int k = 0; k < m; ++k) nrm += std::norm(vec[k]);
    nrm = std::sqrt(nrm);
    if (nrm < 0.25) continue;
    for (int k = 0; k < m; ++k) u(k, next) = vec[k] / nrm;
    ++next;
  }
  if (next != m) throw std::runtime_error("svd: basis completion failed");
}

}  // namespace

CMatrix SpectralDecomposition::reconstruct() const {
  return u * CMatrix::diag(std::span<const Complex>(eigenvalues)) * u.adjoint();
}

double SpectralDecomposition::spectral_radius() const {
  double r = 0.0;
  for (const Complex& z : eigenvalues) r = std::max(r, std::abs(z));
  return r;
}

CMatrix SVDResult::reconstruct(int rows, int cols) const {
  CMatrix sigma(rows, cols);
  for (size_t j = 0; j < singular_values.size(); ++j) sigma(int(j), int(j)) = singular_values[j];
  return u * sigma * v.adjoint();
}

SpectralDecomposition eig_hermitian(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("eig_hermitian: matrix must be square");
  if (!nearly_hermitian(a, 1e-8)) throw std::invalid_argument("eig_hermitian: input not Hermitian");
  CMatrix u;
  const auto eigs = jacobi_eigen(a, &u);
  SpectralDecomposition out;
  out.u = std::move(u);
  out.eigenvalues.assign(eigs.begin(), eigs.end());
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if (!nearly_hermitian(a, 1e-8))
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  return jacobi_eigen(a, nullptr);
}

SVDResult svd(const CMatrix& a) {
  if (a.rows() < a.cols()) {
    SVDResult t = svd(a.adjoint());
    return SVDResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
  }
  const int m = a.rows(), n = a.cols();
  CMatrix w = a;
  CMatrix v;
  std::vector<double> norms = jacobi_onesided(w, &v);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });

  SVDResult out;
  out.singular_values.resize(n);
  out.v = CMatrix(n, n);
  out.u = CMatrix(m, m);
  const double smax = n ? norms[order.empty() ? 0 : order[0]] : 0.0;
  int rank = 0;
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.singular_values[j] = norms[src];
    for (int k = 0; k < n; ++k) out.v(k, j) = v(k, src);
    if (norms[src] > smax * 1e-13 && norms[src] > 0.0) {
      for (int k = 0; k < m; ++k) out.u(k, j) = w(k, src) / norms[src];
      ++rank;
    }
  }
  complete_basis(out.u, rank);
  return out;
}

std::vector<double> singular_values(const CMatrix& a) {
  if (a.empty()) return {};
  if (a.rows() < a.cols()) return singular_values(a.adjoint());
  CMatrix w = a;
  std::vector<double> norms = jacobi_onesided(w, nullptr);
  std::stable_sort(norms.begin(), norms.end(), std::greater<double>());
  return norms;
}

CMatrix abs_matrix(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("abs_matrix: matrix must be square");
  if (a.empty()) return a;
  SVDResult f = svd(a);
  CMatrix s = CMatrix::diag(std::span<const double>(f.singular_values));
  return f.v * s * f.v.adjoint();
}

double resolvent_defect(const CMatrix& a, const SpectralDecomposition& decomp,
                        std::span<const Complex> z_samples) {
  if (!a.square()) throw std::invalid_argument("resolvent_defect: matrix must be square");
  const int n = a.rows();
  double worst = 0.0;
  for (const Complex& z : z_samples) {
    double dist = std::numeric_limits<double>::infinity();
    for (const Complex& lam : decomp.eigenvalues) dist = std::min(dist, std::abs(z - lam));
    if (!(dist >= 1e-3))
      throw std::invalid_argument("resolvent_defect: sample too close to the spectrum");
    CMatrix shifted = z * CMatrix::identity(n) - a;
    const auto s = singular_values(shifted);
    const double smin = s.back();
    if (smin <= 0.0) throw std::invalid_argument("resolvent_defect: singular shift");
    worst = std::max(worst, std::abs(1.0 / smin - 1.0 / dist));
  }
  return worst;
}

DiskSample random_in_disk(int dim, double radius, bool hermitian, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_in_disk: dim must be positive");
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("random_in_disk: radius must lie in (0,1)");
  CMatrix u = haar_unitary(dim, rng);
  std::vector<Complex> lambda(dim);
  if (hermitian) {
    for (int i = 0; i < dim; ++i) lambda[i] = Complex(rng.uniform(-radius, radius), 0.0);
  } else {
    for (int i = 0; i < dim; ++i) {
      const double r = radius * std::sqrt(rng.uniform());
      const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
      lambda[i] = Complex(r * std::cos(t), r * std::sin(t));
    }
  }
  SpectralDecomposition d;
  d.u = std::move(u);
  d.eigenvalues = std::move(lambda);
  return DiskSample{d.reconstruct(), std::move(d)};
}

DiskSample random_in_disk(const RandomSpec& spec) {
  spec.validate();
  if (spec.kind != RandomKind::hermitian_in_disk && spec.kind != RandomKind::normal_in_disk)
    throw std::invalid_argument("random_in_disk: kind must be hermitian-in-disk or normal-in-disk");
  Rng rng(spec.seed);
  return random_in_disk(spec.dim, spec.spectrum_radius,
                        spec.kind == RandomKind::hermitian_in_disk, rng);
}

}  // namespace gnormlab

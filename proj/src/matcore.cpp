#include "gnormlab/matcore.hpp"

#include <cmath>
#include <stdexcept>

#include "gnormlab/rng.hpp"
#include "gnormlab/spectral.hpp"

namespace gnormlab {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative dimension");
  entries_.assign(size_t(rows) * size_t(cols), Complex(0.0, 0.0));
}

CMatrix::CMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative dimension");
  if (entries_.size() != size_t(rows) * size_t(cols))
    throw std::invalid_argument("CMatrix: entry count does not match rows*cols");
  check_finite();
}

void CMatrix::check_finite() const {
  for (const Complex& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diag(std::span<const Complex> values) {
  CMatrix m(int(values.size()), int(values.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = values[i];
  m.check_finite();
  return m;
}

CMatrix CMatrix::diag(std::initializer_list<Complex> values) {
  return diag(std::span<const Complex>(values.begin(), values.size()));
}

CMatrix CMatrix::diag(std::span<const double> values) {
  CMatrix m(int(values.size()), int(values.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = values[i];
  m.check_finite();
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

bool same_shape(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols();
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (!same_shape(a, b)) throw std::invalid_argument("matrix sum: shape mismatch");
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (!same_shape(a, b)) throw std::invalid_argument("matrix difference: shape mismatch");
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  CMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }

CMatrix operator-(const CMatrix& a) { return Complex(-1.0, 0.0) * a; }

double frobenius(const CMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  CMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

CMatrix block_offdiag(const CMatrix& a, const CMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("block_offdiag: operands must be square and equal size");
  const int n = a.rows();
  CMatrix out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, n + j) = a(i, j);
      out(n + i, j) = b(i, j);
    }
  return out;
}

CMatrix pad_to(const CMatrix& m, int total) {
  if (total < m.rows() || total < m.cols()) throw std::invalid_argument("pad_to: target too small");
  CMatrix out(total, total);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

void RandomSpec::validate() const {
  if (dim < 1) throw std::invalid_argument("RandomSpec: dim must be positive");
  const bool in_disk =
      kind == RandomKind::hermitian_in_disk || kind == RandomKind::normal_in_disk;
  if (in_disk && !(spectrum_radius > 0.0 && spectrum_radius < 1.0))
    throw std::invalid_argument("RandomSpec: spectrum_radius must lie in (0,1)");
}

CMatrix haar_unitary(const RandomSpec& spec) {
  spec.validate();
  if (spec.kind != RandomKind::unitary)
    throw std::invalid_argument("haar_unitary: spec.kind must be unitary");
  Rng rng(spec.seed);
  return haar_unitary(spec.dim, rng);
}

MatrixClass classify(const CMatrix& a, double tol) {
  if (!a.square()) throw std::invalid_argument("classify: matrix must be square");
  MatrixClass out;
  const double fro = frobenius(a);
  const CMatrix adj = a.adjoint();
  out.hermitian = frobenius(a - adj) <= tol * (1.0 + fro);
  out.normal = frobenius(adj * a - a * adj) <= tol * (1.0 + fro * fro);
  out.unitary = frobenius(adj * a - CMatrix::identity(a.rows())) <= tol * a.rows();
  const auto s = singular_values(a);
  out.contraction = (s.empty() ? 0.0 : s.front()) <= 1.0 + tol;
  return out;
}

}  // namespace gnormlab

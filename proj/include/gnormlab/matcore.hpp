#ifndef GNORMLAB_MATCORE_HPP
#define GNORMLAB_MATCORE_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gnormlab {

using Complex = std::complex<double>;

// Dense complex matrix, row-major, value semantics. Entries are validated
// to be finite on construction; all operations return new matrices.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);  // zero-filled
  CMatrix(int rows, int cols, std::vector<Complex> entries);

  static CMatrix identity(int n);
  static CMatrix diag(std::span<const Complex> values);
  static CMatrix diag(std::initializer_list<Complex> values);
  static CMatrix diag(std::span<const double> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  const Complex& operator()(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
  Complex& operator()(int i, int j) { return entries_[size_t(i) * cols_ + j]; }

  std::span<const Complex> entries() const { return entries_; }

  CMatrix adjoint() const;

  // Throws std::invalid_argument if any entry is NaN/Inf.
  void check_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);
CMatrix operator-(const CMatrix& a);

bool same_shape(const CMatrix& a, const CMatrix& b);

// Entrywise root-sum-of-squares.
double frobenius(const CMatrix& a);

// diag(A, B); either operand may be empty (0x0), in which case the other
// is returned unchanged.
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

// [[0, A], [B, 0]] for square A, B of equal size.
CMatrix block_offdiag(const CMatrix& a, const CMatrix& b);

// M padded with zero rows/cols up to total x total.
CMatrix pad_to(const CMatrix& m, int total);

enum class RandomKind { hermitian_in_disk, normal_in_disk, unitary, general_bounded };

struct RandomSpec {
  int dim = 2;
  std::uint64_t seed = 0;
  double spectrum_radius = 0.9;  // must be < 1 for the in-disk kinds
  RandomKind kind = RandomKind::normal_in_disk;

  void validate() const;
};

// Haar-distributed unitary: Gaussian matrix orthonormalized column by
// column (positive-diagonal QR), deterministic in spec.seed.
CMatrix haar_unitary(const RandomSpec& spec);

struct MatrixClass {
  bool hermitian = false;
  bool normal = false;
  bool unitary = false;
  bool contraction = false;
};

// Structural flags at the given tolerance; requires square input.
MatrixClass classify(const CMatrix& a, double tol);

}  // namespace gnormlab

#endif

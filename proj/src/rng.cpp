#include "gnormlab/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gnormlab {

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
  // span is tiny here; modulo bias is < 2^-50 and irrelevant for tests
  return lo + int(bits() % span);
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u clamped away from 0 so log stays finite
  double u = uniform();
  if (u < 1e-300) u = 1e-300;
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double t = 2.0 * std::numbers::pi * v;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::sqrt(2.0);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t a,
                          std::uint64_t b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t state = seed ^ h;
  splitmix64(state);
  state ^= a;
  splitmix64(state);
  state ^= b;
  return splitmix64(state);
}

CMatrix gaussian_matrix(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

CMatrix orthonormalize_columns(CMatrix g) {
  const int n = g.rows();
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Complex proj(0.0, 0.0);
        for (int k = 0; k < n; ++k) proj += std::conj(g(k, i)) * g(k, j);
        for (int k = 0; k < n; ++k) g(k, j) -= proj * g(k, i);
      }
    }
    double nrm = 0.0;
    for (int k = 0; k < n; ++k) nrm += std::norm(g(k, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-150) throw std::runtime_error("orthonormalize_columns: degenerate column");
    for (int k = 0; k < n; ++k) g(k, j) /= nrm;
  }
  return g;
}

CMatrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be positive");
  return orthonormalize_columns(gaussian_matrix(dim, rng));
}

}  // namespace gnormlab

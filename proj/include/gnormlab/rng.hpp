#ifndef GNORMLAB_RNG_HPP
#define GNORMLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "gnormlab/matcore.hpp"

namespace gnormlab {

// Deterministic stream: mt19937_64 with hand-rolled conversions so the
// byte-for-byte output does not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // [0, 1)
  double uniform() { return double(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi);  // inclusive bounds

  double gaussian();

  Complex complex_gaussian();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream seed for (master seed, tag, a, b); used to give every suite
// trial an independent, scheduling-invariant stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t a, std::uint64_t b);

// n x n complex standard Gaussian.
CMatrix gaussian_matrix(int n, Rng& rng);

// Column-wise Gram-Schmidt with a re-orthogonalization pass; for
// Gaussian input the result is Haar-distributed.
CMatrix orthonormalize_columns(CMatrix g);

// Haar unitary drawn from an existing stream.
CMatrix haar_unitary(int dim, Rng& rng);

}  // namespace gnormlab

#endif

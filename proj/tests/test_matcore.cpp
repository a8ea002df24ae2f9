#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "gnormlab/json_io.hpp"
#include "gnormlab/rng.hpp"
#include "gnormlab/spectral.hpp"

using namespace gnormlab;

namespace {

bool same_entries(const CMatrix& a, const CMatrix& b) {
  if (!same_shape(a, b)) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Independent singular-value oracle: sqrt of the Gram matrix spectrum.
std::vector<double> gram_singular_values(const CMatrix& a) {
  const auto eigs = hermitian_eigenvalues(a.adjoint() * a);
  std::vector<double> s;
  for (double e : eigs) s.push_back(std::sqrt(std::max(0.0, e)));
  return s;
}

}  // namespace

TEST_CASE("CMatrix validates shape and finiteness") {
  CHECK_THROWS_AS(CMatrix(2, 2, {Complex(1, 0), Complex(0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(1, 1, {Complex(std::numeric_limits<double>::quiet_NaN(), 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(1, 1, {Complex(0, std::numeric_limits<double>::infinity())}),
                  std::invalid_argument);
  const CMatrix eye = CMatrix::identity(3);
  CHECK(eye(0, 0) == Complex(1, 0));
  CHECK(eye(0, 1) == Complex(0, 0));
}

TEST_CASE("direct_sum places blocks") {
  const CMatrix a = CMatrix::diag({Complex(3, 0)});
  const CMatrix b = CMatrix::diag({Complex(4, 0)});
  const CMatrix ab = direct_sum(a, b);
  CHECK(ab.rows() == 2);
  CHECK(ab(0, 0) == Complex(3, 0));
  CHECK(ab(1, 1) == Complex(4, 0));
  CHECK(ab(0, 1) == Complex(0, 0));
}

TEST_CASE("direct_sum with an empty operand is the identity case") {
  const CMatrix a(2, 3, {Complex(1, 2), Complex(0, 0), Complex(3, 0), Complex(0, 1), Complex(5, 5),
                         Complex(-1, 0)});
  CHECK(same_entries(direct_sum(a, CMatrix()), a));
  CHECK(same_entries(direct_sum(CMatrix(), a), a));
}

TEST_CASE("singular values of a nilpotent block plus diag(2) merge to (2,1,0)") {
  const CMatrix n(2, 2, {Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)});
  const CMatrix ds = direct_sum(n, CMatrix::diag({Complex(2, 0)}));
  const auto s = singular_values(ds);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s[2]) <= 1e-12);
  // brute-force oracle: sqrt of Gram eigenvalues
  const auto g = gram_singular_values(ds);
  for (size_t j = 0; j < s.size(); ++j) CHECK(std::abs(s[j] - g[j]) <= 1e-10);
}

TEST_CASE("direct_sum is associative entry for entry") {
  Rng rng(17);
  const CMatrix a = gaussian_matrix(2, rng);
  const CMatrix b = gaussian_matrix(3, rng);
  const CMatrix c = gaussian_matrix(2, rng);
  CHECK(same_entries(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
}

TEST_CASE("block_offdiag basics") {
  const CMatrix a = CMatrix::diag({Complex(1, 0)});
  const CMatrix b = CMatrix::diag({Complex(2, 0)});
  const CMatrix m = block_offdiag(a, b);
  CHECK(m(0, 1) == Complex(1, 0));
  CHECK(m(1, 0) == Complex(2, 0));
  CHECK(m(0, 0) == Complex(0, 0));
  CHECK(m(1, 1) == Complex(0, 0));

  const CMatrix z(2, 2);
  CHECK(frobenius(block_offdiag(z, z)) == 0.0);

  CHECK_THROWS_AS(block_offdiag(CMatrix(2, 2), CMatrix(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(block_offdiag(CMatrix(2, 3), CMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("block_offdiag and direct_sum share singular values") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    Rng rng(seed);
    const CMatrix a = gaussian_matrix(3, rng);
    const CMatrix b = gaussian_matrix(3, rng);
    const auto s_off = singular_values(block_offdiag(a, b));
    const auto s_ds = singular_values(direct_sum(a, b));
    REQUIRE(s_off.size() == s_ds.size());
    for (size_t j = 0; j < s_off.size(); ++j) CHECK(std::abs(s_off[j] - s_ds[j]) <= 1e-10);
  }
}

TEST_CASE("haar_unitary is unitary and deterministic") {
  RandomSpec spec;
  spec.kind = RandomKind::unitary;

  spec.dim = 1;
  spec.seed = 5;
  const CMatrix u1 = haar_unitary(spec);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) <= 1e-14);

  spec.dim = 4;
  spec.seed = 99;
  const CMatrix u = haar_unitary(spec);
  CHECK(frobenius(u.adjoint() * u - CMatrix::identity(4)) <= 1e-12);
  CHECK(same_entries(u, haar_unitary(spec)));

  spec.kind = RandomKind::normal_in_disk;
  CHECK_THROWS_AS(haar_unitary(spec), std::invalid_argument);
}

TEST_CASE("random_in_disk construction guarantees") {
  RandomSpec spec;
  spec.dim = 1;
  spec.seed = 7;
  spec.kind = RandomKind::hermitian_in_disk;
  const auto scalar = random_in_disk(spec);
  CHECK(std::abs(scalar.matrix(0, 0).imag()) <= 1e-15);
  CHECK(std::abs(scalar.matrix(0, 0).real()) < 0.9);

  spec.dim = 5;
  spec.seed = 1234;
  for (RandomKind kind : {RandomKind::hermitian_in_disk, RandomKind::normal_in_disk}) {
    spec.kind = kind;
    const auto sample = random_in_disk(spec);
    CHECK(frobenius(sample.matrix - sample.decomposition.reconstruct()) <= 1e-13);
    CHECK(sample.decomposition.spectral_radius() < 0.9);
    const MatrixClass cls = classify(sample.matrix, 1e-10);
    CHECK(cls.normal);
    if (kind == RandomKind::hermitian_in_disk) CHECK(cls.hermitian);
    // determinism down to the last bit
    CHECK(same_entries(sample.matrix, random_in_disk(spec).matrix));
  }

  spec.kind = RandomKind::unitary;
  CHECK_THROWS_AS(random_in_disk(spec), std::invalid_argument);
  spec.kind = RandomKind::normal_in_disk;
  spec.spectrum_radius = 1.0;
  CHECK_THROWS_AS(random_in_disk(spec), std::invalid_argument);
}

TEST_CASE("classify flags") {
  const CMatrix d = CMatrix::diag({Complex(0.5, 0), Complex(-0.3, 0)});
  MatrixClass c = classify(d, 1e-10);
  CHECK(c.hermitian);
  CHECK(c.normal);
  CHECK(c.contraction);
  CHECK_FALSE(c.unitary);

  const CMatrix n(2, 2, {Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)});
  c = classify(n, 1e-10);
  CHECK_FALSE(c.hermitian);
  CHECK_FALSE(c.normal);
  CHECK(c.contraction);

  RandomSpec spec;
  spec.dim = 4;
  spec.seed = 3;
  spec.kind = RandomKind::unitary;
  c = classify(haar_unitary(spec), 1e-10);
  CHECK(c.unitary);
  CHECK(c.normal);
  CHECK(c.contraction);

  CHECK_THROWS_AS(classify(CMatrix(2, 3), 1e-10), std::invalid_argument);
}

TEST_CASE("matrix json round-trips doubles bit for bit") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + rng.uniform_int(0, 3);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = Complex(rng.gaussian() * std::pow(10.0, rng.uniform_int(-8, 8)),
                          rng.gaussian() * std::pow(10.0, rng.uniform_int(-8, 8)));
    const std::string text = matrix_to_json(a).dump();
    const CMatrix back = matrix_from_json(nlohmann::json::parse(text));
    REQUIRE(same_shape(a, back));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(std::memcmp(&a(i, j), &back(i, j), sizeof(Complex)) == 0);
      }
  }
  CHECK_THROWS(matrix_from_json(nlohmann::json{{"rows", 2}, {"cols", 2}, {"entries", {1, 2}}}));
}

TEST_CASE("herglotz json round-trip") {
  const HerglotzFunction f = random_herglotz(4, std::uint64_t(99));
  const HerglotzFunction back = herglotz_from_json(herglotz_to_json(f));
  CHECK(back.atoms == f.atoms);
  CHECK(back.weights == f.weights);
}

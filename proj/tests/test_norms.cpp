#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gnormlab/norms.hpp"
#include "gnormlab/rng.hpp"
#include "gnormlab/spectral.hpp"

using namespace gnormlab;

namespace {

CMatrix random_square(int n, std::uint64_t seed) {
  Rng rng(seed);
  return gaussian_matrix(n, rng);
}

}  // namespace

TEST_CASE("uinorm fixed values on diag(3,4)") {
  const CMatrix d = CMatrix::diag({Complex(3, 0), Complex(4, 0)});
  CHECK(uinorm(d, NormKind::operator_norm()) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(uinorm(d, NormKind::kyfan(2)) == doctest::Approx(7.0).epsilon(1e-13));
  CHECK(uinorm(d, NormKind::schatten(2)) == doctest::Approx(5.0).epsilon(1e-13));
}

TEST_CASE("every norm kind vanishes on the zero matrix") {
  const CMatrix z(3, 3);
  for (const NormKind& kind : audit_grid(3)) CHECK(uinorm(z, kind) == 0.0);
}

TEST_CASE("schatten-1 of the all-ones 2x2 is 2") {
  const CMatrix ones(2, 2, {Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0)});
  // Gram eigenvalues are (4, 0), so the singular values are (2, 0)
  CHECK(uinorm(ones, NormKind::schatten(1)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hs_norm_direct agrees with the schatten-2 route") {
  const CMatrix ones(2, 2, {Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0)});
  CHECK(hs_norm_direct(ones) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(hs_norm_direct(CMatrix::diag({Complex(3, 0), Complex(4, 0)})) ==
        doctest::Approx(5.0).epsilon(1e-14));

  const CMatrix a = random_square(6, 60);
  const double direct = hs_norm_direct(a);
  const double via_svd = uinorm(a, NormKind::schatten(2));
  CHECK(std::abs(direct - via_svd) <= 1e-10 * direct);
}

TEST_CASE("norm kind validation") {
  CHECK_THROWS_AS(NormKind::schatten(0.5), std::invalid_argument);
  CHECK_THROWS_AS(NormKind::kyfan(0), std::invalid_argument);
  CHECK(NormKind::schatten(1.5).label() == "schatten-1.5");
  CHECK(NormKind::kyfan(3).label() == "kyfan-3");
}

TEST_CASE("kyfan clamps beyond the dimension") {
  const CMatrix d = CMatrix::diag({Complex(3, 0), Complex(4, 0)});
  CHECK(uinorm(d, NormKind::kyfan(5)) == doctest::Approx(7.0).epsilon(1e-13));
}

TEST_CASE("norm kind consistency identities") {
  const CMatrix a = random_square(5, 123);
  const double op = uinorm(a, NormKind::operator_norm());
  CHECK(uinorm(a, NormKind::kyfan(1)) == doctest::Approx(op).epsilon(1e-13));
  CHECK(std::abs(uinorm(a, NormKind::schatten(64)) - op) <= 1e-6 * op);
  CHECK(std::abs(uinorm(a, NormKind::hilbert_schmidt()) - uinorm(a, NormKind::schatten(2))) <=
        1e-12 * uinorm(a, NormKind::hilbert_schmidt()));
}

TEST_CASE("unitary invariance across the audit grid") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + rng.uniform_int(0, 4);
    const CMatrix x = gaussian_matrix(n, rng);
    const CMatrix u = haar_unitary(n, rng);
    const CMatrix v = haar_unitary(n, rng);
    const CMatrix moved = u * x * v;
    for (const NormKind& kind : audit_grid(n)) {
      const double base = uinorm(x, kind);
      CHECK(std::abs(uinorm(moved, kind) - base) <= 1e-9 * base);
    }
  }
}

TEST_CASE("|||X||| equals ||| |X| ||| for every kind") {
  const CMatrix x = random_square(4, 17);
  const CMatrix ax = abs_matrix(x);
  for (const NormKind& kind : audit_grid(4)) {
    const double base = uinorm(x, kind);
    CHECK(std::abs(uinorm(ax, kind) - base) <= 1e-9 * (1.0 + base));
  }
}

TEST_CASE("check_submultiplicative") {
  const CMatrix eye = CMatrix::identity(3);
  const CMatrix x = random_square(3, 5);
  const IneqReport eq = check_submultiplicative(eye, eye, x, NormKind::schatten(3));
  CHECK(eq.holds);
  CHECK(std::abs(eq.slack) <= 1e-12 * (1.0 + eq.rhs));

  const CMatrix z(3, 3);
  const IneqReport zz = check_submultiplicative(z, z, z, NormKind::operator_norm());
  CHECK(zz.holds);
  CHECK(zz.lhs == 0.0);
  CHECK(zz.rhs == 0.0);

  Rng rng(44);
  const IneqReport r = check_submultiplicative(gaussian_matrix(4, rng), gaussian_matrix(4, rng),
                                               gaussian_matrix(4, rng), NormKind::schatten(3));
  CHECK(r.holds);
  CHECK(r.slack >= 0.0);

  CHECK_THROWS_AS(check_submultiplicative(CMatrix(2, 3), CMatrix(2, 2), CMatrix(2, 2),
                                          NormKind::operator_norm()),
                  std::invalid_argument);
}

TEST_CASE("direct sum norm identities") {
  const CMatrix a = CMatrix::diag({Complex(1, 0)});
  const CMatrix b = CMatrix::diag({Complex(2, 0)});
  const CMatrix ds = direct_sum(a, b);
  CHECK(uinorm(ds, NormKind::operator_norm()) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(uinorm(ds, NormKind::hilbert_schmidt()) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
  CHECK(check_direct_sum_identities(a, b).holds);

  // B = 0 keeps the operator norm of A
  const CMatrix z(2, 2);
  const CMatrix a2 = random_square(2, 3);
  CHECK(uinorm(direct_sum(a2, z), NormKind::operator_norm()) ==
        doctest::Approx(uinorm(a2, NormKind::operator_norm())).epsilon(1e-12));
  CHECK(check_direct_sum_identities(a2, z).holds);

  const IneqReport r = check_direct_sum_identities(random_square(3, 6), random_square(3, 7));
  CHECK(r.holds);
  CHECK(r.lhs <= 1e-10);  // max relative defect
}

TEST_CASE("kyfan dominance checker") {
  const CMatrix x = random_square(3, 29);
  const CMatrix y2 = Complex(2.0, 0.0) * x;
  IneqReport r = kyfan_dominance_check(x, y2);
  CHECK(r.params["premise"] == true);
  CHECK(r.holds);

  r = kyfan_dominance_check(x, x);
  CHECK(r.params["premise"] == true);
  CHECK(r.holds);
  CHECK(std::abs(r.slack) <= 1e-12);

  // premise fails at k = 1: kyfan values (3, 3) vs (2, 4)
  const CMatrix dx = CMatrix::diag({Complex(3, 0), Complex(0, 0)});
  const CMatrix dy = CMatrix::diag({Complex(2, 0), Complex(2, 0)});
  r = kyfan_dominance_check(dx, dy);
  CHECK(r.params["premise"] == false);
  CHECK(r.holds);  // nothing asserted

  CHECK_THROWS_AS(kyfan_dominance_check(CMatrix(2, 2), CMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("kyfan dominance conclusions never fail when the premise holds") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng.uniform_int(0, 3);
    const CMatrix x = gaussian_matrix(n, rng);
    const auto sx = singular_values(x);
    std::vector<Complex> bumped(sx.size());
    for (size_t j = 0; j < sx.size(); ++j) bumped[j] = sx[j] + std::abs(rng.gaussian());
    const CMatrix y = haar_unitary(n, rng) *
                      CMatrix::diag(std::span<const Complex>(bumped)) * haar_unitary(n, rng);
    const IneqReport r = kyfan_dominance_check(x, y);
    REQUIRE(r.params["premise"] == true);
    CHECK(r.holds);
  }
}

TEST_CASE("tolerance policy") {
  const Tolerance tol;
  CHECK(tol.holds(1.0, 1.0));
  CHECK(tol.holds(1.0 + 1e-11, 1.0));
  CHECK_FALSE(tol.holds(1.0 + 1e-6, 1.0));
  const Tolerance strict{0.0, 0.0};
  CHECK_FALSE(strict.holds(1.0 + 1e-15, 1.0));
}

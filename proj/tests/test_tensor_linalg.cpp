#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "prodrange/eig.hpp"
#include "prodrange/schmidt.hpp"
#include "prodrange/tensor_ops.hpp"
#include "test_util.hpp"

using namespace prodrange;
using namespace prodrange::testing;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  ComplexMatrix a = ComplexMatrix::diag({1.0, 0.0, 0.0, kI}, {2, 2});
  CHECK_THROWS_AS(eig_hermitian(a), NotHermitian);
}

TEST_CASE("eig_hermitian identity") {
  auto e = eig_hermitian(ComplexMatrix::identity({2, 2}));
  for (double v : e.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian of diag(1,0,0,0) sorts ascending") {
  auto e = eig_hermitian(ComplexMatrix::diag({1.0, 0.0, 0.0, 0.0}, {2, 2}));
  CHECK(e.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(e.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(e.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(e.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian residual and orthonormality on seeded random input") {
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 15;
    ComplexMatrix x = random_hermitian({n}, 1000 + trial);
    auto e = eig_hermitian(x);
    double norm = x.frobenius_norm();
    for (int i = 0; i < n; ++i) {
      auto v = e.eigenvector(i);
      auto xv = x.apply(v);
      double resid = 0.0;
      for (int k = 0; k < n; ++k) resid += std::norm(xv[k] - e.eigenvalues[i] * v[k]);
      CHECK(std::sqrt(resid) <= 1e-10 * norm);
      for (int j = 0; j < n; ++j) {
        Complex ip = inner_product(e.eigenvector(j), v);
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-10);
      }
    }
    CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
  }
}

TEST_CASE("eig_hermitian matches the 2x2 characteristic roots") {
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix x = random_hermitian({2}, 2000 + trial);
    auto e = eig_hermitian(x);
    auto [lo, hi] = herm2x2_eigs(x);
    CHECK(std::abs(e.eigenvalues[0] - lo) <= 1e-12 * (1.0 + std::abs(lo)));
    CHECK(std::abs(e.eigenvalues[1] - hi) <= 1e-12 * (1.0 + std::abs(hi)));
  }
}

TEST_CASE("eig_hermitian is deterministic under degeneracy") {
  ComplexMatrix x = ComplexMatrix::diag({2.0, 2.0, 2.0, -1.0}, {4});
  auto a = eig_hermitian(x);
  auto b = eig_hermitian(x);
  CHECK(a.eigenvectors.entries() == b.eigenvectors.entries());
}

TEST_CASE("kron basics") {
  ComplexMatrix i4 = kron(ComplexMatrix::identity({2}), ComplexMatrix::identity({2}));
  CHECK(i4.dims() == std::vector<int>{2, 2});
  ComplexMatrix diff = i4 - ComplexMatrix::identity({2, 2});
  CHECK(diff.frobenius_norm() == 0.0);

  ComplexMatrix d = kron(ComplexMatrix::diag({1.0, 0.0}, {2}), ComplexMatrix::diag({1.0, 0.0}, {2}));
  ComplexMatrix expect = ComplexMatrix::diag({1.0, 0.0, 0.0, 0.0}, {2, 2});
  CHECK((d - expect).frobenius_norm() == 0.0);
}

TEST_CASE("kron of the unit-disc generators is unit upper triangular") {
  ComplexMatrix x({2}, {1.0, 2.0, 0.0, 1.0});
  ComplexMatrix y = kron(x, x);
  std::vector<Complex> expect = {1, 2, 2, 4, 0, 1, 0, 2, 0, 0, 1, 2, 0, 0, 0, 1};
  for (int i = 0; i < 16; ++i) CHECK(y.entries()[i] == expect[i]);
}

TEST_CASE("kron associativity is pure index arithmetic") {
  // integer entries multiply exactly, so associativity is bit-exact
  CounterRng rng(31, 0);
  auto small_int = [&]() { return Complex(std::floor(rng.uniform() * 7) - 3,
                                          std::floor(rng.uniform() * 7) - 3); };
  ComplexMatrix a = ComplexMatrix::zero({2}), b = ComplexMatrix::zero({3}),
                c = ComplexMatrix::zero({2});
  for (auto* m : {&a, &c})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) (*m)(i, j) = small_int();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = small_int();
  ComplexMatrix lhs = kron(kron(a, b), c);
  ComplexMatrix rhs = kron(a, kron(b, c));
  CHECK(lhs.entries() == rhs.entries());
  CHECK(lhs.dims() == rhs.dims());
}

TEST_CASE("kron_sum basics and spectrum") {
  ComplexMatrix z = kron_sum(ComplexMatrix::zero({2}), ComplexMatrix::zero({2}));
  CHECK(z.frobenius_norm() == 0.0);

  ComplexMatrix d = kron_sum(ComplexMatrix::diag({1.0, 2.0}, {2}),
                             ComplexMatrix::diag({10.0, 20.0}, {2}));
  ComplexMatrix expect = ComplexMatrix::diag({11.0, 21.0, 12.0, 22.0}, {2, 2});
  CHECK((d - expect).frobenius_norm() == 0.0);

  // oracle: eigensolve the 4x4 sum directly and compare with pair sums
  ComplexMatrix a = random_hermitian({2}, 40);
  ComplexMatrix b = random_hermitian({2}, 41);
  auto es = eig_hermitian(kron_sum(a, b));
  auto ea = eig_hermitian(a);
  auto eb = eig_hermitian(b);
  std::vector<double> sums;
  for (double va : ea.eigenvalues)
    for (double vb : eb.eigenvalues) sums.push_back(va + vb);
  std::sort(sums.begin(), sums.end());
  for (int i = 0; i < 4; ++i) CHECK(std::abs(es.eigenvalues[i] - sums[i]) <= 1e-10);
}

TEST_CASE("partial_trace basics") {
  ComplexMatrix t = partial_trace(ComplexMatrix::identity({2, 2}), 0);
  ComplexMatrix expect = ComplexMatrix::identity({2});
  expect *= 2.0;
  CHECK((t - expect).frobenius_norm() <= 1e-15);

  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity({2, 2}), 2), BadFactorIndex);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity({4}), 0), BadFactorIndex);
}

TEST_CASE("partial_trace of a product against an explicit contraction") {
  ComplexMatrix p = random_matrix({2}, 50);
  ComplexMatrix q = random_matrix({2}, 51);
  ComplexMatrix x = kron(p, q);
  ComplexMatrix t1 = partial_trace(x, 0);
  // oracle: literal 4x4 index contraction, written out
  ComplexMatrix oracle = ComplexMatrix::zero({2});
  for (int j = 0; j < 2; ++j)
    for (int jp = 0; jp < 2; ++jp) {
      Complex s = 0.0;
      for (int i = 0; i < 2; ++i) s += x(i * 2 + j, i * 2 + jp);
      oracle(j, jp) = s;
    }
  CHECK((t1 - oracle).frobenius_norm() <= 1e-14);
  ComplexMatrix scaled = q;
  scaled *= p.trace();
  CHECK((t1 - scaled).frobenius_norm() <= 1e-12);
}

TEST_CASE("partial_trace of the nonconvex example") {
  ComplexMatrix a = ComplexMatrix::diag({1.0, 0.0, 0.0, kI}, {2, 2});
  ComplexMatrix t2 = partial_trace(a, 1);
  CHECK(std::abs(t2(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(t2(1, 1) - kI) <= 1e-15);
  CHECK(std::abs(t2(0, 1)) <= 1e-15);
}

TEST_CASE("partial_trace linearity and trace preservation") {
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix x = random_matrix({2, 3}, 60, trial);
    ComplexMatrix y = random_matrix({2, 3}, 61, trial);
    Complex alpha(0.3, -1.1);
    for (int f = 0; f < 2; ++f) {
      ComplexMatrix xs = x;
      xs *= alpha;
      ComplexMatrix lin = partial_trace(xs + y, f);
      ComplexMatrix expect = partial_trace(x, f);
      expect *= alpha;
      expect += partial_trace(y, f);
      CHECK((lin - expect).frobenius_norm() <= 1e-12);
      CHECK(std::abs(partial_trace(x, f).trace() - x.trace()) <= 1e-12);
    }
  }
}

TEST_CASE("reshuffle involution and norm preservation") {
  ComplexMatrix x = random_matrix({2, 2}, 70);
  ComplexMatrix y = reshuffle(reshuffle(x));
  CHECK(x.entries() == y.entries());  // exact entry permutation
  CHECK(reshuffle(x).frobenius_norm() == doctest::Approx(x.frobenius_norm()).epsilon(1e-15));
}

TEST_CASE("reshuffled product has rank one") {
  ComplexMatrix a = random_matrix({3}, 71);
  ComplexMatrix b = random_matrix({3}, 72);
  ComplexMatrix x = kron(a, b);
  int rows = 0, cols = 0;
  auto y = reshuffle_rect(x, rows, cols);
  auto s = svd_rect(rows, cols, y);
  REQUIRE(s.sigma.size() >= 2);
  CHECK(s.sigma[1] <= 1e-12 * s.sigma[0]);
}

TEST_CASE("operator_schmidt of a pure product") {
  ComplexMatrix a = random_matrix({2}, 80);
  ComplexMatrix b = random_matrix({2}, 81);
  auto os = operator_schmidt(kron(a, b));
  REQUIRE(os.coefficients.size() == 1);
  CHECK(std::sqrt(os.coefficients[0]) ==
        doctest::Approx(a.frobenius_norm() * b.frobenius_norm()).epsilon(1e-10));
  // factors proportional to the inputs up to a joint phase
  Complex overlap = (os.left[0].adjoint() * a).trace();
  CHECK(std::abs(overlap) == doctest::Approx(a.frobenius_norm()).epsilon(1e-10));
}

TEST_CASE("operator_schmidt of the nonconvex example is already in Schmidt form") {
  ComplexMatrix a = ComplexMatrix::diag({1.0, 0.0, 0.0, kI}, {2, 2});
  auto os = operator_schmidt(a);
  REQUIRE(os.coefficients.size() == 2);
  CHECK(std::sqrt(os.coefficients[0]) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::sqrt(os.coefficients[1]) == doctest::Approx(1.0).epsilon(1e-10));
  for (int t = 0; t < 2; ++t) {
    // each factor is diag(1,0) or diag(0,1) up to phase
    CHECK(std::abs(os.left[t](0, 1)) <= 1e-10);
    CHECK(std::abs(os.left[t](1, 0)) <= 1e-10);
    double m0 = std::abs(os.left[t](0, 0)), m1 = std::abs(os.left[t](1, 1));
    CHECK(std::abs(std::max(m0, m1) - 1.0) <= 1e-10);
    CHECK(std::min(m0, m1) <= 1e-10);
  }
  CHECK((os.reconstruct({2, 2}) - a).frobenius_norm() <= 1e-10);
}

TEST_CASE("operator_schmidt of the identity") {
  auto os = operator_schmidt(ComplexMatrix::identity({2, 2}));
  REQUIRE(os.coefficients.size() == 1);
  CHECK(std::sqrt(os.coefficients[0]) == doctest::Approx(2.0).epsilon(1e-12));
  ComplexMatrix expect = ComplexMatrix::identity({2});
  expect *= 1.0 / std::sqrt(2.0);
  CHECK((os.left[0] - expect).frobenius_norm() <= 1e-10);
}

TEST_CASE("operator_schmidt reconstructs 100 seeded random operators") {
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix x = random_matrix({2, 2}, 90, trial);
    auto os = operator_schmidt(x);
    CHECK((os.reconstruct({2, 2}) - x).frobenius_norm() <= 1e-10 * x.frobenius_norm());
    CHECK(os.coefficients.size() <= 4);
    double musum = 0.0;
    for (double m : os.coefficients) musum += m;
    double hs2 = x.frobenius_norm() * x.frobenius_norm();
    CHECK(musum == doctest::Approx(hs2).epsilon(1e-10));
  }
}

TEST_CASE("operator_schmidt on rectangular factors") {
  ComplexMatrix x = random_matrix({2, 3}, 95);
  auto os = operator_schmidt(x);
  CHECK(os.coefficients.size() <= 4);  // min(K^2, M^2)
  CHECK((os.reconstruct({2, 3}) - x).frobenius_norm() <= 1e-10 * x.frobenius_norm());
}

TEST_CASE("pure_schmidt basics") {
  std::vector<Complex> e00 = {1.0, 0.0, 0.0, 0.0};
  auto s = pure_schmidt(e00, 2, 2);
  REQUIRE(s.coefficients.size() == 1);
  CHECK(s.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));

  double r = 1.0 / std::sqrt(2.0);
  std::vector<Complex> bell = {r, 0.0, 0.0, r};
  auto sb = pure_schmidt(bell, 2, 2);
  REQUIRE(sb.coefficients.size() == 2);
  CHECK(sb.coefficients[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sb.coefficients[1] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(pure_schmidt(bell, 2, 3), DimensionMismatch);
}

TEST_CASE("pure_schmidt matches the analytic 2x2 Gram oracle") {
  for (int trial = 0; trial < 25; ++trial) {
    CounterRng rng(96, trial);
    std::vector<Complex> psi = rng.unit_vector(6);
    auto s = pure_schmidt(psi, 2, 3);
    // oracle: eigenvalues of the 2x2 matrix A A^dagger in closed form
    ComplexMatrix gram = ComplexMatrix::zero({2});
    for (int i = 0; i < 2; ++i)
      for (int ip = 0; ip < 2; ++ip) {
        Complex acc = 0.0;
        for (int j = 0; j < 3; ++j) acc += psi[i * 3 + j] * std::conj(psi[ip * 3 + j]);
        gram(i, ip) = acc;
      }
    auto [lo, hi] = herm2x2_eigs(gram);
    REQUIRE(s.coefficients.size() >= 1);
    CHECK(s.coefficients[0] == doctest::Approx(hi).epsilon(1e-10));
    double second = s.coefficients.size() > 1 ? s.coefficients[1] : 0.0;
    CHECK(second == doctest::Approx(lo).epsilon(1e-8));
    // reconstruction
    auto back = s.reconstruct();
    double err = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) err += std::norm(back[k] - psi[k]);
    CHECK(std::sqrt(err) <= 1e-10);
    double total = 0.0;
    for (double m : s.coefficients) total += m;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("apply_local_unitary") {
  ComplexMatrix x = random_hermitian({2, 3}, 97);
  std::vector<ComplexMatrix> ids = {ComplexMatrix::identity({2}), ComplexMatrix::identity({3})};
  CHECK((apply_local_unitary(x, ids) - x).frobenius_norm() <= 1e-14);

  std::vector<ComplexMatrix> us = {haar_unitary(2, 98, 0), haar_unitary(3, 98, 1)};
  ComplexMatrix y = apply_local_unitary(x, us);
  auto ex = eig_hermitian(x);
  auto ey = eig_hermitian(y);
  for (int i = 0; i < x.size(); ++i)
    CHECK(std::abs(ex.eigenvalues[i] - ey.eigenvalues[i]) <= 1e-9);

  ComplexMatrix not_unitary = ComplexMatrix::diag({2.0, 1.0}, {2});
  CHECK_THROWS_AS(apply_local_unitary(x, {not_unitary, us[1]}), NotUnitary);
  CHECK_THROWS_AS(apply_local_unitary(x, {us[0]}), DimensionMismatch);
  CHECK_THROWS_AS(apply_local_unitary(x, {us[1], us[0]}), DimensionMismatch);
}

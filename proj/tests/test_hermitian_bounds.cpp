#include <doctest.h>

#include <cmath>

#include "prodrange/eig.hpp"
#include "prodrange/hermitian_bounds.hpp"
#include "prodrange/schmidt.hpp"
#include "test_util.hpp"

using namespace prodrange;
using namespace prodrange::testing;

TEST_CASE("entangled subspace of two qubits is the Bell vector") {
  auto raw = entangled_subspace_raw(2, 2);
  REQUIRE(raw.size() == 1);
  CHECK(raw[0] == std::vector<Complex>{1.0, 0.0, 0.0, 1.0});  // A^(11) pattern, bit-exact

  EntangledSubspace sub = entangled_subspace(2, 2);
  REQUIRE(sub.basis.size() == 1);
  double r = 1.0 / std::sqrt(2.0);
  Complex fid = inner_product(sub.basis[0], {r, 0.0, 0.0, r});
  CHECK(std::abs(fid) >= 1.0 - 1e-10);
}

TEST_CASE("entangled subspace of a 2x3 system") {
  auto raw = entangled_subspace_raw(2, 3);
  REQUIRE(raw.size() == 2);
  // A^(11) = E11 + E22 and A^(12) = E12 + E23 as |k,l> coefficients
  CHECK(raw[0] == std::vector<Complex>{1, 0, 0, 0, 1, 0});
  CHECK(raw[1] == std::vector<Complex>{0, 1, 0, 0, 0, 1});
  EntangledSubspace sub = entangled_subspace(2, 3);
  for (std::size_t i = 0; i < sub.basis.size(); ++i)
    for (std::size_t j = 0; j < sub.basis.size(); ++j)
      CHECK(std::abs(inner_product(sub.basis[i], sub.basis[j]) -
                     Complex(i == j ? 1.0 : 0.0)) <= 1e-12);
}

TEST_CASE("entangled subspace of a 3x3 system resists random rank-one probes") {
  EntangledSubspace sub = entangled_subspace(3, 3);
  REQUIRE(sub.basis.size() == 4);
  double min_mu2 = 1.0;
  for (int t = 0; t < 100000; ++t) {
    CounterRng rng(900, t);
    auto c = rng.unit_vector(4);
    std::vector<Complex> psi(9, 0.0);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 9; ++k) psi[k] += c[i] * sub.basis[i][k];
    double nrm = vector_norm(psi);
    for (auto& v : psi) v /= nrm;
    StateSchmidt s = pure_schmidt(psi, 3, 3);
    if (s.coefficients.size() > 1) min_mu2 = std::min(min_mu2, s.coefficients[1]);
  }
  // observed floor is ~0.05; assert a conservative slack below it
  CHECK(min_mu2 >= 0.02);
}

TEST_CASE("product state search succeeds on the whole space") {
  std::vector<std::vector<Complex>> basis;
  for (int i = 0; i < 4; ++i) {
    std::vector<Complex> e(4, 0.0);
    e[i] = 1.0;
    basis.push_back(std::move(e));
  }
  auto res = find_product_state_in_span(basis, 2, 2, 16, 1);
  CHECK(res.found);
  CHECK(res.mu2 <= 1e-10);
  CHECK(res.span_residual <= 1e-8);
}

TEST_CASE("product state search succeeds on top eigen-subspaces") {
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix x = random_hermitian({2, 2}, 910, trial);
    auto e = eig_hermitian(x);
    std::vector<std::vector<Complex>> top;
    for (int i = 1; i < 4; ++i) top.push_back(e.eigenvector(i));
    auto res = find_product_state_in_span(top, 2, 2, 64, 911 + trial);
    CHECK(res.found);
    CHECK(res.mu2 <= 1e-8);
    CHECK(res.span_residual <= 1e-8);
    res.state.check_unit(1e-10);
  }
}

TEST_CASE("product state search reports failure on the Bell span") {
  EntangledSubspace sub = entangled_subspace(2, 2);
  auto res = find_product_state_in_span(sub.basis, 2, 2, 32, 3);
  CHECK_FALSE(res.found);
  // the one-dimensional span contains only the Bell state: mu2 = 1/2 exactly
  CHECK(res.mu2 == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("bound report certifies the central segment on 2x2") {
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix x = random_hermitian({2, 2}, 920, trial);
    SpectralBoundReport rep = bound_report(x, 16, 921 + trial);
    CHECK(rep.lower_idx == 3);
    CHECK(rep.upper_idx == 2);
    CHECK(rep.bound_low == doctest::Approx(rep.spectrum[2]));
    CHECK(rep.bound_high == doctest::Approx(rep.spectrum[1]));
    // witnesses certify [lambda_2, lambda_3] inside the product range
    REQUIRE(rep.max_side.found);
    REQUIRE(rep.min_side.found);
    CHECK(rep.max_witness_value >= rep.bound_low - 1e-8);
    CHECK(rep.min_witness_value <= rep.bound_high + 1e-8);
    // see-saw respects the index bounds
    CHECK(rep.seesaw.max_value >= rep.bound_low - 1e-8);
    CHECK(rep.seesaw.min_value <= rep.bound_high + 1e-8);
  }
}

TEST_CASE("bound report on 2x3 pins the middle segment") {
  for (int trial = 0; trial < 6; ++trial) {
    ComplexMatrix x = random_hermitian({2, 3}, 930, trial);
    SpectralBoundReport rep = bound_report(x, 16, 931 + trial);
    CHECK(rep.lower_idx == 4);
    CHECK(rep.upper_idx == 3);
    CHECK(rep.seesaw.max_value >= rep.spectrum[3] - 1e-8);
    CHECK(rep.seesaw.min_value <= rep.spectrum[2] + 1e-8);
  }
}

TEST_CASE("bound report on 3x3 shows lambda_5 is attainable") {
  for (int trial = 0; trial < 4; ++trial) {
    ComplexMatrix x = random_hermitian({3, 3}, 940, trial);
    SpectralBoundReport rep = bound_report(x, 16, 941 + trial);
    CHECK(rep.lower_idx == 5);
    CHECK(rep.upper_idx == 5);
    CHECK(rep.seesaw.min_value <= rep.spectrum[4] + 1e-8);
    CHECK(rep.seesaw.max_value >= rep.spectrum[4] - 1e-8);
  }
}

TEST_CASE("optimality witness operator") {
  ComplexMatrix x = optimality_witness_operator(2, 2);
  auto e = eig_hermitian(x);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(e.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-12));
  PnrExtrema ext = pnr_hermitian_extrema(x, 24, 950);
  CHECK(ext.min_value == doctest::Approx(0.5).epsilon(1e-6));

  for (auto [k, m] : {std::pair{2, 3}, {3, 3}}) {
    ComplexMatrix w = optimality_witness_operator(k, m);
    auto ew = eig_hermitian(w);
    int zeros = (k - 1) * (m - 1);
    for (int i = 0; i < zeros; ++i) CHECK(std::abs(ew.eigenvalues[i]) <= 1e-10);
    for (int i = zeros; i < k * m; ++i)
      CHECK(ew.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-10));
    PnrExtrema e2 = pnr_hermitian_extrema(w, 24, 951);
    CHECK(e2.min_value >= 0.01);
  }
}

TEST_CASE("see-saw beats both index bounds on a batch of random operators") {
  for (auto dims : {std::vector<int>{2, 2}, {2, 3}, {3, 3}}) {
    for (int trial = 0; trial < 20; ++trial) {
      ComplexMatrix x = random_hermitian(dims, 960 + dims[0] * 10 + dims[1], trial);
      auto e = eig_hermitian(x);
      int kk = dims[0], mm = dims[1];
      PnrExtrema ext = pnr_hermitian_extrema(x, 16, 961 + trial);
      CHECK(ext.max_value >= e.eigenvalues[kk + mm - 2] - 1e-8);
      CHECK(ext.min_value <= e.eigenvalues[(kk - 1) * (mm - 1)] + 1e-8);
    }
  }
}

#pragma once

#include <vector>

#include "prodrange/complex_matrix.hpp"
#include "prodrange/rng.hpp"
#include "prodrange/tensor_ops.hpp"

namespace prodrange::testing {

inline ComplexMatrix random_matrix(const std::vector<int>& dims, std::uint64_t seed,
                                   std::uint64_t stream = 0) {
  CounterRng rng(seed, stream);
  ComplexMatrix m = ComplexMatrix::zero(dims);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m(i, j) = rng.complex_gauss();
  return m;
}

inline ComplexMatrix random_hermitian(const std::vector<int>& dims, std::uint64_t seed,
                                      std::uint64_t stream = 0) {
  return hermitian_part(random_matrix(dims, seed, stream));
}

// 2x2 Hermitian eigenvalues in closed form; test-side oracle
inline std::pair<double, double> herm2x2_eigs(const ComplexMatrix& x) {
  double a = x(0, 0).real(), c = x(1, 1).real();
  double mid = 0.5 * (a + c);
  double half = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(x(0, 1)));
  return {mid - half, mid + half};
}

// regular polygon inscribed in the circle |z - center| = radius
inline std::vector<Complex> disc_polygon(Complex center, double radius, int n = 512) {
  std::vector<Complex> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = center + std::polar(radius, 6.283185307179586 * i / n);
  return pts;
}

}  // namespace prodrange::testing

#include "prodrange/schmidt.hpp"

#include <cmath>
#include <cstddef>

#include "prodrange/eig.hpp"
#include "prodrange/tensor_ops.hpp"

namespace prodrange {

ComplexMatrix OperatorSchmidt::reconstruct(const std::vector<int>& dims) const {
  ComplexMatrix acc = ComplexMatrix::zero(dims);
  for (std::size_t t = 0; t < coefficients.size(); ++t) {
    ComplexMatrix term = kron(left[t], right[t]);
    term *= std::sqrt(coefficients[t]);
    acc += term.with_dims(dims);
  }
  return acc;
}

std::vector<Complex> StateSchmidt::reconstruct() const {
  if (coefficients.empty()) return {};
  std::size_t k = left[0].size(), m = right[0].size();
  std::vector<Complex> psi(k * m, 0.0);
  for (std::size_t t = 0; t < coefficients.size(); ++t) {
    double w = std::sqrt(coefficients[t]);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) psi[i * m + j] += w * left[t][i] * right[t][j];
  }
  return psi;
}

OperatorSchmidt operator_schmidt(const ComplexMatrix& x) {
  const auto& dims = x.dims();
  if (dims.size() != 2) throw InvalidArgument("operator Schmidt expects a bipartite matrix");
  int kdim = dims[0], mdim = dims[1];

  int rows = 0, cols = 0;
  std::vector<Complex> y = reshuffle_rect(x, rows, cols);
  RectSvd s = svd_rect(rows, cols, y);

  OperatorSchmidt out;
  double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  // the Gram route floors tiny singular values at sqrt(eps) * sigma_max;
  // anything below 1e-7 relative is rank noise, not a Schmidt term
  for (std::size_t t = 0; t < s.sigma.size(); ++t) {
    if (s.sigma[t] <= 1e-7 * (smax + 1e-300)) break;
    out.coefficients.push_back(s.sigma[t] * s.sigma[t]);
    // rows of Y are (i,i'): unvec the left singular vector into A_t
    ComplexMatrix a = ComplexMatrix::zero({kdim});
    for (int i = 0; i < kdim; ++i)
      for (int ip = 0; ip < kdim; ++ip) a(i, ip) = s.u[t][i * kdim + ip];
    // columns are (j,j'); B_t comes from the conjugated right vector
    ComplexMatrix b = ComplexMatrix::zero({mdim});
    for (int j = 0; j < mdim; ++j)
      for (int jp = 0; jp < mdim; ++jp) b(j, jp) = std::conj(s.v[t][j * mdim + jp]);
    out.left.push_back(std::move(a));
    out.right.push_back(std::move(b));
  }
  return out;
}

StateSchmidt pure_schmidt(const std::vector<Complex>& psi, int dim_k, int dim_m) {
  if (static_cast<int>(psi.size()) != dim_k * dim_m)
    throw DimensionMismatch("state length does not equal K*M");
  if (std::abs(vector_norm(psi) - 1.0) > 1e-8)
    throw InvalidArgument("pure_schmidt expects a unit vector");

  // coefficient matrix A[i][j] = psi[i*M+j]
  RectSvd s = svd_rect(dim_k, dim_m, psi);

  StateSchmidt out;
  double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  for (std::size_t t = 0; t < s.sigma.size(); ++t) {
    if (s.sigma[t] <= 1e-7 * (smax + 1e-300)) break;
    out.coefficients.push_back(s.sigma[t] * s.sigma[t]);
    out.left.push_back(s.u[t]);
    std::vector<Complex> r(s.v[t].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::conj(s.v[t][j]);
    out.right.push_back(std::move(r));
  }
  return out;
}

}  // namespace prodrange

#pragma once

#include <vector>

#include "prodrange/complex_matrix.hpp"

namespace prodrange {

// Operator Schmidt decomposition X = sum_i sqrt(mu_i) A_i x B_i with
// Hilbert-Schmidt-orthonormal factor families; mu descending, zero terms
// dropped, sum mu_i = ||X||_HS^2.
struct OperatorSchmidt {
  std::vector<double> coefficients;  // mu_i
  std::vector<ComplexMatrix> left;   // A_i, order K
  std::vector<ComplexMatrix> right;  // B_i, order M

  ComplexMatrix reconstruct(const std::vector<int>& dims) const;
};

// Schmidt data of a bipartite pure state: mu is a probability vector and
// psi = sum_i sqrt(mu_i) left_i x right_i.
struct StateSchmidt {
  std::vector<double> coefficients;
  std::vector<std::vector<Complex>> left;
  std::vector<std::vector<Complex>> right;

  std::vector<Complex> reconstruct() const;
};

OperatorSchmidt operator_schmidt(const ComplexMatrix& x);

StateSchmidt pure_schmidt(const std::vector<Complex>& psi, int dim_k, int dim_m);

}  // namespace prodrange

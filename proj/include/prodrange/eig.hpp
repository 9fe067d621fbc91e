#pragma once

#include <vector>

#include "prodrange/complex_matrix.hpp"

namespace prodrange {

// Spectral data of a Hermitian matrix: eigenvalues ascending, orthonormal
// eigenvector columns in matching order, phases fixed per fix_phase().
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // column i is the eigenvector of eigenvalues[i]

  std::vector<Complex> eigenvector(int i) const;
};

// Cyclic Jacobi with complex plane rotations.  Rejects inputs whose
// Hermiticity defect exceeds 1e-10 * ||X||_F (NotHermitian); throws
// NoConvergence after 100 sweeps.
EigenDecomposition eig_hermitian(const ComplexMatrix& x);

// Rectangular SVD, A = sum_i sigma_i u_i v_i^dagger, computed from the
// eigendecomposition of A^dagger A.  Left vectors are re-orthonormalized and
// the null space is completed by Gram-Schmidt so u and v always hold
// min(rows, cols) orthonormal columns.  sigma is descending.
struct RectSvd {
  std::vector<double> sigma;
  std::vector<std::vector<Complex>> u;  // length-rows columns
  std::vector<std::vector<Complex>> v;  // length-cols columns
};

RectSvd svd_rect(int rows, int cols, const std::vector<Complex>& a);

}  // namespace prodrange

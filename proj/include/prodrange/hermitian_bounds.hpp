#pragma once

#include <cstdint>
#include <vector>

#include "prodrange/complex_matrix.hpp"
#include "prodrange/product_range.hpp"
#include "prodrange/tensor_ops.hpp"

namespace prodrange {

// Completely entangled subspace of dimension (K-1)(M-1): orthonormalized
// vectorizations of the matrices A^(ij) = E^(ij) + E^(i+1,j+1).
struct EntangledSubspace {
  int dim_k = 0;
  int dim_m = 0;
  std::vector<std::vector<Complex>> basis;  // orthonormal, length K*M each
};

EntangledSubspace entangled_subspace(int dim_k, int dim_m);

// The raw A^(ij) vectorizations before orthonormalization, lexicographic in
// (i, j); coefficient of |k,l> is A^(ij)[k][l].
std::vector<std::vector<Complex>> entangled_subspace_raw(int dim_k, int dim_m);

// Rank-one search inside a span: minimize the second Schmidt coefficient of
// the coefficient matrix of sum_i c_i v_i over unit c, alternating between
// the combination c and the best product pair.  NotFound (found = false) is a
// certificate of search failure, not of nonexistence.
struct ProductSearchResult {
  bool found = false;
  ProductStateTuple state;          // factored candidate
  double mu2 = 1.0;                 // best second Schmidt coefficient reached
  double span_residual = 1.0;       // || state - P state ||
  int restarts_used = 0;
};

ProductSearchResult find_product_state_in_span(const std::vector<std::vector<Complex>>& span,
                                               int dim_k, int dim_m, int max_restarts = 64,
                                               std::uint64_t seed = 0);

// Eigenvalue-index bounds with witnesses: lambda_max^x >= lambda_{K+M-1} and
// lambda_min^x <= lambda_{(K-1)(M-1)+1}, certified by product states found in
// the top/bottom eigen-subspaces of dimension (K-1)(M-1)+1, which also warm
// start the see-saw.
struct SpectralBoundReport {
  int dim_k = 0, dim_m = 0;
  int lower_idx = 0;  // K+M-1 (1-based into the ascending spectrum)
  int upper_idx = 0;  // (K-1)(M-1)+1
  double bound_low = 0.0;   // lambda_{K+M-1}
  double bound_high = 0.0;  // lambda_{(K-1)(M-1)+1}
  std::vector<double> spectrum;
  ProductSearchResult max_side;  // product state in the top eigen-subspace
  ProductSearchResult min_side;  // product state in the bottom eigen-subspace
  double max_witness_value = 0.0;
  double min_witness_value = 0.0;
  PnrExtrema seesaw;
};

SpectralBoundReport bound_report(const ComplexMatrix& x, int n_restarts = 32,
                                 std::uint64_t seed = 0);

// Hermitian projector onto the orthogonal complement of the completely
// entangled subspace: spectrum {0^(K-1)(M-1), 1^rest} with strictly positive
// product minimum, demonstrating optimality of the index bounds.
ComplexMatrix optimality_witness_operator(int dim_k, int dim_m);

}  // namespace prodrange

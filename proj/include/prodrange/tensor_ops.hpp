#pragma once

#include <cstdint>
#include <vector>

#include "prodrange/complex_matrix.hpp"

namespace prodrange {

// One unit vector per tensor factor, |psi_1 x ... x psi_k>.
struct ProductStateTuple {
  std::vector<std::vector<Complex>> factors;

  ProductStateTuple() = default;
  explicit ProductStateTuple(std::vector<std::vector<Complex>> f);

  std::vector<int> dims() const;
  // full vector psi_1 x ... x psi_k
  std::vector<Complex> assemble() const;
  void check_unit(double tol = 1e-8) const;
};

// Kronecker product; result dims are the concatenation of both factor lists.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker sum A x 1 + 1 x B.
ComplexMatrix kron_sum(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out factor `which_factor` (0-based); remaining dims keep their order.
ComplexMatrix partial_trace(const ComplexMatrix& x, int which_factor);

// Reduce onto a single factor by tracing out all others.
ComplexMatrix reduce_to_factor(const ComplexMatrix& x, int which_factor);

// Bipartite reshuffle <i,j|Y|i',j'> = <i,i'|X|j,j'>; requires dims (K, K).
ComplexMatrix reshuffle(const ComplexMatrix& x);

// Rectangular generalization for dims (K, M): returns the K^2 x M^2 array
// row-major, rows indexed by (i,i'), columns by (j,j').
std::vector<Complex> reshuffle_rect(const ComplexMatrix& x, int& rows, int& cols);

// (U_1 x ... x U_k) X (U_1 x ... x U_k)^dagger with per-factor unitaries.
ComplexMatrix apply_local_unitary(const ComplexMatrix& x, const std::vector<ComplexMatrix>& us);

// Contraction of all factors except `keep` onto the given per-factor vectors:
// M[i,j] = <.. psi ..,i| X |.. psi ..,j> with slot `keep` left open.
ComplexMatrix contract_all_but(const ComplexMatrix& x,
                               const std::vector<std::vector<Complex>>& factors, int keep);

// <psi_k| acting on the last factor: result lives on dims without the last.
ComplexMatrix contract_last_factor(const ComplexMatrix& x, const std::vector<Complex>& psi);

// Haar-distributed unitary from the QR of a complex Gaussian matrix.
ComplexMatrix haar_unitary(int n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace prodrange

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prodrange/complex_matrix.hpp"
#include "prodrange/minkowski.hpp"
#include "prodrange/tensor_ops.hpp"

namespace prodrange {

enum class PnrMethod { sampled, parametrized, minkowski, seesaw };

struct PnrExtrema {
  double min_value = 0.0;
  double max_value = 0.0;
  ProductStateTuple min_witness;
  ProductStateTuple max_witness;
};

struct PnrRadius {
  double lower = 0.0;  // attained by `witness`
  double upper = 0.0;  // numerical radius bound from the support polygon
  ProductStateTuple witness;
};

struct PnrBarycenter {
  Complex value;
  ProductStateTuple witness;
};

// Computed product-numerical-range artifacts; operations fill the parts they
// produce.
struct PnrReport {
  PnrMethod method = PnrMethod::sampled;
  std::vector<Complex> points;
  std::optional<PnrExtrema> extrema;
  std::optional<PnrRadius> radius;
  std::optional<PnrBarycenter> barycenter;
  std::optional<PlanarRegion> region;  // Minkowski-path result
};

// Rayleigh quotients of seeded Haar product states; sample s depends only on
// (seed, s), so clouds are reproducible and prefix-stable.
PnrReport pnr_sample(const ComplexMatrix& x, std::size_t n_samples, std::uint64_t seed);

// Exact parametrization for product-diagonalizable operators: conjugate by
// the local unitaries (or verify X is already diagonal when none are given),
// then sweep the per-factor probability simplices on a uniform grid.
PnrReport pnr_parametrized(const ComplexMatrix& x, const std::vector<ComplexMatrix>& local_us,
                           int grid_per_factor, bool warp_edges = false);

// Product state generating cloud point `flat_index` of pnr_parametrized.
ProductStateTuple simplex_state(const std::vector<int>& dims, int grid, std::size_t flat_index,
                                const std::vector<ComplexMatrix>& local_us,
                                bool warp_edges = false);

// Product numerical range of a Kronecker product as the Minkowski product of
// the factors' numerical ranges.
PnrReport pnr_tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, int resolution = 512);
PnrReport pnr_tensor_product(const std::vector<ComplexMatrix>& factors, int resolution = 512);

// See-saw extrema of a Hermitian operator: alternate per-factor extreme
// eigenvector updates from seeded restarts plus eigen-subspace and product
// basis warm starts; best monotone local optima over all starts.
PnrExtrema pnr_hermitian_extrema(const ComplexMatrix& x, int n_restarts, std::uint64_t seed);

// Product numerical radius.  Hermitian operators use the see-saw extrema;
// otherwise the lower bound sweeps see-saw over rotated Hermitian parts on a
// theta grid and the upper bound is the numerical radius of X.
PnrRadius product_numerical_radius(const ComplexMatrix& x, int n_restarts = 8,
                                   std::uint64_t seed = 0, int n_theta = 64);

// Product state attaining tr X / N: peel factors right to left, hitting the
// spectral barycenter of each partial-trace reduction via attain_value.
ProductStateTuple barycenter_witness(const ComplexMatrix& x);
PnrBarycenter barycenter_report(const ComplexMatrix& x);

// Outer bound from the operator Schmidt decomposition: Minkowski sum over
// terms of sqrt(mu_i) (W(A_i) boxtimes W(B_i)).  n_terms = 0 keeps all terms.
PlanarRegion schmidt_outer_bound(const ComplexMatrix& x, int n_terms = 0, int resolution = 512);

// Reports for H(X) and S(X): see-saw extrema of H(X) and of -i S(X); the
// latter interval is the imaginary projection of the product range.
std::pair<PnrReport, PnrReport> pnr_projections(const ComplexMatrix& x, int n_restarts = 16,
                                                std::uint64_t seed = 0);

// Hermitian path utility: walk the product-state path between two tuples
// (per-factor interpolation) until the Rayleigh quotient hits `target`.
ProductStateTuple product_state_on_path(const ComplexMatrix& x, const ProductStateTuple& a,
                                        const ProductStateTuple& b, double target,
                                        double tol = 1e-9);

}  // namespace prodrange

#pragma once

#include <cstdint>
#include <vector>

#include "prodrange/complex_matrix.hpp"
#include "prodrange/planar_region.hpp"
#include "prodrange/tensor_ops.hpp"

// Data-parallel inner loops, each in two builds: a serial reference and an
// OpenMP version.  Both compute every work item as a pure function of its
// index, so outputs are bit-identical regardless of thread count; the test
// suite asserts that and tools/bench compares their speed.  The unsuffixed
// name dispatches on the configured thread count.
namespace prodrange::kernels {

void set_max_threads(int n);  // n <= 0 restores the hardware default
int max_threads();
bool parallel_enabled();

// ---- numerical-range support sweep ----------------------------------------

struct AngleSample {
  double theta = 0.0;
  double support = 0.0;
  std::vector<Complex> points;                   // 1 entry, or 2 on a flat facet
  std::vector<std::vector<Complex>> witnesses;   // matching unit vectors
};

AngleSample sample_angle(const ComplexMatrix& x, double theta);

std::vector<AngleSample> support_sweep_serial(const ComplexMatrix& x,
                                              const std::vector<double>& thetas);
std::vector<AngleSample> support_sweep_omp(const ComplexMatrix& x,
                                           const std::vector<double>& thetas);
std::vector<AngleSample> support_sweep(const ComplexMatrix& x, const std::vector<double>& thetas);

// ---- product-state sampling ------------------------------------------------

// Rayleigh quotients of `count` seeded Haar product states; sample s is drawn
// from stream (seed, s), so prefixes agree across different counts.
std::vector<Complex> sample_rayleigh_serial(const ComplexMatrix& x, std::uint64_t seed,
                                            std::size_t count,
                                            std::vector<ProductStateTuple>* states = nullptr);
std::vector<Complex> sample_rayleigh_omp(const ComplexMatrix& x, std::uint64_t seed,
                                         std::size_t count,
                                         std::vector<ProductStateTuple>* states = nullptr);
std::vector<Complex> sample_rayleigh(const ComplexMatrix& x, std::uint64_t seed, std::size_t count,
                                     std::vector<ProductStateTuple>* states = nullptr);

ProductStateTuple random_product_state(const std::vector<int>& dims, std::uint64_t seed,
                                       std::uint64_t stream);

// ---- simplex-grid cloud for product-diagonalizable operators ---------------

// All probability vectors on the (m-1)-simplex with weights k/grid.  The
// warped variant refines spacing toward the simplex boundary (sin^2 warp per
// coordinate, renormalized), where the product-range map degenerates; corner
// weights stay exact.
std::vector<std::vector<double>> simplex_grid(int m, int grid, bool warp_edges = false);

// Cloud of sum_l p(1)_{l1} ... p(k)_{lk} lambda_l over the full weight grid,
// in flat row-major order over the per-factor grids.
std::vector<Complex> simplex_cloud_serial(const std::vector<Complex>& lambda,
                                          const std::vector<int>& dims, int grid,
                                          bool warp_edges = false);
std::vector<Complex> simplex_cloud_omp(const std::vector<Complex>& lambda,
                                       const std::vector<int>& dims, int grid,
                                       bool warp_edges = false);
std::vector<Complex> simplex_cloud(const std::vector<Complex>& lambda,
                                   const std::vector<int>& dims, int grid,
                                   bool warp_edges = false);

// ---- pairwise curve rasterization (Minkowski sum/product fallback) ---------

enum class PairOp { sum, product };

void pairwise_mark_serial(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                          RasterMask& mask);
void pairwise_mark_omp(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                       RasterMask& mask);
void pairwise_mark(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                   RasterMask& mask);

// ---- see-saw restarts -------------------------------------------------------

struct SeesawResult {
  double value = 0.0;
  ProductStateTuple state;
  int sweeps = 0;
  bool monotone = true;
};

SeesawResult seesaw_run(const ComplexMatrix& x, ProductStateTuple init, bool maximize,
                        int max_sweeps = 500);

std::vector<SeesawResult> seesaw_batch_serial(const ComplexMatrix& x,
                                              const std::vector<ProductStateTuple>& inits,
                                              bool maximize, int max_sweeps = 500);
std::vector<SeesawResult> seesaw_batch_omp(const ComplexMatrix& x,
                                           const std::vector<ProductStateTuple>& inits,
                                           bool maximize, int max_sweeps = 500);
std::vector<SeesawResult> seesaw_batch(const ComplexMatrix& x,
                                       const std::vector<ProductStateTuple>& inits, bool maximize,
                                       int max_sweeps = 500);

}  // namespace prodrange::kernels

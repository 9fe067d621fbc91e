#include "prodrange/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "prodrange/eig.hpp"
#include "prodrange/rng.hpp"

namespace prodrange::kernels {

namespace {
int g_max_threads = 0;  // 0 = hardware default
}

void set_max_threads(int n) { g_max_threads = n > 0 ? n : 0; }

int max_threads() {
#ifdef _OPENMP
  return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

bool parallel_enabled() {
#ifdef _OPENMP
  return max_threads() > 1;
#else
  return false;
#endif
}

// ---------------------------------------------------------------------------
// support sweep

AngleSample sample_angle(const ComplexMatrix& x, double theta) {
  Complex w = std::polar(1.0, -theta);
  ComplexMatrix rx = x;
  rx *= w;
  ComplexMatrix h = hermitian_part(rx);
  EigenDecomposition eig = eig_hermitian(h);

  AngleSample out;
  out.theta = theta;
  int n = x.size();
  out.support = eig.eigenvalues.back();

  // flat facets: the top eigenvalue may be degenerate; take both extreme
  // directions of the cross-section operator Im(e^{-i theta} X)
  double cluster_tol = 1e-8 * (1.0 + x.frobenius_norm());
  int lo = n - 1;
  while (lo > 0 && out.support - eig.eigenvalues[lo - 1] <= cluster_tol) --lo;
  int d = n - lo;
  if (d == 1) {
    auto v = eig.eigenvector(n - 1);
    out.points.push_back(rayleigh_quotient(x, v));
    out.witnesses.push_back(std::move(v));
    return out;
  }
  ComplexMatrix t = antihermitian_part(rx);
  t *= Complex(0.0, -1.0);  // Hermitian cross-section generator
  // compress onto the top eigenspace
  std::vector<std::vector<Complex>> basis(d);
  for (int i = 0; i < d; ++i) basis[i] = eig.eigenvector(lo + i);
  ComplexMatrix c = ComplexMatrix::zero({d});
  for (int a = 0; a < d; ++a) {
    auto tb = t.apply(basis[a]);
    for (int b = 0; b < d; ++b) c(b, a) = inner_product(basis[b], tb);
  }
  c = hermitian_part(c);
  EigenDecomposition ce = eig_hermitian(c);
  for (int which : {0, d - 1}) {
    auto coeff = ce.eigenvector(which);
    std::vector<Complex> v(n, 0.0);
    for (int a = 0; a < d; ++a)
      for (int k = 0; k < n; ++k) v[k] += coeff[a] * basis[a][k];
    double nrm = vector_norm(v);
    for (auto& e : v) e /= nrm;
    fix_phase(v);
    out.points.push_back(rayleigh_quotient(x, v));
    out.witnesses.push_back(std::move(v));
  }
  // order facet endpoints along the facet direction i e^{i theta}
  Complex dir = Complex(0, 1) * std::polar(1.0, theta);
  if ((std::conj(dir) * out.points[0]).real() > (std::conj(dir) * out.points[1]).real()) {
    std::swap(out.points[0], out.points[1]);
    std::swap(out.witnesses[0], out.witnesses[1]);
  }
  return out;
}

std::vector<AngleSample> support_sweep_serial(const ComplexMatrix& x,
                                              const std::vector<double>& thetas) {
  std::vector<AngleSample> out(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) out[i] = sample_angle(x, thetas[i]);
  return out;
}

std::vector<AngleSample> support_sweep_omp(const ComplexMatrix& x,
                                           const std::vector<double>& thetas) {
  std::vector<AngleSample> out(thetas.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(thetas.size()); ++i)
    out[i] = sample_angle(x, thetas[i]);
  return out;
}

std::vector<AngleSample> support_sweep(const ComplexMatrix& x, const std::vector<double>& thetas) {
  return parallel_enabled() ? support_sweep_omp(x, thetas) : support_sweep_serial(x, thetas);
}

// ---------------------------------------------------------------------------
// product-state sampling

ProductStateTuple random_product_state(const std::vector<int>& dims, std::uint64_t seed,
                                       std::uint64_t stream) {
  CounterRng rng(seed, stream);
  std::vector<std::vector<Complex>> f;
  f.reserve(dims.size());
  for (int m : dims) f.push_back(rng.unit_vector(m));
  return ProductStateTuple(std::move(f));
}

namespace {
Complex one_sample(const ComplexMatrix& x, std::uint64_t seed, std::size_t s,
                   ProductStateTuple* state_out) {
  ProductStateTuple st = random_product_state(x.dims(), seed, s);
  Complex z = rayleigh_quotient(x, st.assemble());
  if (state_out) *state_out = std::move(st);
  return z;
}
}  // namespace

std::vector<Complex> sample_rayleigh_serial(const ComplexMatrix& x, std::uint64_t seed,
                                            std::size_t count,
                                            std::vector<ProductStateTuple>* states) {
  std::vector<Complex> out(count);
  if (states) states->resize(count);
  for (std::size_t s = 0; s < count; ++s)
    out[s] = one_sample(x, seed, s, states ? &(*states)[s] : nullptr);
  return out;
}

std::vector<Complex> sample_rayleigh_omp(const ComplexMatrix& x, std::uint64_t seed,
                                         std::size_t count,
                                         std::vector<ProductStateTuple>* states) {
  std::vector<Complex> out(count);
  if (states) states->resize(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(count); ++s)
    out[s] = one_sample(x, seed, s, states ? &(*states)[s] : nullptr);
  return out;
}

std::vector<Complex> sample_rayleigh(const ComplexMatrix& x, std::uint64_t seed, std::size_t count,
                                     std::vector<ProductStateTuple>* states) {
  return parallel_enabled() ? sample_rayleigh_omp(x, seed, count, states)
                            : sample_rayleigh_serial(x, seed, count, states);
}

// ---------------------------------------------------------------------------
// simplex-grid cloud

namespace {
void compositions(int slot, int m, int rem, int grid, std::vector<int>& counts,
                  std::vector<std::vector<double>>& out) {
  if (slot == m - 1) {
    counts[slot] = rem;
    std::vector<double> w(m);
    for (int i = 0; i < m; ++i) w[i] = static_cast<double>(counts[i]) / grid;
    out.push_back(std::move(w));
    return;
  }
  for (int c = 0; c <= rem; ++c) {
    counts[slot] = c;
    compositions(slot + 1, m, rem - c, grid, counts, out);
  }
}
}  // namespace

std::vector<std::vector<double>> simplex_grid(int m, int grid, bool warp_edges) {
  if (m < 1 || grid < 1) throw InvalidArgument("simplex_grid needs m >= 1 and grid >= 1");
  std::vector<std::vector<double>> out;
  std::vector<int> counts(m, 0);
  compositions(0, m, grid, grid, counts, out);
  if (warp_edges) {
    constexpr double kHalfPi = 1.5707963267948966192313216916398;
    for (auto& w : out) {
      double sum = 0.0;
      for (auto& v : w) {
        double s = std::sin(kHalfPi * v);
        v = s * s;
        sum += v;
      }
      for (auto& v : w) v /= sum;
    }
  }
  return out;
}

namespace {
Complex simplex_value(const std::vector<Complex>& lambda, const std::vector<int>& dims,
                      const std::vector<const std::vector<double>*>& weights) {
  // contract the diagonal tensor factor by factor, last factor first
  std::vector<Complex> cur(lambda);
  for (int r = static_cast<int>(dims.size()) - 1; r >= 0; --r) {
    int m = dims[r];
    std::size_t blocks = cur.size() / m;
    std::vector<Complex> next(blocks);
    const auto& w = *weights[r];
    for (std::size_t b = 0; b < blocks; ++b) {
      Complex s = 0.0;
      for (int l = 0; l < m; ++l) s += w[l] * cur[b * m + l];
      next[b] = s;
    }
    cur = std::move(next);
  }
  return cur[0];
}
}  // namespace

static std::vector<Complex> simplex_cloud_impl(const std::vector<Complex>& lambda,
                                               const std::vector<int>& dims, int grid,
                                               bool warp_edges, bool parallel) {
  int k = static_cast<int>(dims.size());
  std::vector<std::vector<std::vector<double>>> grids(k);
  std::size_t total = 1;
  for (int r = 0; r < k; ++r) {
    grids[r] = simplex_grid(dims[r], grid, warp_edges);
    total *= grids[r].size();
  }
  std::vector<Complex> out(total);
  auto work = [&](std::size_t flat) {
    std::vector<const std::vector<double>*> w(k);
    std::size_t rest = flat;
    for (int r = k - 1; r >= 0; --r) {
      w[r] = &grids[r][rest % grids[r].size()];
      rest /= grids[r].size();
    }
    out[flat] = simplex_value(lambda, dims, w);
  };
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i)
      work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < total; ++i) work(i);
  }
  return out;
}

std::vector<Complex> simplex_cloud_serial(const std::vector<Complex>& lambda,
                                          const std::vector<int>& dims, int grid,
                                          bool warp_edges) {
  return simplex_cloud_impl(lambda, dims, grid, warp_edges, false);
}

std::vector<Complex> simplex_cloud_omp(const std::vector<Complex>& lambda,
                                       const std::vector<int>& dims, int grid, bool warp_edges) {
  return simplex_cloud_impl(lambda, dims, grid, warp_edges, true);
}

std::vector<Complex> simplex_cloud(const std::vector<Complex>& lambda, const std::vector<int>& dims,
                                   int grid, bool warp_edges) {
  return simplex_cloud_impl(lambda, dims, grid, warp_edges, parallel_enabled());
}

// ---------------------------------------------------------------------------
// pairwise curve rasterization

namespace {
void mark_point(RasterMask& mask, Complex z) {
  int i, j;
  mask.locate(z, i, j);
  if (i >= 0 && i < mask.height && j >= 0 && j < mask.width) mask.set(i, j);
}
}  // namespace

void pairwise_mark_serial(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                          RasterMask& mask) {
  for (auto za : a)
    for (auto zb : b) mark_point(mask, op == PairOp::sum ? za + zb : za * zb);
}

void pairwise_mark_omp(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                       RasterMask& mask) {
#ifdef _OPENMP
  int nt = max_threads();
  std::vector<RasterMask> local(nt, RasterMask(mask.origin, mask.cell, mask.width, mask.height));
#pragma omp parallel num_threads(nt)
  {
    int tid = omp_get_thread_num();
    RasterMask& mine = local[tid];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(a.size()); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        mark_point(mine, op == PairOp::sum ? a[i] + b[j] : a[i] * b[j]);
  }
  for (const auto& m : local)
    for (std::size_t i = 0; i < mask.on.size(); ++i) mask.on[i] |= m.on[i];
#else
  pairwise_mark_serial(a, b, op, mask);
#endif
}

void pairwise_mark(const std::vector<Complex>& a, const std::vector<Complex>& b, PairOp op,
                   RasterMask& mask) {
  if (parallel_enabled())
    pairwise_mark_omp(a, b, op, mask);
  else
    pairwise_mark_serial(a, b, op, mask);
}

// ---------------------------------------------------------------------------
// see-saw

SeesawResult seesaw_run(const ComplexMatrix& x, ProductStateTuple init, bool maximize,
                        int max_sweeps) {
  const auto& dims = x.dims();
  int k = static_cast<int>(dims.size());
  SeesawResult res;
  res.state = std::move(init);
  double stop = 1e-12 * (1.0 + x.frobenius_norm());

  auto objective = [&]() { return rayleigh_quotient(x, res.state.assemble()).real(); };
  res.value = objective();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double before = res.value;
    for (int r = 0; r < k; ++r) {
      ComplexMatrix m = contract_all_but(x, res.state.factors, r);
      m = hermitian_part(m);  // X Hermitian => contraction Hermitian up to roundoff
      EigenDecomposition eig = eig_hermitian(m);
      int which = maximize ? dims[r] - 1 : 0;
      res.state.factors[r] = eig.eigenvector(which);
      res.value = eig.eigenvalues[which];
    }
    ++res.sweeps;
    if (maximize ? res.value < before - stop : res.value > before + stop) res.monotone = false;
    if (std::abs(res.value - before) < stop) break;
  }
  for (auto& f : res.state.factors) fix_phase(f);
  res.value = objective();
  return res;
}

std::vector<SeesawResult> seesaw_batch_serial(const ComplexMatrix& x,
                                              const std::vector<ProductStateTuple>& inits,
                                              bool maximize, int max_sweeps) {
  std::vector<SeesawResult> out(inits.size());
  for (std::size_t i = 0; i < inits.size(); ++i)
    out[i] = seesaw_run(x, inits[i], maximize, max_sweeps);
  return out;
}

std::vector<SeesawResult> seesaw_batch_omp(const ComplexMatrix& x,
                                           const std::vector<ProductStateTuple>& inits,
                                           bool maximize, int max_sweeps) {
  std::vector<SeesawResult> out(inits.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inits.size()); ++i)
    out[i] = seesaw_run(x, inits[i], maximize, max_sweeps);
  return out;
}

std::vector<SeesawResult> seesaw_batch(const ComplexMatrix& x,
                                       const std::vector<ProductStateTuple>& inits, bool maximize,
                                       int max_sweeps) {
  return parallel_enabled() ? seesaw_batch_omp(x, inits, maximize, max_sweeps)
                            : seesaw_batch_serial(x, inits, maximize, max_sweeps);
}

}  // namespace prodrange::kernels

#include "prodrange/product_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prodrange/eig.hpp"
#include "prodrange/hermitian_bounds.hpp"
#include "prodrange/kernels.hpp"
#include "prodrange/numerical_range.hpp"
#include "prodrange/schmidt.hpp"

namespace prodrange {

namespace {

void require_product_space(const ComplexMatrix& x) {
  if (x.factor_count() < 2)
    throw InvalidArgument("operation needs a tensor product of at least two factors");
}

PnrRadius radius_from_cloud(const ComplexMatrix& x, const std::vector<Complex>& cloud,
                            std::uint64_t seed, bool states_from_seed) {
  PnrRadius r;
  std::size_t best = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (std::abs(cloud[i]) > std::abs(cloud[best])) best = i;
  r.lower = cloud.empty() ? 0.0 : std::abs(cloud[best]);
  r.upper = numerical_radius_upper(numerical_range_boundary(x, 128));
  if (states_from_seed && !cloud.empty())
    r.witness = kernels::random_product_state(x.dims(), seed, best);
  return r;
}

}  // namespace

PnrReport pnr_sample(const ComplexMatrix& x, std::size_t n_samples, std::uint64_t seed) {
  require_product_space(x);
  if (n_samples == 0) throw InvalidArgument("sample count must be positive");
  PnrReport rep;
  rep.method = PnrMethod::sampled;
  rep.points = kernels::sample_rayleigh(x, seed, n_samples);
  rep.radius = radius_from_cloud(x, rep.points, seed, true);
  return rep;
}

// ---------------------------------------------------------------------------
// parametrized path

namespace {
std::vector<Complex> product_diagonal(const ComplexMatrix& x,
                                      const std::vector<ComplexMatrix>& local_us) {
  ComplexMatrix y = local_us.empty() ? x : apply_local_unitary(x, local_us);
  double off = 0.0;
  for (int i = 0; i < y.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      if (i != j) off += std::norm(y(i, j));
  if (std::sqrt(off) > 1e-10 * (y.frobenius_norm() + 1e-300))
    throw NotProductDiagonal(local_us.empty()
                                 ? "matrix is not diagonal in the computational product basis"
                                 : "given local unitaries do not diagonalize the matrix");
  std::vector<Complex> lambda(y.size());
  for (int i = 0; i < y.size(); ++i) lambda[i] = y(i, i);
  return lambda;
}
}  // namespace

PnrReport pnr_parametrized(const ComplexMatrix& x, const std::vector<ComplexMatrix>& local_us,
                           int grid_per_factor, bool warp_edges) {
  require_product_space(x);
  if (grid_per_factor < 1) throw InvalidArgument("grid must have at least one cell per factor");
  std::vector<Complex> lambda = product_diagonal(x, local_us);

  PnrReport rep;
  rep.method = PnrMethod::parametrized;
  rep.points = kernels::simplex_cloud(lambda, x.dims(), grid_per_factor, warp_edges);
  PnrRadius r;
  std::size_t best = 0;
  for (std::size_t i = 0; i < rep.points.size(); ++i)
    if (std::abs(rep.points[i]) > std::abs(rep.points[best])) best = i;
  r.lower = std::abs(rep.points[best]);
  r.upper = numerical_radius_upper(numerical_range_boundary(x, 128));
  r.witness = simplex_state(x.dims(), grid_per_factor, best, local_us, warp_edges);
  rep.radius = r;
  return rep;
}

ProductStateTuple simplex_state(const std::vector<int>& dims, int grid, std::size_t flat_index,
                                const std::vector<ComplexMatrix>& local_us, bool warp_edges) {
  int k = static_cast<int>(dims.size());
  std::vector<std::vector<std::vector<double>>> grids(k);
  for (int r = 0; r < k; ++r) grids[r] = kernels::simplex_grid(dims[r], grid, warp_edges);
  std::vector<std::vector<Complex>> factors(k);
  std::size_t rest = flat_index;
  for (int r = k - 1; r >= 0; --r) {
    const auto& w = grids[r][rest % grids[r].size()];
    rest /= grids[r].size();
    std::vector<Complex> f(dims[r]);
    for (int l = 0; l < dims[r]; ++l) f[l] = std::sqrt(w[l]);
    factors[r] = std::move(f);
  }
  if (!local_us.empty()) {
    if (static_cast<int>(local_us.size()) != k)
      throw DimensionMismatch("one local unitary per factor required");
    for (int r = 0; r < k; ++r) {
      // the cloud was built for U X U^dagger; states map back through U^dagger
      std::vector<Complex> mapped(dims[r], 0.0);
      for (int i = 0; i < dims[r]; ++i)
        for (int l = 0; l < dims[r]; ++l) mapped[i] += std::conj(local_us[r](l, i)) * factors[r][l];
      double nrm = vector_norm(mapped);
      for (auto& c : mapped) c /= nrm;
      factors[r] = std::move(mapped);
    }
  }
  return ProductStateTuple(std::move(factors));
}

// ---------------------------------------------------------------------------
// Minkowski path

PnrReport pnr_tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, int resolution) {
  return pnr_tensor_product(std::vector<ComplexMatrix>{a, b}, resolution);
}

PnrReport pnr_tensor_product(const std::vector<ComplexMatrix>& factors, int resolution) {
  if (factors.empty()) throw InvalidArgument("tensor product needs at least one factor");
  PnrReport rep;
  rep.method = PnrMethod::minkowski;
  std::vector<std::vector<Complex>> hulls;
  for (const auto& f : factors) hulls.push_back(numerical_range_boundary(f, 256).hull);
  PlanarRegion acc = PlanarRegion::polygon(hulls[0]);
  for (std::size_t i = 1; i < hulls.size(); ++i)
    acc = minkowski_product(acc, PlanarRegion::polygon(hulls[i]), resolution);
  rep.region = std::move(acc);
  // boundary-curve values are themselves product-state expectation values
  // (products of per-factor boundary Rayleigh quotients); they trace the
  // region boundary exactly, cusps included
  const std::size_t budget = 60000;
  std::vector<Complex> curve{Complex(1.0, 0.0)};
  for (const auto& h : hulls) {
    auto bnd = polygon_boundary_samples(h, 256);
    std::vector<Complex> next;
    next.reserve(curve.size() * bnd.size());
    for (auto a : curve)
      for (auto b : bnd) next.push_back(a * b);
    if (next.size() > budget) {
      std::size_t stride = next.size() / budget + 1;
      std::vector<Complex> sub;
      for (std::size_t s = 0; s < next.size(); s += stride) sub.push_back(next[s]);
      next = std::move(sub);
    }
    curve = std::move(next);
  }
  rep.points = std::move(curve);
  return rep;
}

// ---------------------------------------------------------------------------
// see-saw

PnrExtrema pnr_hermitian_extrema(const ComplexMatrix& x, int n_restarts, std::uint64_t seed) {
  require_product_space(x);
  if (!x.is_hermitian()) throw NotHermitian("see-saw extrema expect a Hermitian operator");
  const auto& dims = x.dims();

  std::vector<ProductStateTuple> inits;
  for (int r = 0; r < n_restarts; ++r)
    inits.push_back(kernels::random_product_state(dims, seed, r));

  // product basis states with extreme diagonal entries
  int n = x.size();
  int arg_min = 0, arg_max = 0;
  for (int i = 0; i < n; ++i) {
    if (x(i, i).real() < x(arg_min, arg_min).real()) arg_min = i;
    if (x(i, i).real() > x(arg_max, arg_max).real()) arg_max = i;
  }
  auto basis_state = [&](int flat) {
    std::vector<std::vector<Complex>> f;
    int rest = flat;
    for (int r = static_cast<int>(dims.size()) - 1; r >= 0; --r) {
      std::vector<Complex> v(dims[r], 0.0);
      v[rest % dims[r]] = 1.0;
      rest /= dims[r];
      f.push_back(std::move(v));
    }
    std::reverse(f.begin(), f.end());
    return ProductStateTuple(std::move(f));
  };
  std::vector<ProductStateTuple> inits_max = inits;
  std::vector<ProductStateTuple> inits_min = inits;
  inits_max.push_back(basis_state(arg_max));
  inits_min.push_back(basis_state(arg_min));

  // bipartite warm starts from the eigen-subspace product-state search
  if (dims.size() == 2 && dims[0] >= 2 && dims[1] >= 2) {
    EigenDecomposition eig = eig_hermitian(x);
    int d = (dims[0] - 1) * (dims[1] - 1) + 1;
    std::vector<std::vector<Complex>> top, bottom;
    for (int i = 0; i < d; ++i) {
      bottom.push_back(eig.eigenvector(i));
      top.push_back(eig.eigenvector(n - 1 - i));
    }
    auto ws_max = find_product_state_in_span(top, dims[0], dims[1], 24, seed ^ 0x517cc1b7ull);
    auto ws_min = find_product_state_in_span(bottom, dims[0], dims[1], 24, seed ^ 0x27220a95ull);
    if (ws_max.found) inits_max.push_back(ws_max.state);
    if (ws_min.found) inits_min.push_back(ws_min.state);
  }

  auto max_runs = kernels::seesaw_batch(x, inits_max, /*maximize=*/true);
  auto min_runs = kernels::seesaw_batch(x, inits_min, /*maximize=*/false);

  PnrExtrema out;
  std::size_t bi = 0;
  for (std::size_t i = 0; i < max_runs.size(); ++i)
    if (max_runs[i].value > max_runs[bi].value) bi = i;
  out.max_value = max_runs[bi].value;
  out.max_witness = max_runs[bi].state;
  bi = 0;
  for (std::size_t i = 0; i < min_runs.size(); ++i)
    if (min_runs[i].value < min_runs[bi].value) bi = i;
  out.min_value = min_runs[bi].value;
  out.min_witness = min_runs[bi].state;
  return out;
}

// ---------------------------------------------------------------------------
// radius

PnrRadius product_numerical_radius(const ComplexMatrix& x, int n_restarts, std::uint64_t seed,
                                   int n_theta) {
  require_product_space(x);
  PnrRadius out;
  if (x.is_hermitian()) {
    PnrExtrema e = pnr_hermitian_extrema(x, std::max(8, n_restarts), seed);
    if (std::abs(e.max_value) >= std::abs(e.min_value)) {
      out.lower = std::abs(e.max_value);
      out.witness = e.max_witness;
    } else {
      out.lower = std::abs(e.min_value);
      out.witness = e.min_witness;
    }
    EigenDecomposition eig = eig_hermitian(x);
    out.upper = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    return out;
  }
  // rotate, maximize the Hermitian part, keep the best achieved modulus
  double best = -1.0;
  for (int t = 0; t < n_theta; ++t) {
    double theta = 2.0 * 3.141592653589793238462643383279 * t / n_theta;
    ComplexMatrix rx = x;
    rx *= std::polar(1.0, -theta);
    ComplexMatrix h = hermitian_part(rx);
    PnrExtrema e = pnr_hermitian_extrema(h, n_restarts, seed + t);
    double attained = std::abs(rayleigh_quotient(x, e.max_witness.assemble()));
    if (attained > best) {
      best = attained;
      out.witness = e.max_witness;
    }
  }
  out.lower = best;
  out.upper = numerical_radius_upper(numerical_range_boundary(x, 256));
  return out;
}

// ---------------------------------------------------------------------------
// barycenter

ProductStateTuple barycenter_witness(const ComplexMatrix& x) {
  require_product_space(x);
  std::vector<std::vector<Complex>> factors_reversed;
  ComplexMatrix y = x;
  while (y.factor_count() > 1) {
    ComplexMatrix reduced = reduce_to_factor(y, y.factor_count() - 1);
    Complex target = y.trace() / static_cast<double>(reduced.size());
    std::vector<Complex> psi;
    try {
      psi = attain_value(reduced, target);
    } catch (const ValueOutsideRange&) {
      throw AttainFailure("barycenter of a reduction fell outside its numerical range");
    }
    factors_reversed.push_back(psi);
    y = contract_last_factor(y, psi);
  }
  factors_reversed.push_back(attain_value(y, y.trace() / static_cast<double>(y.size())));
  std::reverse(factors_reversed.begin(), factors_reversed.end());
  return ProductStateTuple(std::move(factors_reversed));
}

PnrBarycenter barycenter_report(const ComplexMatrix& x) {
  PnrBarycenter out;
  out.witness = barycenter_witness(x);
  out.value = rayleigh_quotient(x, out.witness.assemble());
  return out;
}

// ---------------------------------------------------------------------------
// Schmidt outer bound

PlanarRegion schmidt_outer_bound(const ComplexMatrix& x, int n_terms, int resolution) {
  OperatorSchmidt s = operator_schmidt(x);
  int terms = static_cast<int>(s.coefficients.size());
  if (n_terms > 0) terms = std::min(terms, n_terms);
  if (terms == 0) return PlanarRegion::points({Complex(0.0, 0.0)});

  std::optional<PlanarRegion> acc;
  for (int t = 0; t < terms; ++t) {
    PlanarRegion wa = PlanarRegion::polygon(numerical_range_boundary(s.left[t], 256).hull);
    PlanarRegion wb = PlanarRegion::polygon(numerical_range_boundary(s.right[t], 256).hull);
    PlanarRegion prod = minkowski_product(wa, wb, resolution);
    prod = scale_region(prod, std::sqrt(s.coefficients[t]), resolution);
    if (!acc) {
      acc = std::move(prod);
    } else {
      acc = minkowski_sum(*acc, prod, resolution);
    }
  }
  // multi-term sums get a safety margin to keep the superset guarantee
  if (terms > 1 && acc->is_raster()) acc->mask = dilate(acc->mask, 2.0);
  return *acc;
}

// ---------------------------------------------------------------------------
// projections

std::pair<PnrReport, PnrReport> pnr_projections(const ComplexMatrix& x, int n_restarts,
                                                std::uint64_t seed) {
  require_product_space(x);
  ComplexMatrix h = hermitian_part(x);
  ComplexMatrix s = antihermitian_part(x);
  ComplexMatrix si = s;
  si *= Complex(0.0, -1.0);  // Hermitian generator of S(X) = i * si

  PnrReport rh;
  rh.method = PnrMethod::seesaw;
  rh.extrema = pnr_hermitian_extrema(h, n_restarts, seed);
  PnrReport rs;
  rs.method = PnrMethod::seesaw;
  if (si.frobenius_norm() > 1e-14 * (1.0 + x.frobenius_norm())) {
    rs.extrema = pnr_hermitian_extrema(si, n_restarts, seed + 1);
  } else {
    PnrExtrema zero;
    zero.min_value = zero.max_value = 0.0;
    zero.min_witness = kernels::random_product_state(x.dims(), seed, 0);
    zero.max_witness = zero.min_witness;
    rs.extrema = zero;
  }
  return {std::move(rh), std::move(rs)};
}

// ---------------------------------------------------------------------------
// path interpolation

ProductStateTuple product_state_on_path(const ComplexMatrix& x, const ProductStateTuple& a,
                                        const ProductStateTuple& b, double target, double tol) {
  ProductStateTuple hi = b;
  // align per-factor phases so the interpolation never passes through zero
  for (std::size_t r = 0; r < hi.factors.size(); ++r) {
    Complex ov = inner_product(a.factors[r], hi.factors[r]);
    if (std::abs(ov) > 1e-12) {
      Complex ph = std::conj(ov) / std::abs(ov);
      for (auto& c : hi.factors[r]) c *= ph;
    }
  }
  auto state_at = [&](double t) {
    std::vector<std::vector<Complex>> f(a.factors.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
      f[r].resize(a.factors[r].size());
      for (std::size_t i = 0; i < f[r].size(); ++i)
        f[r][i] = (1.0 - t) * a.factors[r][i] + t * hi.factors[r][i];
      double nrm = vector_norm(f[r]);
      for (auto& c : f[r]) c /= nrm;
    }
    return ProductStateTuple(std::move(f));
  };
  auto value_at = [&](double t) { return rayleigh_quotient(x, state_at(t).assemble()).real(); };

  double v0 = value_at(0.0), v1 = value_at(1.0);
  double lo = 0.0, hi_t = 1.0;
  if ((target - v0) * (target - v1) > 0.0) {
    // target outside the endpoint values; return the closer endpoint
    return std::abs(target - v0) < std::abs(target - v1) ? a : hi;
  }
  bool increasing = v1 > v0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi_t);
    double vm = value_at(mid);
    if (std::abs(vm - target) <= tol) return state_at(mid);
    if ((vm < target) == increasing)
      lo = mid;
    else
      hi_t = mid;
  }
  return state_at(0.5 * (lo + hi_t));
}

}  // namespace prodrange

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prodrange/eig.hpp"
#include "prodrange/hermitian_bounds.hpp"
#include "prodrange/json_io.hpp"
#include "prodrange/kernels.hpp"
#include "prodrange/minkowski.hpp"
#include "prodrange/numerical_range.hpp"
#include "prodrange/product_range.hpp"
#include "prodrange/raster_topology.hpp"
#include "prodrange/rng.hpp"
#include "prodrange/schmidt.hpp"
#include "prodrange/svg.hpp"

namespace fs = std::filesystem;
using namespace prodrange;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output = ".";
  std::string format = "json";
  std::string op = "product";
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t samples = 10000;
  int angles = 256;
  int restarts = 32;
  int grid = 100;
  int resolution = 512;
  int dim_k = 2, dim_m = 2;
  bool check = false;
  std::string figure_name;
};

std::string out_path(const Options& o, const std::string& name) {
  fs::create_directories(o.output);
  return (fs::path(o.output) / name).string();
}

json check_entry(const std::string& name, bool pass, const json& detail = json::object()) {
  json j{{"name", name}, {"pass", pass}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

int finish_checks(const Options& o, const std::string& command, json checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  json out{{"command", command}, {"pass", all}, {"checks", std::move(checks)}};
  std::cout << out.dump(2) << "\n";
  save_json_file(out_path(o, command + "_check.json"), out);
  return all ? 0 : 3;
}

ComplexMatrix random_hermitian_like(const ComplexMatrix& x, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  ComplexMatrix g = ComplexMatrix::zero(x.dims());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) g(i, j) = rng.complex_gauss();
  return hermitian_part(g);
}

// ---------------------------------------------------------------------------

int run_numrange(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  RangeBoundary b = numerical_range_boundary(x, o.angles);
  if (o.check) {
    json checks = json::array();
    double scale = 1.0 + b.scale;
    // every boundary point attains its support line
    double worst = 0.0;
    for (std::size_t i = 0; i < b.points.size(); ++i) {
      Complex dir = std::polar(1.0, -b.theta[i]);
      worst = std::max(worst, std::abs((dir * b.points[i]).real() - b.support[i]));
    }
    checks.push_back(check_entry("boundary-attains-support", worst <= 1e-7 * scale,
                                 {{"maxDefect", worst}}));
    // diagonal entries in any unitary basis stay inside
    bool diag_ok = true;
    for (int t = 0; t < 8; ++t) {
      ComplexMatrix u = haar_unitary(x.size(), 99, t);
      ComplexMatrix y = (u * x) * u.adjoint();
      for (int i = 0; i < y.size(); ++i)
        try {
          if (contains(b, y(i, i), 1e-6 * scale) == Membership::outside) diag_ok = false;
        } catch (const DegenerateBoundary&) {
        }
    }
    checks.push_back(check_entry("diagonal-entries-inside", diag_ok));
    // translation covariance of the hull
    Complex alpha(0.375, -0.25);
    RangeBoundary bt = numerical_range_boundary(x + alpha * ComplexMatrix::identity(x.dims()),
                                                o.angles);
    double hd = 0.0;
    for (auto p : bt.hull) {
      double dmin = 1e300;
      for (auto q : b.hull) dmin = std::min(dmin, std::abs(p - (q + alpha)));
      hd = std::max(hd, dmin);
    }
    checks.push_back(check_entry("translation-covariance", hd <= 1e-6 * scale, {{"defect", hd}}));
    return finish_checks(o, "numrange", checks);
  }
  if (o.format == "csv") {
    save_boundary_csv(out_path(o, "numrange.csv"), b);
  } else if (o.format == "svg") {
    SvgPlot plot;
    plot.add_polyline(b.hull, "#444444", true);
    plot.add_points(b.points, "#1f77b4", 1.5);
    plot.write(out_path(o, "numrange.svg"));
  } else {
    save_json_file(out_path(o, "numrange.json"), boundary_to_json(b));
  }
  return 0;
}

int run_pnr_sample(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  if (o.check) {
    json checks = json::array();
    auto cloud = kernels::sample_rayleigh(x, o.seed, std::min<std::size_t>(o.samples, 5000));
    Complex alpha(0.21, -0.13);
    auto cloud_t = kernels::sample_rayleigh(
        x + alpha * ComplexMatrix::identity(x.dims()), o.seed, cloud.size());
    double terr = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
      terr = std::max(terr, std::abs(cloud_t[i] - (cloud[i] + alpha)));
    double scale = 1.0 + x.frobenius_norm();
    checks.push_back(check_entry("translation-covariance", terr <= 1e-12 * scale,
                                 {{"maxDefect", terr}}));
    ComplexMatrix sx = x;
    sx *= Complex(0.0, 2.0);
    auto cloud_s = kernels::sample_rayleigh(sx, o.seed, cloud.size());
    double serr = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
      serr = std::max(serr, std::abs(cloud_s[i] - Complex(0.0, 2.0) * cloud[i]));
    checks.push_back(check_entry("scalar-covariance", serr <= 1e-12 * scale,
                                 {{"maxDefect", serr}}));
    RangeBoundary b = numerical_range_boundary(x, 128);
    bool inside = true;
    for (auto z : cloud)
      try {
        if (contains(b, z, 1e-7 * scale) == Membership::outside) inside = false;
      } catch (const DegenerateBoundary&) {
        inside = false;
      }
    checks.push_back(check_entry("cloud-inside-numerical-range", inside));
    return finish_checks(o, "pnr-sample", checks);
  }
  PnrReport rep = pnr_sample(x, o.samples, o.seed);
  if (o.format == "csv") {
    save_points_csv(out_path(o, "pnr_sample.csv"), rep.points);
  } else if (o.format == "svg") {
    SvgPlot plot;
    plot.add_points(rep.points, "#1f77b4", 1.0);
    plot.add_polyline(numerical_range_boundary(x, 256).hull, "#444444", true);
    plot.write(out_path(o, "pnr_sample.svg"));
  } else {
    save_json_file(out_path(o, "pnr_sample.json"), report_to_json(rep));
  }
  return 0;
}

int run_pnr_param(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  std::vector<ComplexMatrix> us;
  for (std::size_t i = 1; i < o.inputs.size(); ++i) us.push_back(load_matrix(o.inputs[i]));
  PnrReport rep = pnr_parametrized(x, us, o.grid);
  if (o.check) {
    json checks = json::array();
    // regenerated witnesses reproduce their cloud points
    double worst = 0.0;
    std::size_t stride = std::max<std::size_t>(1, rep.points.size() / 64);
    for (std::size_t i = 0; i < rep.points.size(); i += stride) {
      ProductStateTuple st = simplex_state(x.dims(), o.grid, i, us);
      worst = std::max(worst, std::abs(rayleigh_quotient(x, st.assemble()) - rep.points[i]));
    }
    double scale = 1.0 + x.frobenius_norm();
    checks.push_back(
        check_entry("witness-consistency", worst <= 1e-10 * scale, {{"maxDefect", worst}}));
    return finish_checks(o, "pnr-param", checks);
  }
  if (o.format == "csv") {
    save_points_csv(out_path(o, "pnr_param.csv"), rep.points);
  } else if (o.format == "svg") {
    SvgPlot plot;
    plot.add_points(rep.points, "#1f77b4", 0.8);
    plot.add_polyline(numerical_range_boundary(x, 256).hull, "#444444", true);
    plot.write(out_path(o, "pnr_param.svg"));
  } else {
    save_json_file(out_path(o, "pnr_param.json"), report_to_json(rep));
  }
  return 0;
}

int run_pnr_seesaw(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  PnrExtrema e = pnr_hermitian_extrema(x, o.restarts, o.seed);
  if (o.check) {
    json checks = json::array();
    EigenDecomposition eig = eig_hermitian(x);
    bool in_spec = e.min_value >= eig.eigenvalues.front() - 1e-8 &&
                   e.max_value <= eig.eigenvalues.back() + 1e-8 && e.min_value <= e.max_value;
    checks.push_back(check_entry("interval-inside-spectrum", in_spec));
    if (x.dims().size() == 2 && x.dims()[0] >= 2 && x.dims()[1] >= 2) {
      SpectralBoundReport br = bound_report(x, o.restarts, o.seed);
      checks.push_back(check_entry(
          "index-bounds", e.max_value >= br.bound_low - 1e-8 && e.min_value <= br.bound_high + 1e-8,
          {{"boundLow", br.bound_low}, {"boundHigh", br.bound_high}}));
    }
    return finish_checks(o, "pnr-seesaw", checks);
  }
  PnrReport rep;
  rep.method = PnrMethod::seesaw;
  rep.extrema = e;
  save_json_file(out_path(o, "pnr_seesaw.json"), report_to_json(rep));
  return 0;
}

int run_pnr_tensor(const Options& o) {
  std::vector<ComplexMatrix> factors;
  for (const auto& p : o.inputs) factors.push_back(load_matrix(p));
  if (factors.size() < 2) throw InvalidArgument("pnr-tensor needs at least two inputs");
  PnrReport rep = pnr_tensor_product(factors, o.resolution);
  if (o.check) {
    json checks = json::array();
    ComplexMatrix full = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) full = kron(full, factors[i]);
    auto cloud = kernels::sample_rayleigh(full, o.seed, 20000);
    RasterMask region = region_to_mask(*rep.region, o.resolution);
    RasterMask cm = rasterize(cloud, 256);
    double hd = hausdorff(region, cm);
    double diam = std::max(region.width, region.height) * region.cell;
    checks.push_back(check_entry("matches-sampled-cloud", hd <= 0.04 * diam,
                                 {{"hausdorff", hd}, {"diameter", diam}}));
    return finish_checks(o, "pnr-tensor", checks);
  }
  save_json_file(out_path(o, "pnr_tensor.json"), report_to_json(rep));
  if (o.format == "svg") {
    SvgPlot plot;
    plot.add_points(region_to_mask(*rep.region, o.resolution).boundary_centers(), "#1f77b4", 1.0);
    plot.write(out_path(o, "pnr_tensor.svg"));
  }
  return 0;
}

int run_minkowski(const Options& o) {
  PlanarRegion a = load_region(o.inputs.at(0));
  PlanarRegion b = load_region(o.inputs.at(1));
  bool sum = o.op == "sum";
  PlanarRegion r = sum ? minkowski_sum(a, b, o.resolution) : minkowski_product(a, b, o.resolution);
  if (o.check) {
    json checks = json::array();
    PlanarRegion r2 =
        sum ? minkowski_sum(b, a, o.resolution) : minkowski_product(b, a, o.resolution);
    double hd = hausdorff(region_to_mask(r, o.resolution), region_to_mask(r2, o.resolution));
    RasterMask rm = region_to_mask(r, o.resolution);
    checks.push_back(
        check_entry("commutativity", hd <= 4.0 * rm.cell, {{"hausdorff", hd}}));
    // containment of sampled pairwise results
    auto sample_of = [&](const PlanarRegion& z, std::uint64_t stream) {
      std::vector<Complex> out;
      CounterRng rng(o.seed, stream);
      if (z.is_polygon()) {
        auto bs = polygon_boundary_samples(z.pts, 64);
        auto is = polygon_interior_samples(z.pts, 8);
        out = bs;
        out.insert(out.end(), is.begin(), is.end());
      } else if (z.is_points()) {
        for (int i = 0; i < 100 && i < static_cast<int>(z.pts.size()); ++i)
          out.push_back(z.pts[static_cast<std::size_t>(rng.uniform() * z.pts.size())]);
      } else {
        auto cs = z.mask.on_centers();
        for (int i = 0; i < 100 && i < static_cast<int>(cs.size()); ++i)
          out.push_back(cs[static_cast<std::size_t>(rng.uniform() * cs.size())]);
      }
      return out;
    };
    bool contained = true;
    for (auto za : sample_of(a, 1))
      for (auto zb : sample_of(b, 2))
        if (!rm.contains_point(sum ? za + zb : za * zb, 2)) contained = false;
    checks.push_back(check_entry("contains-pairwise-samples", contained));
    return finish_checks(o, "minkowski", checks);
  }
  save_region(out_path(o, "minkowski.json"), r);
  if (r.is_raster()) save_mask_pbm(out_path(o, "minkowski"), r.mask);
  return 0;
}

int run_schmidt(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  OperatorSchmidt s = operator_schmidt(x);
  if (o.check) {
    json checks = json::array();
    ComplexMatrix rec = s.reconstruct(x.dims());
    rec -= x;
    double err = rec.frobenius_norm();
    checks.push_back(check_entry("reconstruction", err <= 1e-10 * (1 + x.frobenius_norm()),
                                 {{"error", err}}));
    double musum = 0.0;
    for (double m : s.coefficients) musum += m;
    double hs2 = x.frobenius_norm() * x.frobenius_norm();
    checks.push_back(check_entry("coefficient-sum", std::abs(musum - hs2) <= 1e-8 * (1 + hs2),
                                 {{"sumMu", musum}, {"hs2", hs2}}));
    double ortho = 0.0;
    for (std::size_t i = 0; i < s.left.size(); ++i)
      for (std::size_t j = 0; j < s.left.size(); ++j) {
        Complex ip = (s.left[i].adjoint() * s.left[j]).trace();
        ortho = std::max(ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
    checks.push_back(check_entry("left-orthonormal", ortho <= 1e-8, {{"defect", ortho}}));
    return finish_checks(o, "schmidt", checks);
  }
  json terms = json::array();
  for (std::size_t t = 0; t < s.coefficients.size(); ++t)
    terms.push_back(json{{"mu", s.coefficients[t]},
                         {"left", matrix_to_json(s.left[t])},
                         {"right", matrix_to_json(s.right[t])}});
  save_json_file(out_path(o, "schmidt.json"), json{{"terms", std::move(terms)}});
  PlanarRegion bound = schmidt_outer_bound(x, 0, o.resolution);
  save_region(out_path(o, "schmidt_outer_bound.json"), bound);
  return 0;
}

int run_barycenter(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  PnrBarycenter bc = barycenter_report(x);
  Complex target = x.trace() / static_cast<double>(x.size());
  if (o.check) {
    json checks = json::array();
    double err = std::abs(bc.value - target);
    checks.push_back(check_entry("value-matches-trace-mean",
                                 err <= 1e-7 * (1 + x.frobenius_norm()), {{"error", err}}));
    return finish_checks(o, "barycenter", checks);
  }
  save_json_file(out_path(o, "barycenter.json"),
                 json{{"target", json::array({target.real(), target.imag()})},
                      {"value", json::array({bc.value.real(), bc.value.imag()})},
                      {"witness", state_to_json(bc.witness)}});
  return 0;
}

int run_bounds(const Options& o) {
  ComplexMatrix x = load_matrix(o.inputs.at(0));
  SpectralBoundReport rep = bound_report(x, o.restarts, o.seed);
  if (o.check) {
    json checks = json::array();
    checks.push_back(check_entry("seesaw-vs-bounds",
                                 rep.seesaw.max_value >= rep.bound_low - 1e-8 &&
                                     rep.seesaw.min_value <= rep.bound_high + 1e-8));
    bool wit_ok = true;
    if (rep.max_side.found)
      wit_ok = wit_ok && rep.max_witness_value >= rep.bound_low - 1e-8 &&
               rep.max_side.span_residual <= 1e-8;
    if (rep.min_side.found)
      wit_ok = wit_ok && rep.min_witness_value <= rep.bound_high + 1e-8 &&
               rep.min_side.span_residual <= 1e-8;
    checks.push_back(check_entry("witnesses", wit_ok));
    return finish_checks(o, "bounds", checks);
  }
  save_json_file(out_path(o, "bounds.json"), bound_report_to_json(rep));
  return 0;
}

int run_entangled_subspace(const Options& o) {
  EntangledSubspace sub = entangled_subspace(o.dim_k, o.dim_m);
  if (o.check) {
    json checks = json::array();
    double ortho = 0.0;
    for (std::size_t i = 0; i < sub.basis.size(); ++i)
      for (std::size_t j = 0; j < sub.basis.size(); ++j)
        ortho = std::max(ortho, std::abs(inner_product(sub.basis[i], sub.basis[j]) -
                                         Complex(i == j ? 1.0 : 0.0)));
    checks.push_back(check_entry("orthonormal", ortho <= 1e-12, {{"defect", ortho}}));
    // random combinations stay far from rank one
    double min_mu2 = 1.0;
    for (int t = 0; t < 2000; ++t) {
      CounterRng rng(o.seed, t);
      auto c = rng.unit_vector(static_cast<int>(sub.basis.size()));
      std::vector<Complex> psi(sub.basis[0].size(), 0.0);
      for (std::size_t i = 0; i < sub.basis.size(); ++i)
        for (std::size_t k = 0; k < psi.size(); ++k) psi[k] += c[i] * sub.basis[i][k];
      double nrm = vector_norm(psi);
      for (auto& v : psi) v /= nrm;
      StateSchmidt s = pure_schmidt(psi, o.dim_k, o.dim_m);
      if (s.coefficients.size() > 1) min_mu2 = std::min(min_mu2, s.coefficients[1]);
    }
    checks.push_back(check_entry("no-rank-one-combination-found", min_mu2 > 1e-4,
                                 {{"minMu2", min_mu2}}));
    return finish_checks(o, "entangled-subspace", checks);
  }
  json basis = json::array();
  for (const auto& v : sub.basis) {
    json vj = json::array();
    for (auto c : v) vj.push_back(json::array({c.real(), c.imag()}));
    basis.push_back(std::move(vj));
  }
  save_json_file(out_path(o, "entangled_subspace.json"),
                 json{{"K", o.dim_k}, {"M", o.dim_m}, {"basis", std::move(basis)}});
  return 0;
}

int run_topology(const Options& o) {
  PlanarRegion r = load_region(o.inputs.at(0));
  RasterMask m = region_to_mask(r, o.resolution);
  RegionTopology t = topology(m);
  if (o.check) {
    json checks = json::array();
    RasterMask half = region_to_mask(r, o.resolution / 2);
    RegionTopology t2 = topology(half);
    checks.push_back(check_entry("resolution-stability",
                                 t.genus == t2.genus && t.components == t2.components,
                                 {{"fullGenus", t.genus}, {"halfGenus", t2.genus}}));
    int holes = 0;
    for (auto [c, g] : t.per_component_genus) holes += g;
    checks.push_back(check_entry("euler-consistency",
                                 t.euler_characteristic == t.components - holes,
                                 {{"chi", t.euler_characteristic}}));
    return finish_checks(o, "topology", checks);
  }
  save_json_file(out_path(o, "topology.json"), topology_to_json(t));
  return 0;
}

ComplexMatrix figure_matrix(const std::string& name) {
  const Complex i(0.0, 1.0);
  if (name == "fig1") return ComplexMatrix::diag({1.0, 0.0, 0.0, i}, {2, 2});
  if (name == "fig2a" || name == "fig2b" || name == "fig2c") {
    double r1 = name == "fig2a" ? 1.0 : (name == "fig2b" ? 0.7 : 0.5);
    double r2 = name == "fig2c" ? 1.2 : 1.0;
    ComplexMatrix x1({2}, {1.0, 2 * r1, 0.0, 1.0});
    ComplexMatrix x2({2}, {1.0, 2 * r2, 0.0, 1.0});
    return kron(x1, x2);
  }
  Complex w = std::polar(1.0, 2.0 * 3.141592653589793238462643383279 / 3.0);
  Complex wc = std::conj(w);
  if (name == "fig3a")
    return ComplexMatrix::diag({1.0, w, w, wc, w, wc, wc, 1.0}, {2, 2, 2});
  if (name == "fig3b")
    return ComplexMatrix::diag({1.0, w, w, w, wc, wc, wc, 1.0}, {2, 2, 2});
  if (name == "fig4") {
    auto e = [](double num) { return std::polar(1.0, num * 3.141592653589793238462643383279 / 4.0); };
    return ComplexMatrix::diag(
        {e(1), e(2), e(2), e(3), e(4), e(-3), e(-1), e(0), e(4), e(-1), e(-3), e(0), e(3), e(-2),
         e(-2), e(1)},
        {2, 2, 2, 2});
  }
  throw InvalidArgument("unknown figure: " + name +
                        " (expected fig1, fig2a, fig2b, fig2c, fig3a, fig3b, fig4)");
}

int run_figure(const Options& o) {
  std::string name = o.figure_name;
  ComplexMatrix x = figure_matrix(name);
  save_matrix(out_path(o, name + "_matrix.json"), x);

  EigenDecomposition spec_marks = [&]() {
    // diagonal or upper-triangular figure matrices: eigenvalue markers come
    // from the Hermitian spectra only when available; fall back to diagonal
    ComplexMatrix h = hermitian_part(x);
    return eig_hermitian(h);
  }();
  std::vector<Complex> diag_marks;
  for (int d = 0; d < x.size(); ++d) diag_marks.push_back(x(d, d));
  (void)spec_marks;

  SvgPlot plot;
  RasterMask mask;
  if (name == "fig2a" || name == "fig2b" || name == "fig2c") {
    // tensor-product path through the Minkowski product
    ComplexMatrix x1 = ComplexMatrix::zero({2}), x2 = ComplexMatrix::zero({2});
    double r1 = name == "fig2a" ? 1.0 : (name == "fig2b" ? 0.7 : 0.5);
    double r2 = name == "fig2c" ? 1.2 : 1.0;
    x1 = ComplexMatrix({2}, {1.0, 2 * r1, 0.0, 1.0});
    x2 = ComplexMatrix({2}, {1.0, 2 * r2, 0.0, 1.0});
    PnrReport rep = pnr_tensor_product(x1, x2, o.resolution);
    mask = region_to_mask(*rep.region, o.resolution);
    plot.add_points(mask.boundary_centers(), "#1f77b4", 1.2);
  } else {
    int grid = o.grid;
    if (name == "fig4") grid = std::min(grid, 48);
    if (name == "fig3a" || name == "fig3b") grid = std::max(grid, 200);
    PnrReport rep = pnr_parametrized(x, {}, grid, /*warp_edges=*/true);
    mask = rasterize(rep.points, o.resolution);
    plot.add_points(rep.points, "#9ecae1", 0.7);
    plot.add_points(mask.boundary_centers(), "#1f77b4", 1.0);
  }
  RegionTopology topo = topology(mask);
  save_json_file(out_path(o, name + "_topology.json"), topology_to_json(topo));
  save_mask_pbm(out_path(o, name + "_mask"), mask);

  plot.add_polyline(numerical_range_boundary(x, 256).hull, "#444444", true);
  plot.add_markers(diag_marks, "#d62728", 4.0);
  plot.write(out_path(o, name + ".svg"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product numerical range toolkit"};
  app.require_subcommand(1);

  Options o;
  if (const char* env = std::getenv("PRODRANGE_THREADS")) o.threads = std::atoi(env);
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("--input,-i", o.inputs, "input file(s)")->required()->expected(-1);
    sub->add_option("--output,-o", o.output, "output directory");
    sub->add_option("--format", o.format, "json|csv|svg");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--samples", o.samples, "sample count");
    sub->add_option("--angles", o.angles, "support sweep angles");
    sub->add_option("--restarts", o.restarts, "see-saw restarts");
    sub->add_option("--grid", o.grid, "simplex grid per factor");
    sub->add_option("--resolution", o.resolution, "raster resolution");
    sub->add_flag("--check", o.check, "run the module invariant suite on the input");
  };

  auto* numrange = app.add_subcommand("numrange", "numerical range boundary");
  add_common(numrange, true);
  auto* pnr_sample_cmd = app.add_subcommand("pnr-sample", "sampled product numerical range");
  add_common(pnr_sample_cmd, true);
  auto* pnr_param = app.add_subcommand("pnr-param", "parametrized product numerical range");
  add_common(pnr_param, true);
  auto* pnr_seesaw = app.add_subcommand("pnr-seesaw", "Hermitian see-saw extrema");
  add_common(pnr_seesaw, true);
  auto* pnr_tensor = app.add_subcommand("pnr-tensor", "tensor product via Minkowski product");
  add_common(pnr_tensor, true);
  auto* minkowski_cmd = app.add_subcommand("minkowski", "Minkowski sum/product of regions");
  add_common(minkowski_cmd, true);
  minkowski_cmd->add_option("--op", o.op, "sum|product");
  auto* schmidt_cmd = app.add_subcommand("schmidt", "operator Schmidt decomposition + outer bound");
  add_common(schmidt_cmd, true);
  auto* barycenter_cmd = app.add_subcommand("barycenter", "barycenter witness");
  add_common(barycenter_cmd, true);
  auto* bounds_cmd = app.add_subcommand("bounds", "Hermitian eigenvalue-index bounds");
  add_common(bounds_cmd, true);
  auto* entsub = app.add_subcommand("entangled-subspace", "completely entangled subspace");
  add_common(entsub, false);
  entsub->add_option("--K", o.dim_k, "first factor dimension");
  entsub->add_option("--M", o.dim_m, "second factor dimension");
  auto* topology_cmd = app.add_subcommand("topology", "raster topology of a region");
  add_common(topology_cmd, true);
  auto* figure_cmd = app.add_subcommand("figure", "reproduce a named figure");
  figure_cmd->add_option("name", o.figure_name, "fig1|fig2a|fig2b|fig2c|fig3a|fig3b|fig4")
      ->required();
  add_common(figure_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    json err{{"error", {{"type", "ParseError"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  kernels::set_max_threads(o.threads);
  try {
    if (numrange->parsed()) return run_numrange(o);
    if (pnr_sample_cmd->parsed()) return run_pnr_sample(o);
    if (pnr_param->parsed()) return run_pnr_param(o);
    if (pnr_seesaw->parsed()) return run_pnr_seesaw(o);
    if (pnr_tensor->parsed()) return run_pnr_tensor(o);
    if (minkowski_cmd->parsed()) return run_minkowski(o);
    if (schmidt_cmd->parsed()) return run_schmidt(o);
    if (barycenter_cmd->parsed()) return run_barycenter(o);
    if (bounds_cmd->parsed()) return run_bounds(o);
    if (entsub->parsed()) return run_entangled_subspace(o);
    if (topology_cmd->parsed()) return run_topology(o);
    if (figure_cmd->parsed()) return run_figure(o);
  } catch (const ParseError& e) {
    json err{{"error", {{"type", "ParseError"}, {"path", e.path}, {"message", e.detail}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    json err{{"error", {{"type", "NumericError"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    json err{{"error", {{"type", "InternalError"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  }
  return 0;
}

#include <doctest.h>

#include <cmath>

#include "prodrange/kernels.hpp"
#include "prodrange/minkowski.hpp"
#include "prodrange/numerical_range.hpp"
#include "prodrange/tensor_ops.hpp"
#include "test_util.hpp"

using namespace prodrange;
using namespace prodrange::testing;

TEST_CASE("sum with the origin is the identity") {
  PlanarRegion z = PlanarRegion::polygon({{0, 0}, {1, 0}, {1, 1}});
  PlanarRegion r = minkowski_sum(z, PlanarRegion::points({{0, 0}}));
  REQUIRE(r.is_polygon());
  REQUIRE(r.pts.size() == z.pts.size());
  for (std::size_t i = 0; i < z.pts.size(); ++i) CHECK(std::abs(r.pts[i] - z.pts[i]) == 0.0);
}

TEST_CASE("interval sum gives the unit square") {
  PlanarRegion a = PlanarRegion::polygon({{0, 0}, {1, 0}});
  PlanarRegion b = PlanarRegion::polygon({{0, 0}, {0, 1}});
  PlanarRegion r = minkowski_sum(a, b);
  REQUIRE(r.is_polygon());
  REQUIRE(r.pts.size() == 4);
  for (Complex v : {Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 1)}) {
    double best = 1e300;
    for (auto p : r.pts) best = std::min(best, std::abs(p - v));
    CHECK(best == 0.0);
  }
}

TEST_CASE("sum of numerical ranges matches the Kronecker-sum product range") {
  for (int trial = 0; trial < 4; ++trial) {
    ComplexMatrix a = random_matrix({2}, 400, trial);
    ComplexMatrix b = random_matrix({2}, 401, trial);
    PlanarRegion wa = PlanarRegion::polygon(numerical_range_boundary(a, 256).hull);
    PlanarRegion wb = PlanarRegion::polygon(numerical_range_boundary(b, 256).hull);
    PlanarRegion sum = minkowski_sum(wa, wb);
    REQUIRE(sum.is_polygon());
    RasterMask sum_mask = region_to_mask(sum, 384);
    auto cloud = kernels::sample_rayleigh(kron_sum(a, b), 402 + trial, 30000);
    RasterMask cloud_mask = rasterize(cloud, 256);
    double diam = std::hypot(sum_mask.width * sum_mask.cell, sum_mask.height * sum_mask.cell);
    CHECK(hausdorff(sum_mask, cloud_mask) <= 0.02 * diam);
  }
}

TEST_CASE("product with one is the identity") {
  PlanarRegion z = PlanarRegion::polygon({{1, 0}, {2, 0}, {2, 1}});
  PlanarRegion r = minkowski_product(z, PlanarRegion::points({{1, 0}}));
  REQUIRE(r.is_polygon());
  for (std::size_t i = 0; i < z.pts.size(); ++i) CHECK(std::abs(r.pts[i] - z.pts[i]) <= 1e-15);
}

TEST_CASE("disc products: cardioid and Cartesian oval") {
  PlanarRegion d11 = PlanarRegion::polygon(disc_polygon(1.0, 1.0, 512));
  PlanarRegion cardioid = minkowski_product(d11, d11, 512);
  REQUIRE(cardioid.is_raster());
  double maxmod = 0.0;
  for (auto z : cardioid.mask.on_centers()) maxmod = std::max(maxmod, std::abs(z));
  CHECK(maxmod == doctest::Approx(4.0).epsilon(0.01));
  auto topo = topology(cardioid.mask);
  CHECK(topo.genus == 0);
  // cusp: the origin cell is occupied (0 = 0 * z is attained)
  CHECK(cardioid.mask.contains_point(Complex(0, 0), 1));

  // Cartesian oval versus an analytic polar-support oracle: the radius-1.2
  // disc contains 0, so the product is star-shaped about the origin and is
  // exactly { rho <= M(phi) } with M the maximized product of disc supports
  PlanarRegion da = PlanarRegion::polygon(disc_polygon(1.0, 0.5, 512));
  PlanarRegion db = PlanarRegion::polygon(disc_polygon(1.0, 1.2, 512));
  PlanarRegion oval = minkowski_product(da, db, 512);
  REQUIRE(oval.is_raster());
  auto disc_reach = [](double r, double theta) {
    double s = std::sin(theta);
    if (r < 1.0 && std::abs(s) > r) return 0.0;
    double d = r * r - s * s;
    return std::max(0.0, std::cos(theta) + std::sqrt(std::max(0.0, d)));
  };
  const int nphi = 4096, ntheta = 4096;
  std::vector<double> reach(nphi, 0.0);
  for (int i = 0; i < nphi; ++i) {
    double phi = -3.141592653589793 + 6.283185307179586 * i / nphi;
    double best = 0.0;
    for (int t = 0; t < ntheta; ++t) {
      double th1 = -3.141592653589793 + 6.283185307179586 * t / ntheta;
      best = std::max(best, disc_reach(0.5, th1) * disc_reach(1.2, phi - th1));
    }
    reach[i] = best;
  }
  RasterMask oracle(oval.mask.origin, oval.mask.cell, oval.mask.width, oval.mask.height);
  for (int i = 0; i < oracle.height; ++i)
    for (int j = 0; j < oracle.width; ++j) {
      Complex z = oracle.center(i, j);
      double phi = std::arg(z);
      int bin = static_cast<int>((phi + 3.141592653589793) / 6.283185307179586 * nphi);
      bin = std::min(nphi - 1, std::max(0, bin));
      if (std::abs(z) <= reach[bin]) oracle.set(i, j);
    }
  CHECK(mask_iou(oval.mask, oracle) >= 0.97);
}

TEST_CASE("log-polar ribbon of a point is neutral") {
  LogPolarRibbon one = to_ribbon({{1.0, 0.0}});
  CHECK(one.phi_max == doctest::Approx(0.0));
  for (double r : one.r_plus) CHECK(r == doctest::Approx(0.0).epsilon(1e-12));

  LogPolarRibbon other = to_ribbon(disc_polygon(3.0, 1.0, 1024));
  LogPolarRibbon prod = log_polar_product(other, one);
  CHECK(prod.phi_max == doctest::Approx(other.phi_max).epsilon(1e-12));
  for (int i = 0; i < 32; ++i) {
    double xi = other.phi_max * i / 31.0;
    CHECK(prod.r_hi(xi) == doctest::Approx(other.r_hi(xi)).epsilon(1e-6));
    CHECK(prod.r_lo(xi) == doctest::Approx(other.r_lo(xi)).epsilon(1e-6));
  }
}

TEST_CASE("segments on rays multiply onto the summed ray") {
  double a = 0.4, b = 0.9;
  LogPolarRibbon ra = to_ribbon({std::polar(1.0, a), std::polar(2.0, a)});
  LogPolarRibbon rb = to_ribbon({std::polar(0.5, b), std::polar(1.5, b)});
  CHECK(ra.phi_max == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ra.rotation == doctest::Approx(a).epsilon(1e-12));
  LogPolarRibbon prod = log_polar_product(ra, rb);
  CHECK(prod.phi_max == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(prod.rotation == doctest::Approx(a + b).epsilon(1e-12));
  CHECK(std::exp(prod.r_lo(0.0)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::exp(prod.r_hi(0.0)) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("ribbon product of two discs matches the raster-path mask") {
  // centers 1, radii 0.7 and 1; the second touches the origin, so its ribbon
  // needs the boundary-zero clamp and the dispatcher's raster fallback is the
  // independent second route
  LogPolarRibbon r1 = to_ribbon(disc_polygon(1.0, 0.7, 2048));
  LogPolarRibbon r2 = to_ribbon(disc_polygon(1.0, 1.0, 2048), 1025, /*allow_boundary_zero=*/true);
  RasterMask ribbon_mask = ribbon_to_mask(log_polar_product(r1, r2), 512);

  PlanarRegion raster_route =
      minkowski_product(PlanarRegion::polygon(disc_polygon(1.0, 0.7, 2048)),
                        PlanarRegion::polygon(disc_polygon(1.0, 1.0, 2048)), 512);
  REQUIRE(raster_route.is_raster());
  CHECK(mask_iou(ribbon_mask, raster_route.mask) >= 0.98);
  CHECK(hausdorff(ribbon_mask, raster_route.mask) <= 2.5 * ribbon_mask.cell);
}

TEST_CASE("to_ribbon of an off-center disc against tangent-line geometry") {
  LogPolarRibbon r = to_ribbon(disc_polygon(2.0, 1.0, 4096));
  double half = std::asin(0.5);  // pi/6
  CHECK(r.rotation == doctest::Approx(-half).epsilon(1e-3));
  CHECK(r.phi_max == doctest::Approx(2 * half).epsilon(1e-3));
  for (int i = 1; i < 31; ++i) {
    double xi = r.phi_max * i / 31.0;
    double psi = xi + r.rotation;  // absolute ray angle
    double disc = 1.0 - 4.0 * std::sin(psi) * std::sin(psi);
    if (disc <= 1e-6) continue;
    double lo = 2.0 * std::cos(psi) - std::sqrt(disc);
    double hi = 2.0 * std::cos(psi) + std::sqrt(disc);
    CHECK(std::exp(r.r_lo(xi)) == doctest::Approx(lo).epsilon(1e-3));
    CHECK(std::exp(r.r_hi(xi)) == doctest::Approx(hi).epsilon(1e-3));
  }
}

TEST_CASE("to_ribbon of a real segment") {
  LogPolarRibbon r = to_ribbon({{1.0, 0.0}, {2.0, 0.0}});
  CHECK(r.phi_max == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.r_lo(0.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.r_hi(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("to_ribbon rejects regions containing the origin") {
  CHECK_THROWS_AS(to_ribbon(disc_polygon(0.5, 1.0, 256)), ContainsZero);
  // boundary zero without the clamp flag also rejects
  CHECK_THROWS_AS(to_ribbon(disc_polygon(1.0, 1.0, 256)), ContainsZero);
}

TEST_CASE("raster sum and product commute") {
  PlanarRegion a = PlanarRegion::raster(rasterize(disc_polygon(1.0, 0.4, 200), 128, 2.0));
  PlanarRegion b = PlanarRegion::raster(
      rasterize({{0.2, 0.1}, {0.9, 0.0}, {0.5, 0.6}, {0.4, 0.3}, {0.6, 0.2}}, 64, 4.0));
  for (auto op : {kernels::PairOp::sum, kernels::PairOp::product}) {
    PlanarRegion ab = op == kernels::PairOp::sum ? minkowski_sum(a, b, 256)
                                                 : minkowski_product(a, b, 256);
    PlanarRegion ba = op == kernels::PairOp::sum ? minkowski_sum(b, a, 256)
                                                 : minkowski_product(b, a, 256);
    RasterMask ma = region_to_mask(ab, 256), mb = region_to_mask(ba, 256);
    CHECK(hausdorff(ma, mb) <= 3.0 * std::max(ma.cell, mb.cell));
  }
}

TEST_CASE("product with zero inside a factor is star-shaped about the origin") {
  PlanarRegion z1 = PlanarRegion::polygon(disc_polygon(0.2, 0.6, 128));  // contains 0
  PlanarRegion z2 = PlanarRegion::polygon(disc_polygon(1.5, 0.5, 128));
  PlanarRegion prod = minkowski_product(z1, z2, 384);
  REQUIRE(prod.is_raster());
  const RasterMask& m = prod.mask;
  // ray-membership monotonicity: along each ray from 0, once the mask turns
  // off it stays off (2-cell slack)
  for (int t = 0; t < 360; ++t) {
    double ang = 6.283185307179586 * t / 360.0;
    double rmax = std::max(m.width, m.height) * m.cell;
    bool seen_off = false;
    int violations = 0;
    for (double r = 0.0; r < rmax; r += 0.5 * m.cell) {
      bool on = m.contains_point(std::polar(r, ang), 1);
      if (!on && m.contains_point(std::polar(r, ang), 3)) continue;  // edge fuzz
      if (!on) seen_off = true;
      if (on && seen_off) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("random convex products are simply connected") {
  for (int trial = 0; trial < 10; ++trial) {
    CounterRng rng(430, trial);
    auto rand_poly = [&]() {
      std::vector<Complex> pts;
      for (int i = 0; i < 8; ++i) pts.push_back(rng.complex_gauss());
      return convex_hull(pts);
    };
    PlanarRegion a = PlanarRegion::polygon(rand_poly());
    PlanarRegion b = PlanarRegion::polygon(rand_poly());
    PlanarRegion prod = minkowski_product(a, b, 384);
    auto topo = topology(region_to_mask(prod, 384));
    CHECK(topo.genus == 0);
  }
}

TEST_CASE("products contain all pairwise samples") {
  CounterRng rng(440, 0);
  PlanarRegion a = PlanarRegion::polygon(convex_hull(
      {rng.complex_gauss(), rng.complex_gauss(), rng.complex_gauss(), rng.complex_gauss(),
       rng.complex_gauss()}));
  PlanarRegion b = PlanarRegion::polygon(disc_polygon(Complex(0.5, 0.5), 0.8, 64));
  PlanarRegion prod = minkowski_product(a, b, 512);
  const RasterMask& m = region_to_mask(prod, 512);
  auto sample_in = [&](const std::vector<Complex>& poly, CounterRng& g) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (auto p : poly) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
    while (true) {
      Complex z(xmin + (xmax - xmin) * g.uniform(), ymin + (ymax - ymin) * g.uniform());
      if (polygon_contains(poly, z, 0.0)) return z;
    }
  };
  int misses = 0;
  for (int s = 0; s < 10000; ++s) {
    Complex z = sample_in(a.pts, rng) * sample_in(b.pts, rng);
    if (!m.contains_point(z, 1)) ++misses;
  }
  CHECK(misses == 0);
}

TEST_CASE("scale and translate regions") {
  PlanarRegion z = PlanarRegion::polygon({{1, 0}, {2, 0}, {2, 1}});
  PlanarRegion s = scale_region(z, Complex(0, 2));
  REQUIRE(s.is_polygon());
  bool found = false;
  for (auto p : s.pts)
    if (std::abs(p - Complex(0, 2)) < 1e-12) found = true;
  CHECK(found);
  PlanarRegion t = translate_region(z, Complex(-1, 1));
  double best = 1e300;
  for (auto p : t.pts) best = std::min(best, std::abs(p - Complex(0, 1)));
  CHECK(best <= 1e-15);
}

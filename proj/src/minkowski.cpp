#include "prodrange/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prodrange/kernels.hpp"

namespace prodrange {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

double wrap_pi(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a <= -kPi) a += 2 * kPi;
  return a;
}

double interp(const std::vector<double>& v, double span, double xi) {
  int n = static_cast<int>(v.size());
  if (n == 1 || span <= 0.0) return v[0];
  double u = std::clamp(xi / span, 0.0, 1.0) * (n - 1);
  int i = std::min(n - 2, static_cast<int>(u));
  double f = u - i;
  return v[i] * (1.0 - f) + v[i + 1] * f;
}

}  // namespace

double LogPolarRibbon::r_lo(double xi) const { return interp(r_minus, phi_max, xi); }
double LogPolarRibbon::r_hi(double xi) const { return interp(r_plus, phi_max, xi); }

bool LogPolarRibbon::contains(Complex z, double log_tol, double angle_tol) const {
  double mod = std::abs(z);
  if (mod <= 0.0) return false;
  // spans may exceed pi (products), so wrap into [0, 2 pi) relative to the
  // ribbon start
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double xi = std::fmod(std::arg(z) - rotation, kTwoPi);
  if (xi < 0.0) xi += kTwoPi;
  if (xi > phi_max + angle_tol) {
    if (xi < kTwoPi - angle_tol) return false;
    xi = 0.0;  // wrapped tail just below the start angle
  }
  xi = std::clamp(xi, 0.0, phi_max);
  double lr = std::log(mod);
  return lr >= r_lo(xi) - log_tol && lr <= r_hi(xi) + log_tol;
}

LogPolarRibbon to_ribbon(const std::vector<Complex>& convex_poly, int grid,
                         bool allow_boundary_zero) {
  if (convex_poly.empty()) throw InvalidArgument("empty polygon");
  if (grid < 2) throw InvalidArgument("ribbon grid too small");
  std::vector<Complex> poly = convex_hull(convex_poly);

  double sd = signed_distance(poly, Complex(0.0, 0.0));
  if (sd > 1e-12) throw ContainsZero("origin lies inside the region");
  bool touches_zero = sd > -1e-12;
  if (touches_zero && !allow_boundary_zero)
    throw ContainsZero("origin lies on the region boundary");
  // radius below which log-polar data is clamped (only reached when the
  // boundary touches 0)
  double max_mod = 0.0;
  for (auto v : poly) max_mod = std::max(max_mod, std::abs(v));
  if (max_mod <= 1e-12) throw ContainsZero("region is the origin");
  double clamp_radius = 1e-9 * max_mod;

  // angular interval seen from the origin; directions fit in a half-plane
  Complex mean(0.0, 0.0);
  for (auto v : poly)
    if (std::abs(v) > clamp_radius) mean += v / std::abs(v);
  if (std::abs(mean) < 1e-12) throw ContainsZero("region surrounds the origin");
  double mu = std::arg(mean);
  double dmin = 1e300, dmax = -1e300;
  for (auto v : poly) {
    if (std::abs(v) <= clamp_radius) continue;
    double d = wrap_pi(std::arg(v) - mu);
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }

  LogPolarRibbon rib;
  rib.rotation = mu + dmin;
  rib.phi_max = dmax - dmin;
  rib.r_minus.resize(grid);
  rib.r_plus.resize(grid);

  // rotate the polygon once; rays are then at plain angles in [0, phi_max]
  Complex rot = std::polar(1.0, -rib.rotation);
  std::vector<Complex> p(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) p[i] = poly[i] * rot;

  int nv = static_cast<int>(p.size());
  double log_clamp = std::log(clamp_radius);
  for (int g = 0; g < grid; ++g) {
    double phi = rib.phi_max * g / (grid - 1);
    Complex dir = std::polar(1.0, phi);
    double smin = 1e300, smax = -1e300;
    if (nv == 1) {
      smin = smax = std::abs(p[0]);
    } else {
      for (int e = 0; e < nv; ++e) {
        Complex a = p[e], b = p[(e + 1) % nv];
        // s*dir = a + u (b - a)
        double a11 = dir.real(), a12 = -(b - a).real();
        double a21 = dir.imag(), a22 = -(b - a).imag();
        double det = a11 * a22 - a12 * a21;
        if (std::abs(det) < 1e-14 * (1.0 + std::abs(b - a))) {
          // edge parallel to the ray: accept endpoints lying on it
          for (Complex q : {a, b}) {
            if (std::abs(q) < 1e-300) continue;
            if (std::abs(wrap_pi(std::arg(q) - phi)) < 1e-9) {
              smin = std::min(smin, std::abs(q));
              smax = std::max(smax, std::abs(q));
            }
          }
          continue;
        }
        double s = (a.real() * a22 - a12 * a.imag()) / det;
        double u = (a11 * a.imag() - a.real() * a21) / det;
        if (u < -1e-9 || u > 1.0 + 1e-9 || s < 0.0) continue;
        smin = std::min(smin, s);
        smax = std::max(smax, s);
      }
    }
    if (smax < smin) {
      // ray grazed a vertex between edges; copy the neighbor below
      rib.r_minus[g] = g ? rib.r_minus[g - 1] : log_clamp;
      rib.r_plus[g] = g ? rib.r_plus[g - 1] : log_clamp;
      continue;
    }
    rib.r_minus[g] = std::log(std::max(smin, clamp_radius));
    rib.r_plus[g] = std::log(std::max(smax, clamp_radius));
  }
  return rib;
}

LogPolarRibbon log_polar_product(const LogPolarRibbon& r1, const LogPolarRibbon& r2) {
  if (r1.phi_max + r2.phi_max >= 2 * kPi)
    throw AngleOverflow("combined angular span reaches a full turn");

  LogPolarRibbon out;
  out.phi_max = r1.phi_max + r2.phi_max;
  out.rotation = r1.rotation + r2.rotation;
  int n = std::max({r1.grid(), r2.grid(), 1024});
  out.r_minus.resize(n);
  out.r_plus.resize(n);

  for (int g = 0; g < n; ++g) {
    double xi = out.phi_max * g / (n - 1);
    double lo = std::max(0.0, xi - r2.phi_max);
    double hi = std::min(r1.phi_max, xi);
    double best_hi = -1e300, best_lo = 1e300;
    int scan = 512;
    double at_hi = lo, at_lo = lo;
    for (int s = 0; s <= scan; ++s) {
      double phi = lo + (hi - lo) * s / scan;
      double vp = r1.r_hi(phi) + r2.r_hi(xi - phi);
      double vm = r1.r_lo(phi) + r2.r_lo(xi - phi);
      if (vp > best_hi) {
        best_hi = vp;
        at_hi = phi;
      }
      if (vm < best_lo) {
        best_lo = vm;
        at_lo = phi;
      }
    }
    // 3-point parabolic refinement around the grid optimum
    double h = (hi - lo) / scan;
    auto refine = [&](double at, bool upper) {
      if (h <= 0.0) return upper ? best_hi : best_lo;
      auto f = [&](double phi) {
        phi = std::clamp(phi, lo, hi);
        return upper ? r1.r_hi(phi) + r2.r_hi(xi - phi) : r1.r_lo(phi) + r2.r_lo(xi - phi);
      };
      double fm = f(at - h), f0 = f(at), fp = f(at + h);
      double denom = fm - 2 * f0 + fp;
      if (std::abs(denom) < 1e-300) return f0;
      double shift = 0.5 * (fm - fp) / denom * h;
      if (std::abs(shift) > h) return f0;
      double cand = f(at + shift);
      return upper ? std::max(f0, cand) : std::min(f0, cand);
    };
    out.r_plus[g] = refine(at_hi, true);
    out.r_minus[g] = refine(at_lo, false);
  }
  return out;
}

RasterMask ribbon_to_mask(const LogPolarRibbon& r, int resolution) {
  double rmax = *std::max_element(r.r_plus.begin(), r.r_plus.end());
  double mod_hi = std::exp(rmax);
  // bounding box of the annular sector
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  int probes = 4 * std::max(64, r.grid());
  for (int i = 0; i <= probes; ++i) {
    double xi = r.phi_max * i / probes;
    for (double lr : {r.r_lo(xi), r.r_hi(xi)}) {
      Complex z = std::polar(std::exp(lr), xi + r.rotation);
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  RasterMask m = make_frame(Complex(xmin, ymin), Complex(xmax, ymax), resolution, 4.0);
  double cell = m.cell;
  for (int i = 0; i < m.height; ++i)
    for (int j = 0; j < m.width; ++j) {
      Complex z = m.center(i, j);
      double mod = std::abs(z);
      if (mod > mod_hi + cell || mod < 1e-300) continue;
      if (r.contains(z, cell / mod, cell / mod)) m.set(i, j);
    }
  return m;
}

// ---------------------------------------------------------------------------
// sum / product dispatch

namespace {

bool single_point(const PlanarRegion& z, Complex& p) {
  if (z.is_polygon() || z.is_points()) {
    for (auto q : z.pts)
      if (std::abs(q - z.pts[0]) > 1e-14) return false;
    p = z.pts[0];
    return true;
  }
  Complex found;
  int count = 0;
  for (int i = 0; i < z.mask.height && count < 2; ++i)
    for (int j = 0; j < z.mask.width && count < 2; ++j)
      if (z.mask.get(i, j)) {
        found = z.mask.center(i, j);
        ++count;
      }
  if (count == 1) {
    p = found;
    return true;
  }
  return false;
}

// representative samples of a region: dense boundary plus an interior grid
void region_samples(const PlanarRegion& z, std::vector<Complex>& boundary,
                    std::vector<Complex>& full) {
  if (z.is_polygon()) {
    boundary = polygon_boundary_samples(z.pts, 2048);
    full = polygon_interior_samples(z.pts, 48);
    full.insert(full.end(), z.pts.begin(), z.pts.end());
    auto extra = polygon_boundary_samples(z.pts, 512);
    full.insert(full.end(), extra.begin(), extra.end());
    return;
  }
  const std::vector<Complex>* src = nullptr;
  std::vector<Complex> centers;
  if (z.is_raster()) {
    centers = z.mask.on_centers();
    boundary = z.mask.boundary_centers();
    src = &centers;
  } else {
    boundary = z.pts;
    src = &z.pts;
  }
  std::size_t stride = std::max<std::size_t>(1, src->size() / 4000);
  for (std::size_t i = 0; i < src->size(); i += stride) full.push_back((*src)[i]);
  if (boundary.size() > 4000) {
    std::vector<Complex> sub;
    std::size_t bs = std::max<std::size_t>(1, boundary.size() / 4000);
    for (std::size_t i = 0; i < boundary.size(); i += bs) sub.push_back(boundary[i]);
    boundary = std::move(sub);
  }
}

// flood over off-cells, 4-connected; returns component count, labels in `lab`
int flood_off(const RasterMask& m, std::vector<int>& lab) {
  lab.assign(m.on.size(), -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (std::size_t s = 0; s < m.on.size(); ++s) {
    if (m.on[s] || lab[s] >= 0) continue;
    int id = ncomp++;
    lab[s] = id;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      int ci = cur / m.width, cj = cur % m.width;
      const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        int ni = ci + di[d], nj = cj + dj[d];
        if (ni < 0 || ni >= m.height || nj < 0 || nj >= m.width) continue;
        int nidx = ni * m.width + nj;
        if (!m.on[nidx] && lab[nidx] < 0) {
          lab[nidx] = id;
          stack.push_back(nidx);
        }
      }
    }
  }
  return ncomp;
}

// Exact-leaning raster combine for two convex polygons: mark the pairwise
// boundary curve with sub-cell parameter steps, then classify each enclosed
// complement component by a membership test (exists b in B with z o b in A).
// No morphological closing, so thin true notches (cardioid cusp) survive.
PlanarRegion raster_combine_polygons(const std::vector<Complex>& pa,
                                     const std::vector<Complex>& pb, kernels::PairOp op,
                                     int resolution) {
  bool sum = op == kernels::PairOp::sum;
  double max_a = 0.0, max_b = 0.0;
  for (auto v : pa) max_a = std::max(max_a, std::abs(v));
  for (auto v : pb) max_b = std::max(max_b, std::abs(v));
  double perim_a = 0.0, perim_b = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) perim_a += std::abs(pa[(i + 1) % pa.size()] - pa[i]);
  for (std::size_t i = 0; i < pb.size(); ++i) perim_b += std::abs(pb[(i + 1) % pb.size()] - pb[i]);

  // frame from a coarse pass over vertex pairs
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto a : pa)
    for (auto b : pb) {
      Complex z = sum ? a + b : a * b;
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  RasterMask m = make_frame(Complex(xmin, ymin), Complex(xmax, ymax), resolution, 6.0);

  // pair steps below half a cell: |da|*scale_b and |db|*scale_a
  double scale_b = sum ? 1.0 : std::max(max_b, 1e-12);
  double scale_a = sum ? 1.0 : std::max(max_a, 1e-12);
  int na = std::clamp(static_cast<int>(perim_a * scale_b / (0.45 * m.cell)) + 8, 64, 6000);
  int nb = std::clamp(static_cast<int>(perim_b * scale_a / (0.45 * m.cell)) + 8, 64, 6000);
  kernels::pairwise_mark(polygon_boundary_samples(pa, na), polygon_boundary_samples(pb, nb), op,
                         m);

  // membership oracle over a dense sample of B
  std::vector<Complex> bmem = polygon_boundary_samples(pb, 1024);
  auto binterior = polygon_interior_samples(pb, 48);
  bmem.insert(bmem.end(), binterior.begin(), binterior.end());
  auto member = [&](Complex z) {
    for (auto b : bmem) {
      if (sum) {
        if (polygon_contains(pa, z - b, 0.0)) return true;
      } else {
        if (std::abs(b) < 1e-12) continue;
        if (polygon_contains(pa, z / b, 0.0)) return true;
      }
    }
    return false;
  };

  std::vector<int> lab;
  int ncomp = flood_off(m, lab);
  // border-touching components are outside
  std::vector<std::uint8_t> outside(ncomp, 0);
  for (int j = 0; j < m.width; ++j) {
    if (!m.get(0, j)) outside[lab[j]] = 1;
    if (!m.get(m.height - 1, j))
      outside[lab[static_cast<std::size_t>(m.height - 1) * m.width + j]] = 1;
  }
  for (int i = 0; i < m.height; ++i) {
    if (!m.get(i, 0)) outside[lab[static_cast<std::size_t>(i) * m.width]] = 1;
    if (!m.get(i, m.width - 1))
      outside[lab[static_cast<std::size_t>(i) * m.width + m.width - 1]] = 1;
  }
  // representatives per enclosed component, classified honestly
  std::vector<std::vector<int>> reps(ncomp);
  for (int i = 0; i < m.height; ++i)
    for (int j = 0; j < m.width; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * m.width + j;
      if (m.on[idx]) continue;
      int c = lab[idx];
      if (outside[c] || reps[c].size() >= 32) continue;
      reps[c].push_back(static_cast<int>(idx));
    }
  for (int c = 0; c < ncomp; ++c) {
    if (outside[c] || reps[c].empty()) continue;
    bool inside = false;
    std::size_t stride = std::max<std::size_t>(1, reps[c].size() / 8);
    for (std::size_t r = 0; r < reps[c].size() && !inside; r += stride)
      inside = member(m.center(reps[c][r] / m.width, reps[c][r] % m.width));
    if (inside)
      for (std::size_t idx = 0; idx < m.on.size(); ++idx)
        if (!m.on[idx] && lab[idx] == c) m.on[idx] = 1;
  }
  return PlanarRegion::raster(std::move(m));
}

PlanarRegion raster_combine(const PlanarRegion& z1, const PlanarRegion& z2, kernels::PairOp op,
                            int resolution, double extra_dilation) {
  if (z1.is_polygon() && z2.is_polygon() && polygon_area(z1.pts) > 0 && polygon_area(z2.pts) > 0) {
    PlanarRegion r = raster_combine_polygons(z1.pts, z2.pts, op, resolution);
    if (extra_dilation > 0.0) r.mask = dilate(r.mask, extra_dilation);
    return r;
  }
  std::vector<Complex> b1, f1, b2, f2;
  region_samples(z1, b1, f1);
  region_samples(z2, b2, f2);

  // frame from interval arithmetic over the samples
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto extend = [&](Complex z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  // pair subsets keep the frame pass cheap without a full cross product
  std::size_t s1 = std::max<std::size_t>(1, f1.size() / 256);
  std::size_t s2 = std::max<std::size_t>(1, f2.size() / 256);
  for (std::size_t i = 0; i < f1.size(); i += s1)
    for (std::size_t j = 0; j < f2.size(); j += s2)
      extend(op == kernels::PairOp::sum ? f1[i] + f2[j] : f1[i] * f2[j]);
  for (auto a : b1)
    for (std::size_t j = 0; j < b2.size(); j += std::max<std::size_t>(1, b2.size() / 64))
      extend(op == kernels::PairOp::sum ? a + b2[j] : a * b2[j]);

  RasterMask m = make_frame(Complex(xmin, ymin), Complex(xmax, ymax), resolution, 6.0);
  kernels::pairwise_mark(b1, b2, op, m);
  kernels::pairwise_mark(f1, f2, op, m);
  RasterMask closed = morphological_close(m, 2.0);
  // keep every marked product/sum point: cusps and thin tips survive closing
  for (std::size_t i = 0; i < m.on.size(); ++i) closed.on[i] |= m.on[i];
  if (extra_dilation > 0.0) closed = dilate(closed, extra_dilation);
  return PlanarRegion::raster(std::move(closed));
}

bool zero_free_polygon(const PlanarRegion& z) {
  return z.is_polygon() && signed_distance(z.pts, Complex(0, 0)) < -1e-12;
}

}  // namespace

PlanarRegion minkowski_sum(const PlanarRegion& z1, const PlanarRegion& z2, int resolution) {
  Complex p;
  if (single_point(z1, p)) return translate_region(z2, p);
  if (single_point(z2, p)) return translate_region(z1, p);
  if (z1.is_polygon() && z2.is_polygon()) {
    std::vector<Complex> sums;
    sums.reserve(z1.pts.size() * z2.pts.size());
    for (auto a : z1.pts)
      for (auto b : z2.pts) sums.push_back(a + b);
    return PlanarRegion::polygon(convex_hull(sums));
  }
  return raster_combine(z1, z2, kernels::PairOp::sum, resolution, 0.0);
}

PlanarRegion minkowski_product(const PlanarRegion& z1, const PlanarRegion& z2, int resolution) {
  Complex p;
  if (single_point(z1, p)) return scale_region(z2, p, resolution);
  if (single_point(z2, p)) return scale_region(z1, p, resolution);
  if (zero_free_polygon(z1) && zero_free_polygon(z2)) {
    LogPolarRibbon r1 = to_ribbon(z1.pts);
    LogPolarRibbon r2 = to_ribbon(z2.pts);
    return PlanarRegion::raster(ribbon_to_mask(log_polar_product(r1, r2), resolution));
  }
  if (z1.is_points() && z2.is_points()) {
    std::size_t s1 = std::max<std::size_t>(1, z1.pts.size() / 512);
    std::size_t s2 = std::max<std::size_t>(1, z2.pts.size() / 512);
    std::vector<Complex> prods;
    for (std::size_t i = 0; i < z1.pts.size(); i += s1)
      for (std::size_t j = 0; j < z2.pts.size(); j += s2) prods.push_back(z1.pts[i] * z2.pts[j]);
    return PlanarRegion::points(std::move(prods));
  }
  return raster_combine(z1, z2, kernels::PairOp::product, resolution, 0.0);
}

PlanarRegion scale_region(const PlanarRegion& z, Complex factor, int resolution) {
  if (std::abs(factor) < 1e-12) return PlanarRegion::points({Complex(0.0, 0.0)});
  if (z.is_polygon() || z.is_points()) {
    auto pts = z.pts;
    for (auto& q : pts) q *= factor;
    if (z.is_polygon()) return PlanarRegion::polygon(convex_hull(pts));
    return PlanarRegion::points(std::move(pts));
  }
  // a positive real factor scales the frame exactly
  if (factor.imag() == 0.0 && factor.real() > 0.0) {
    PlanarRegion out = z;
    out.mask.origin *= factor.real();
    out.mask.cell *= factor.real();
    return out;
  }
  // complex scaling rotates the grid; resample via point cloud
  auto centers = z.mask.on_centers();
  for (auto& q : centers) q *= factor;
  return PlanarRegion::raster(rasterize(centers, resolution, 1.6));
}

PlanarRegion translate_region(const PlanarRegion& z, Complex offset) {
  PlanarRegion out = z;
  if (out.is_raster()) {
    out.mask.origin += offset;
  } else {
    for (auto& q : out.pts) q += offset;
  }
  return out;
}

RasterMask region_to_mask(const PlanarRegion& z, int resolution) {
  if (z.is_raster()) return z.mask;
  if (z.is_points()) return rasterize(z.pts, resolution);
  // polygon: frame plus scanline fill
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto p : z.pts) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  RasterMask m = make_frame(Complex(xmin, ymin), Complex(xmax, ymax), resolution, 4.0);
  polygon_fill_into(m, z.pts);
  return m;
}

void polygon_fill_into(RasterMask& mask, const std::vector<Complex>& poly) {
  int nv = static_cast<int>(poly.size());
  if (nv == 1) {
    int i, j;
    mask.locate(poly[0], i, j);
    if (i >= 0 && i < mask.height && j >= 0 && j < mask.width) mask.set(i, j);
    return;
  }
  if (nv == 2) {
    // degenerate: walk the segment
    int steps = std::max(2, static_cast<int>(std::abs(poly[1] - poly[0]) / mask.cell) * 2);
    for (int s = 0; s <= steps; ++s) {
      Complex z = poly[0] + (poly[1] - poly[0]) * (static_cast<double>(s) / steps);
      int i, j;
      mask.locate(z, i, j);
      if (i >= 0 && i < mask.height && j >= 0 && j < mask.width) mask.set(i, j);
    }
    return;
  }
  for (int i = 0; i < mask.height; ++i) {
    double y = mask.origin.imag() + i * mask.cell;
    std::vector<double> xs;
    for (int e = 0; e < nv; ++e) {
      Complex a = poly[e], b = poly[(e + 1) % nv];
      double ya = a.imag(), yb = b.imag();
      if ((ya <= y && yb > y) || (yb <= y && ya > y)) {
        double t = (y - ya) / (yb - ya);
        xs.push_back(a.real() + t * (b.real() - a.real()));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      int j0 = static_cast<int>(std::ceil((xs[k] - mask.origin.real()) / mask.cell - 0.5));
      int j1 = static_cast<int>(std::floor((xs[k + 1] - mask.origin.real()) / mask.cell + 0.5));
      for (int j = std::max(0, j0); j <= std::min(mask.width - 1, j1); ++j) mask.set(i, j);
    }
  }
}

}  // namespace prodrange

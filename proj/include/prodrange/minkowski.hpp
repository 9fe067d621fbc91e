#pragma once

#include "prodrange/planar_region.hpp"
#include "prodrange/raster_topology.hpp"

namespace prodrange {

// Log-polar description of a zero-free convex set, rotated so its minimal
// argument is 0: the set is { exp(r + i(xi + rotation)) : xi in [0, phi_max],
// r in [r_minus(xi), r_plus(xi)] } with r sampled on a uniform grid.
struct LogPolarRibbon {
  double phi_max = 0.0;          // angular span, < pi for zero-free convex sets
  double rotation = 0.0;         // angle removed during normalization
  std::vector<double> r_minus;   // log-radius lower profile
  std::vector<double> r_plus;    // log-radius upper profile

  int grid() const { return static_cast<int>(r_minus.size()); }
  double r_lo(double xi) const;  // linear interpolation
  double r_hi(double xi) const;
  bool contains(Complex z, double log_tol, double angle_tol) const;
};

// Builds the ribbon of a convex polygon with 0 outside it.  A vertex sitting
// on the origin (|z| <= 1e-12) is tolerated only when allow_boundary_zero is
// set; the lower profile is then clamped at a negligible radius.  0 in the
// interior always raises ContainsZero.
LogPolarRibbon to_ribbon(const std::vector<Complex>& convex_poly, int grid = 1025,
                         bool allow_boundary_zero = false);

// Minkowski product in log-polar coordinates: log radii add, spans add.
// R+(xi) = max over admissible phi of r1+(phi) + r2+(xi - phi), R- by min.
LogPolarRibbon log_polar_product(const LogPolarRibbon& r1, const LogPolarRibbon& r2);

RasterMask ribbon_to_mask(const LogPolarRibbon& r, int resolution = 512);

// Minkowski sum.  Convex polygons combine exactly (hull of vertex sums);
// otherwise the result is a raster built from pairwise samples.
PlanarRegion minkowski_sum(const PlanarRegion& z1, const PlanarRegion& z2, int resolution = 512);

// Minkowski product.  Zero-free convex polygons go through the log-polar
// ribbon; anything else falls back to the raster/point-cloud path.
PlanarRegion minkowski_product(const PlanarRegion& z1, const PlanarRegion& z2,
                               int resolution = 512);

PlanarRegion scale_region(const PlanarRegion& z, Complex factor, int resolution = 512);
PlanarRegion translate_region(const PlanarRegion& z, Complex offset);

// Rasterize any region representation onto its own frame.
RasterMask region_to_mask(const PlanarRegion& z, int resolution = 512);

void polygon_fill_into(RasterMask& mask, const std::vector<Complex>& poly);

}  // namespace prodrange

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "prodrange/errors.hpp"

namespace prodrange {

using Complex = std::complex<double>;

// Boolean grid over an axis-aligned frame.  `origin` is the center of cell
// (row 0, col 0); cell (i, j) has center origin + (j*cell, i*cell).
struct RasterMask {
  Complex origin{0.0, 0.0};
  double cell = 1.0;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> on;  // row-major height*width

  RasterMask() = default;
  RasterMask(Complex origin, double cell, int width, int height);

  bool get(int i, int j) const { return on[static_cast<std::size_t>(i) * width + j] != 0; }
  void set(int i, int j, bool v = true) {
    on[static_cast<std::size_t>(i) * width + j] = v ? 1 : 0;
  }
  Complex center(int i, int j) const {
    return origin + Complex(j * cell, i * cell);
  }
  // grid coordinates of z, rounded to the nearest cell (may be out of range)
  void locate(Complex z, int& i, int& j) const;
  bool contains_point(Complex z, int slack_cells = 0) const;
  std::size_t count_on() const;
  // physical area covered
  double area() const { return static_cast<double>(count_on()) * cell * cell; }
  std::vector<Complex> on_centers() const;
  // on-cells with at least one off (or out-of-range) 4-neighbor
  std::vector<Complex> boundary_centers() const;
};

// Planar set in one of three interchangeable representations.
struct PlanarRegion {
  enum class Kind { polygon, points, raster };

  Kind kind = Kind::points;
  std::vector<Complex> pts;  // polygon vertices (CCW) or cloud samples
  RasterMask mask;

  static PlanarRegion polygon(std::vector<Complex> vertices);
  static PlanarRegion points(std::vector<Complex> samples);
  static PlanarRegion raster(RasterMask m);

  bool is_polygon() const { return kind == Kind::polygon; }
  bool is_points() const { return kind == Kind::points; }
  bool is_raster() const { return kind == Kind::raster; }
};

// Convex hull, counterclockwise, collinear points dropped.  Degenerate input
// collapses to 1 or 2 vertices.
std::vector<Complex> convex_hull(std::vector<Complex> points);

double polygon_area(const std::vector<Complex>& poly);

// Signed distance to a convex CCW polygon: positive inside, negative outside.
// Degenerate polygons (< 3 vertices) measure distance to the point/segment
// and return its negation (never positive).
double signed_distance(const std::vector<Complex>& poly, Complex z);

double segment_distance(Complex a, Complex b, Complex z);

// min over vertices/edges of |z| <= tol decides origin membership
bool polygon_contains(const std::vector<Complex>& poly, Complex z, double tol = 0.0);

// Uniformly spaced samples along the polygon boundary (closed).
std::vector<Complex> polygon_boundary_samples(const std::vector<Complex>& poly, int count);

// Points of a coarse grid lying inside the polygon.
std::vector<Complex> polygon_interior_samples(const std::vector<Complex>& poly, int per_axis);

}  // namespace prodrange

#include "prodrange/planar_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace prodrange {

RasterMask::RasterMask(Complex origin, double cell, int width, int height)
    : origin(origin), cell(cell), width(width), height(height),
      on(static_cast<std::size_t>(width) * height, 0) {
  if (cell <= 0.0) throw InvalidArgument("raster cell size must be positive");
  if (width < 1 || height < 1) throw InvalidArgument("raster must be nonempty");
}

void RasterMask::locate(Complex z, int& i, int& j) const {
  j = static_cast<int>(std::lround((z.real() - origin.real()) / cell));
  i = static_cast<int>(std::lround((z.imag() - origin.imag()) / cell));
}

bool RasterMask::contains_point(Complex z, int slack_cells) const {
  int i, j;
  locate(z, i, j);
  for (int di = -slack_cells; di <= slack_cells; ++di)
    for (int dj = -slack_cells; dj <= slack_cells; ++dj) {
      int ii = i + di, jj = j + dj;
      if (ii >= 0 && ii < height && jj >= 0 && jj < width && get(ii, jj)) return true;
    }
  return false;
}

std::size_t RasterMask::count_on() const {
  std::size_t c = 0;
  for (auto v : on) c += v != 0;
  return c;
}

std::vector<Complex> RasterMask::on_centers() const {
  std::vector<Complex> out;
  out.reserve(count_on());
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j)
      if (get(i, j)) out.push_back(center(i, j));
  return out;
}

std::vector<Complex> RasterMask::boundary_centers() const {
  std::vector<Complex> out;
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j) {
      if (!get(i, j)) continue;
      bool edge = i == 0 || i == height - 1 || j == 0 || j == width - 1 ||
                  !get(i - 1, j) || !get(i + 1, j) || !get(i, j - 1) || !get(i, j + 1);
      if (edge) out.push_back(center(i, j));
    }
  return out;
}

PlanarRegion PlanarRegion::polygon(std::vector<Complex> vertices) {
  if (vertices.empty()) throw InvalidArgument("polygon needs at least one vertex");
  PlanarRegion r;
  r.kind = Kind::polygon;
  r.pts = std::move(vertices);
  return r;
}

PlanarRegion PlanarRegion::points(std::vector<Complex> samples) {
  if (samples.empty()) throw InvalidArgument("point cloud needs at least one sample");
  PlanarRegion r;
  r.kind = Kind::points;
  r.pts = std::move(samples);
  return r;
}

PlanarRegion PlanarRegion::raster(RasterMask m) {
  PlanarRegion r;
  r.kind = Kind::raster;
  r.mask = std::move(m);
  return r;
}

namespace {
double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}
}  // namespace

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  std::sort(points.begin(), points.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](Complex a, Complex b) { return a == b; }),
               points.end());
  int n = static_cast<int>(points.size());
  if (n <= 2) return points;

  std::vector<Complex> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

double polygon_area(const std::vector<Complex>& poly) {
  int n = static_cast<int>(poly.size());
  if (n < 3) return 0.0;
  double a = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex p = poly[i], q = poly[(i + 1) % n];
    a += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * a;
}

double segment_distance(Complex a, Complex b, Complex z) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

double signed_distance(const std::vector<Complex>& poly, Complex z) {
  int n = static_cast<int>(poly.size());
  if (n == 0) return -std::numeric_limits<double>::infinity();
  if (n == 1) return -std::abs(z - poly[0]);
  if (n == 2) return -segment_distance(poly[0], poly[1], z);
  double min_edge = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (int i = 0; i < n; ++i) {
    Complex p = poly[i], q = poly[(i + 1) % n];
    if (cross(p, q, z) < 0) inside = false;
    min_edge = std::min(min_edge, segment_distance(p, q, z));
  }
  return inside ? min_edge : -min_edge;
}

bool polygon_contains(const std::vector<Complex>& poly, Complex z, double tol) {
  return signed_distance(poly, z) >= -tol;
}

std::vector<Complex> polygon_boundary_samples(const std::vector<Complex>& poly, int count) {
  int n = static_cast<int>(poly.size());
  if (n == 1) return {poly[0]};
  double perimeter = 0.0;
  std::vector<double> seglen(n);
  for (int i = 0; i < n; ++i) {
    seglen[i] = std::abs(poly[(i + 1) % n] - poly[i]);
    perimeter += seglen[i];
  }
  if (perimeter == 0.0) return {poly[0]};
  std::vector<Complex> out;
  out.reserve(count);
  double step = perimeter / count;
  int seg = 0;
  double into = 0.0;
  for (int s = 0; s < count; ++s) {
    double target = s * step;
    while (seg < n - 1 && into + seglen[seg] < target) {
      into += seglen[seg];
      ++seg;
    }
    double t = seglen[seg] > 0 ? (target - into) / seglen[seg] : 0.0;
    out.push_back(poly[seg] + t * (poly[(seg + 1) % n] - poly[seg]));
  }
  return out;
}

std::vector<Complex> polygon_interior_samples(const std::vector<Complex>& poly, int per_axis) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto p : poly) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  std::vector<Complex> out;
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j) {
      Complex z(xmin + (xmax - xmin) * (j + 0.5) / per_axis,
                ymin + (ymax - ymin) * (i + 0.5) / per_axis);
      if (polygon_contains(poly, z, 0.0)) out.push_back(z);
    }
  return out;
}

}  // namespace prodrange

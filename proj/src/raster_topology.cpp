#include "prodrange/raster_topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

namespace prodrange {

namespace {

constexpr double kInf = 1e30;

struct Frame {
  Complex origin;
  double cell;
  int width, height;
};

Frame fit_frame(Complex lo, Complex hi, int resolution, double margin_cells) {
  double spanx = hi.real() - lo.real();
  double spany = hi.imag() - lo.imag();
  double span = std::max(spanx, spany);
  if (span < 1e-12) span = 1.0;
  double cell = span / (resolution - 1);
  int margin = static_cast<int>(std::ceil(margin_cells));
  int width = static_cast<int>(std::ceil(spanx / cell)) + 1 + 2 * margin;
  int height = static_cast<int>(std::ceil(spany / cell)) + 1 + 2 * margin;
  Complex origin = lo - Complex(margin * cell, margin * cell);
  return {origin, cell, width, height};
}

// offsets of a disc structuring element
std::vector<std::pair<int, int>> disc_offsets(double radius_cells) {
  int r = static_cast<int>(std::floor(radius_cells));
  std::vector<std::pair<int, int>> out;
  for (int di = -r; di <= r; ++di)
    for (int dj = -r; dj <= r; ++dj)
      if (di * di + dj * dj <= radius_cells * radius_cells) out.emplace_back(di, dj);
  return out;
}

// 1D squared distance transform (Felzenszwalb-Huttenlocher)
void dt_1d(const double* f, double* d, int n, int* v, double* z) {
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s;
    while (true) {
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
      if (s <= z[k]) {
        --k;
      } else {
        break;
      }
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

int flood(const std::vector<std::uint8_t>& grid, int width, int height, bool diagonal,
          std::vector<int>& labels) {
  labels.assign(grid.size(), -1);
  int ncomp = 0;
  std::vector<int> stack;
  const int dx4[] = {1, -1, 0, 0};
  const int dy4[] = {0, 0, 1, -1};
  const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const int* dx = diagonal ? dx8 : dx4;
  const int* dy = diagonal ? dy8 : dy4;
  int deg = diagonal ? 8 : 4;
  for (std::size_t start = 0; start < grid.size(); ++start) {
    if (!grid[start] || labels[start] >= 0) continue;
    int id = ncomp++;
    stack.push_back(static_cast<int>(start));
    labels[start] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      int ci = cur / width, cj = cur % width;
      for (int d = 0; d < deg; ++d) {
        int ni = ci + dy[d], nj = cj + dx[d];
        if (ni < 0 || ni >= height || nj < 0 || nj >= width) continue;
        int nidx = ni * width + nj;
        if (grid[nidx] && labels[nidx] < 0) {
          labels[nidx] = id;
          stack.push_back(nidx);
        }
      }
    }
  }
  return ncomp;
}

double median_nn_spacing_cells(const std::vector<Complex>& points, const RasterMask& frame) {
  std::size_t n = points.size();
  if (n < 2) return 1.0;
  std::size_t stride = std::max<std::size_t>(1, n / 20000);
  // bucket points by cell
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(frame.width) * frame.height);
  for (std::size_t p = 0; p < n; ++p) {
    int i, j;
    frame.locate(points[p], i, j);
    i = std::clamp(i, 0, frame.height - 1);
    j = std::clamp(j, 0, frame.width - 1);
    buckets[static_cast<std::size_t>(i) * frame.width + j].push_back(static_cast<int>(p));
  }
  std::vector<double> nn;
  for (std::size_t p = 0; p < n; p += stride) {
    int pi, pj;
    frame.locate(points[p], pi, pj);
    pi = std::clamp(pi, 0, frame.height - 1);
    pj = std::clamp(pj, 0, frame.width - 1);
    double best = kInf;
    for (int ring = 0; ring <= 64; ++ring) {
      if (best < kInf && (ring - 1) * frame.cell > std::sqrt(best)) break;
      for (int di = -ring; di <= ring; ++di)
        for (int dj = -ring; dj <= ring; ++dj) {
          if (std::max(std::abs(di), std::abs(dj)) != ring) continue;
          int ii = pi + di, jj = pj + dj;
          if (ii < 0 || ii >= frame.height || jj < 0 || jj >= frame.width) continue;
          for (int q : buckets[static_cast<std::size_t>(ii) * frame.width + jj]) {
            if (static_cast<std::size_t>(q) == p) continue;
            double d2 = std::norm(points[p] - points[q]);
            // same-cell duplicates say nothing about coverage gaps
            if (d2 < 0.25 * frame.cell * frame.cell) continue;
            best = std::min(best, d2);
          }
        }
      if (best < kInf && ring >= 1 && (ring - 1) * frame.cell > std::sqrt(best)) break;
    }
    if (best < kInf) nn.push_back(std::sqrt(best) / frame.cell);
  }
  if (nn.empty()) return 1.0;
  std::nth_element(nn.begin(), nn.begin() + nn.size() / 2, nn.end());
  return nn[nn.size() / 2];
}

}  // namespace

RasterMask make_frame(Complex lo, Complex hi, int resolution, double margin_cells) {
  if (resolution < 32) throw InvalidArgument("raster resolution must be at least 32");
  Frame f = fit_frame(lo, hi, resolution, margin_cells);
  return RasterMask(f.origin, f.cell, f.width, f.height);
}

RasterMask rasterize(const std::vector<Complex>& points, int resolution, double dilation_radius) {
  if (points.empty()) throw InvalidArgument("rasterize needs at least one point");
  if (resolution < 32) throw InvalidArgument("raster resolution must be at least 32");
  Complex lo(1e300, 1e300), hi(-1e300, -1e300);
  for (auto z : points) {
    lo = Complex(std::min(lo.real(), z.real()), std::min(lo.imag(), z.imag()));
    hi = Complex(std::max(hi.real(), z.real()), std::max(hi.imag(), z.imag()));
  }
  RasterMask m = make_frame(lo, hi, resolution, 4.0);
  for (auto z : points) {
    int i, j;
    m.locate(z, i, j);
    if (i >= 0 && i < m.height && j >= 0 && j < m.width) m.set(i, j);
  }
  double radius = dilation_radius;
  RasterMask closed = m;
  if (radius < 0.0) {
    radius = std::max(1.0, 1.5 * median_nn_spacing_cells(points, m));
    // under-sampled clouds of a connected set can still fall apart; widen the
    // closing element a little before giving up (never enough to seal
    // figure-scale holes)
    closed = morphological_close(m, radius);
    std::vector<int> labels;
    while (flood(closed.on, closed.width, closed.height, false, labels) > 1 && radius < 4.0) {
      radius += 0.75;
      closed = morphological_close(m, radius);
    }
  } else if (radius > 0.0) {
    closed = morphological_close(m, radius);
  }
  // closing must not erode away sample-bearing cells (thin tips, cusps)
  for (std::size_t i = 0; i < m.on.size(); ++i) closed.on[i] |= m.on[i];
  return closed;
}

RasterMask dilate(const RasterMask& m, double radius_cells) {
  if (radius_cells <= 0.0) return m;
  auto offs = disc_offsets(radius_cells);
  RasterMask out = m;
  std::fill(out.on.begin(), out.on.end(), 0);
  for (int i = 0; i < m.height; ++i)
    for (int j = 0; j < m.width; ++j) {
      if (!m.get(i, j)) continue;
      for (auto [di, dj] : offs) {
        int ii = i + di, jj = j + dj;
        if (ii >= 0 && ii < m.height && jj >= 0 && jj < m.width) out.set(ii, jj);
      }
    }
  return out;
}

RasterMask erode(const RasterMask& m, double radius_cells) {
  if (radius_cells <= 0.0) return m;
  RasterMask inv = m;
  for (auto& v : inv.on) v = v ? 0 : 1;
  inv = dilate(inv, radius_cells);
  RasterMask out = m;
  for (std::size_t i = 0; i < out.on.size(); ++i) out.on[i] = inv.on[i] ? 0 : 1;
  return out;
}

RasterMask morphological_close(const RasterMask& m, double radius_cells) {
  return erode(dilate(m, radius_cells), radius_cells);
}

RegionTopology topology(const RasterMask& mask) {
  if (mask.count_on() == 0) throw EmptyMask("topology of an empty mask");

  RegionTopology out;
  out.resolution = std::max(mask.width, mask.height);

  std::vector<int> fg_labels;
  out.components = flood(mask.on, mask.width, mask.height, /*diagonal=*/false, fg_labels);

  std::vector<std::size_t> comp_size(out.components, 0);
  for (std::size_t i = 0; i < mask.on.size(); ++i)
    if (mask.on[i]) comp_size[fg_labels[i]]++;
  int largest =
      static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());

  // background components, 8-connected; holes are those not touching the frame
  std::vector<std::uint8_t> bg(mask.on.size());
  for (std::size_t i = 0; i < bg.size(); ++i) bg[i] = mask.on[i] ? 0 : 1;
  std::vector<int> bg_labels;
  int nbg = flood(bg, mask.width, mask.height, /*diagonal=*/true, bg_labels);
  std::vector<std::uint8_t> touches_border(nbg, 0);
  for (int j = 0; j < mask.width; ++j) {
    if (bg[j]) touches_border[bg_labels[j]] = 1;
    std::size_t bot = static_cast<std::size_t>(mask.height - 1) * mask.width + j;
    if (bg[bot]) touches_border[bg_labels[bot]] = 1;
  }
  for (int i = 0; i < mask.height; ++i) {
    std::size_t l = static_cast<std::size_t>(i) * mask.width;
    std::size_t r = l + mask.width - 1;
    if (bg[l]) touches_border[bg_labels[l]] = 1;
    if (bg[r]) touches_border[bg_labels[r]] = 1;
  }
  int total_holes = 0;
  std::vector<std::uint8_t> seen(nbg, 0);
  for (int i = 0; i < mask.height; ++i)
    for (int j = 0; j < mask.width; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * mask.width + j;
      if (!bg[idx]) continue;
      int hole = bg_labels[idx];
      if (touches_border[hole] || seen[hole]) continue;
      seen[hole] = 1;
      ++total_holes;
      // first encounter is the topmost-leftmost hole cell; its left neighbor
      // must be foreground (same-component background would have merged)
      int owner = fg_labels[idx - 1];
      out.per_component_genus[owner]++;
    }
  out.genus = out.per_component_genus.count(largest) ? out.per_component_genus[largest] : 0;

  // quad-count Euler characteristic of the 4-connected cell complex
  long long n1 = 0, n3 = 0, nd = 0;
  auto at = [&](int i, int j) -> int {
    if (i < 0 || i >= mask.height || j < 0 || j >= mask.width) return 0;
    return mask.get(i, j) ? 1 : 0;
  };
  for (int i = -1; i < mask.height; ++i)
    for (int j = -1; j < mask.width; ++j) {
      int a = at(i, j), b = at(i, j + 1), c = at(i + 1, j), d = at(i + 1, j + 1);
      int s = a + b + c + d;
      if (s == 1) ++n1;
      if (s == 3) ++n3;
      if (s == 2 && ((a && d && !b && !c) || (b && c && !a && !d))) ++nd;
    }
  out.euler_characteristic = static_cast<int>((n1 - n3 + 2 * nd) / 4);

  // convexity: area of the largest component against the hull of its cells
  // (stray satellite cells signal under-sampling, not non-convexity)
  std::vector<Complex> centers;
  for (int i = 0; i < mask.height; ++i)
    for (int j = 0; j < mask.width; ++j)
      if (mask.get(i, j) && fg_labels[static_cast<std::size_t>(i) * mask.width + j] == largest)
        centers.push_back(mask.center(i, j));
  auto hull = convex_hull(centers);
  double hull_area = polygon_area(hull);
  if (hull_area < mask.cell * mask.cell) {
    out.hull_area_ratio = 1.0;
  } else {
    out.hull_area_ratio =
        std::min(1.0, static_cast<double>(centers.size()) * mask.cell * mask.cell / hull_area);
  }
  out.is_convex = out.hull_area_ratio >= 0.995 && out.genus == 0;
  return out;
}

std::vector<double> distance_transform(const RasterMask& m) {
  int w = m.width, h = m.height;
  std::vector<double> f(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = m.on[i] ? 0.0 : kInf;

  int nmax = std::max(w, h);
  std::vector<double> col(nmax), dcol(nmax), z(nmax + 1);
  std::vector<int> v(nmax);
  for (int j = 0; j < w; ++j) {
    for (int i = 0; i < h; ++i) col[i] = f[static_cast<std::size_t>(i) * w + j];
    dt_1d(col.data(), dcol.data(), h, v.data(), z.data());
    for (int i = 0; i < h; ++i) f[static_cast<std::size_t>(i) * w + j] = dcol[i];
  }
  for (int i = 0; i < h; ++i) {
    double* row = f.data() + static_cast<std::size_t>(i) * w;
    for (int j = 0; j < w; ++j) col[j] = row[j];
    dt_1d(col.data(), dcol.data(), w, v.data(), z.data());
    for (int j = 0; j < w; ++j) row[j] = dcol[j];
  }
  return f;
}

RasterMask resample(const RasterMask& m, Complex origin, double cell, int width, int height) {
  RasterMask out(origin, cell, width, height);
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j) {
      int si, sj;
      m.locate(out.center(i, j), si, sj);
      if (si >= 0 && si < m.height && sj >= 0 && sj < m.width && m.get(si, sj)) out.set(i, j);
    }
  return out;
}

namespace {
void common_frame(const RasterMask& a, const RasterMask& b, RasterMask& ra, RasterMask& rb) {
  double cell = std::min(a.cell, b.cell);
  double xmin = std::min(a.origin.real(), b.origin.real());
  double ymin = std::min(a.origin.imag(), b.origin.imag());
  double xmax = std::max(a.origin.real() + a.cell * (a.width - 1),
                         b.origin.real() + b.cell * (b.width - 1));
  double ymax = std::max(a.origin.imag() + a.cell * (a.height - 1),
                         b.origin.imag() + b.cell * (b.height - 1));
  int width = static_cast<int>(std::ceil((xmax - xmin) / cell)) + 1;
  int height = static_cast<int>(std::ceil((ymax - ymin) / cell)) + 1;
  if (width > 4096 || height > 4096) throw InvalidArgument("common raster frame too large");
  ra = resample(a, Complex(xmin, ymin), cell, width, height);
  rb = resample(b, Complex(xmin, ymin), cell, width, height);
}
}  // namespace

double hausdorff(const RasterMask& a, const RasterMask& b) {
  if (a.count_on() == 0 || b.count_on() == 0) throw EmptyMask("hausdorff of an empty mask");
  RasterMask ra, rb;
  common_frame(a, b, ra, rb);
  auto da = distance_transform(ra);
  auto db = distance_transform(rb);
  double h2 = 0.0;
  for (std::size_t i = 0; i < ra.on.size(); ++i) {
    if (ra.on[i]) h2 = std::max(h2, db[i]);
    if (rb.on[i]) h2 = std::max(h2, da[i]);
  }
  return std::sqrt(h2) * ra.cell;
}

double mask_iou(const RasterMask& a, const RasterMask& b) {
  RasterMask ra, rb;
  common_frame(a, b, ra, rb);
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < ra.on.size(); ++i) {
    bool x = ra.on[i], y = rb.on[i];
    inter += x && y;
    uni += x || y;
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace prodrange

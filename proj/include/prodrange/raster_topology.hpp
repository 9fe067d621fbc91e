#pragma once

#include <map>
#include <vector>

#include "prodrange/planar_region.hpp"

namespace prodrange {

// Topology summary of a raster region.  Foreground is 4-connected and
// background 8-connected, which avoids the diagonal-leak paradox.
struct RegionTopology {
  int components = 0;
  int genus = 0;  // holes of the largest component
  bool is_convex = false;
  int resolution = 0;
  double hull_area_ratio = 0.0;
  std::map<int, int> per_component_genus;  // diagnostics, component id -> holes
  int euler_characteristic = 0;            // from the cell complex, = components - total holes
};

// Marks every point's cell, then applies morphological closing with a disc
// element to bridge sampling gaps.  dilation_radius < 0 selects the default
// 1.5x the median nearest-neighbor spacing (in cells).
RasterMask rasterize(const std::vector<Complex>& points, int resolution,
                     double dilation_radius = -1.0);

// Same frame policy as rasterize but marks nothing outside the given bounds.
RasterMask make_frame(Complex lo, Complex hi, int resolution, double margin_cells = 4.0);

RasterMask dilate(const RasterMask& m, double radius_cells);
RasterMask erode(const RasterMask& m, double radius_cells);
RasterMask morphological_close(const RasterMask& m, double radius_cells);

RegionTopology topology(const RasterMask& mask);

// Symmetric Hausdorff distance in plane units, via two exact Euclidean
// distance transforms.  Frames may differ; masks are compared where they lie.
double hausdorff(const RasterMask& a, const RasterMask& b);

// Squared Euclidean distance (in cells) from each cell to the nearest on-cell.
std::vector<double> distance_transform(const RasterMask& m);

// Nearest-neighbor resample onto a new frame.
RasterMask resample(const RasterMask& m, Complex origin, double cell, int width, int height);

// Intersection-over-union of two masks (resampled onto a common frame).
double mask_iou(const RasterMask& a, const RasterMask& b);

}  // namespace prodrange

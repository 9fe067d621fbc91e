#pragma once

#include <complex>
#include <string>
#include <vector>

namespace prodrange {

using Complex = std::complex<double>;

// Minimal data-plot SVG writer: point clouds, polylines, and cross markers in
// complex-plane coordinates with an axes box.  Output is deterministic.
class SvgPlot {
 public:
  SvgPlot(int width_px = 640, int height_px = 640);

  void add_points(const std::vector<Complex>& pts, const std::string& color,
                  double radius_px = 1.0, std::size_t max_points = 20000);
  void add_polyline(const std::vector<Complex>& pts, const std::string& color, bool closed = false,
                    double width_px = 1.5);
  void add_markers(const std::vector<Complex>& pts, const std::string& color,
                   double size_px = 5.0);

  void write(const std::string& path) const;

 private:
  struct Layer {
    int kind;  // 0 points, 1 polyline, 2 markers
    std::vector<Complex> pts;
    std::string color;
    double size;
    bool closed;
  };
  void extend_bounds(Complex z);
  double sx(double x) const;
  double sy(double y) const;

  int width_, height_;
  double xmin_ = 1e300, xmax_ = -1e300, ymin_ = 1e300, ymax_ = -1e300;
  std::vector<Layer> layers_;
};

}  // namespace prodrange

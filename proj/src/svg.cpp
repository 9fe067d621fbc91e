#include "prodrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "prodrange/errors.hpp"

namespace prodrange {

SvgPlot::SvgPlot(int width_px, int height_px) : width_(width_px), height_(height_px) {}

void SvgPlot::extend_bounds(Complex z) {
  xmin_ = std::min(xmin_, z.real());
  xmax_ = std::max(xmax_, z.real());
  ymin_ = std::min(ymin_, z.imag());
  ymax_ = std::max(ymax_, z.imag());
}

void SvgPlot::add_points(const std::vector<Complex>& pts, const std::string& color,
                         double radius_px, std::size_t max_points) {
  Layer l;
  l.kind = 0;
  l.color = color;
  l.size = radius_px;
  l.closed = false;
  std::size_t stride = std::max<std::size_t>(1, pts.size() / max_points);
  for (std::size_t i = 0; i < pts.size(); i += stride) l.pts.push_back(pts[i]);
  for (auto p : l.pts) extend_bounds(p);
  layers_.push_back(std::move(l));
}

void SvgPlot::add_polyline(const std::vector<Complex>& pts, const std::string& color, bool closed,
                           double width_px) {
  Layer l;
  l.kind = 1;
  l.color = color;
  l.size = width_px;
  l.closed = closed;
  l.pts = pts;
  for (auto p : l.pts) extend_bounds(p);
  layers_.push_back(std::move(l));
}

void SvgPlot::add_markers(const std::vector<Complex>& pts, const std::string& color,
                          double size_px) {
  Layer l;
  l.kind = 2;
  l.color = color;
  l.size = size_px;
  l.closed = false;
  l.pts = pts;
  for (auto p : l.pts) extend_bounds(p);
  layers_.push_back(std::move(l));
}

namespace {
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
}  // namespace

double SvgPlot::sx(double x) const {
  double span = std::max({xmax_ - xmin_, ymax_ - ymin_, 1e-12});
  return 40.0 + (x - xmin_) / span * (width_ - 80.0);
}

double SvgPlot::sy(double y) const {
  double span = std::max({xmax_ - xmin_, ymax_ - ymin_, 1e-12});
  return height_ - 40.0 - (y - ymin_) / span * (height_ - 80.0);
}

void SvgPlot::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
      << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width_ << "\" height=\"" << height_
      << "\" fill=\"white\"/>\n";
  // axes box with corner labels
  out << "<rect x=\"40\" y=\"40\" width=\"" << width_ - 80 << "\" height=\"" << height_ - 80
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  out << "<text x=\"6\" y=\"" << height_ - 26 << "\" font-size=\"11\" fill=\"#555\">" << num(xmin_)
      << "," << num(ymin_) << "</text>\n";
  out << "<text x=\"6\" y=\"34\" font-size=\"11\" fill=\"#555\">" << num(xmin_) << "," << num(ymax_)
      << "</text>\n";

  for (const auto& l : layers_) {
    if (l.kind == 0) {
      for (auto p : l.pts)
        out << "<circle cx=\"" << num(sx(p.real())) << "\" cy=\"" << num(sy(p.imag())) << "\" r=\""
            << num(l.size) << "\" fill=\"" << l.color << "\"/>\n";
    } else if (l.kind == 1) {
      out << (l.closed ? "<polygon" : "<polyline") << " points=\"";
      for (auto p : l.pts) out << num(sx(p.real())) << "," << num(sy(p.imag())) << " ";
      out << "\" fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"" << num(l.size)
          << "\"/>\n";
    } else {
      for (auto p : l.pts) {
        double cx = sx(p.real()), cy = sy(p.imag()), h = l.size;
        out << "<path d=\"M " << num(cx - h) << " " << num(cy) << " L " << num(cx + h) << " "
            << num(cy) << " M " << num(cx) << " " << num(cy - h) << " L " << num(cx) << " "
            << num(cy + h) << "\" stroke=\"" << l.color << "\" stroke-width=\"1.5\"/>\n";
      }
    }
  }
  out << "</svg>\n";
}

}  // namespace prodrange

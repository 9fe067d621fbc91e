#include "prodrange/json_io.hpp"

#include <fstream>

namespace prodrange {

namespace {
json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(context, "complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}
}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path, e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << j.dump(2) << "\n";
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(complex_to_json(e));
  return json{{"dims", m.dims()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& context) {
  if (!j.contains("dims") || !j.contains("entries"))
    throw ParseError(context, "matrix JSON needs \"dims\" and \"entries\"");
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw ParseError(context, "dims must be positive integers");
    dims.push_back(d.get<int>());
  }
  std::vector<Complex> entries;
  for (const auto& e : j["entries"]) entries.push_back(complex_from_json(e, context));
  try {
    return ComplexMatrix(dims, entries);
  } catch (const Error& e) {
    throw ParseError(context, e.what());
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json_file(path), path);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  save_json_file(path, matrix_to_json(m));
}

json region_to_json(const PlanarRegion& r) {
  if (r.is_polygon() || r.is_points()) {
    json pts = json::array();
    for (auto p : r.pts) pts.push_back(complex_to_json(p));
    return json{{r.is_polygon() ? "polygon" : "points", std::move(pts)}};
  }
  json rows = json::array();
  for (int i = 0; i < r.mask.height; ++i) {
    std::string row(r.mask.width, '0');
    for (int j = 0; j < r.mask.width; ++j)
      if (r.mask.get(i, j)) row[j] = '1';
    rows.push_back(std::move(row));
  }
  return json{{"raster",
               {{"origin", complex_to_json(r.mask.origin)},
                {"cell", r.mask.cell},
                {"rows", std::move(rows)}}}};
}

PlanarRegion region_from_json(const json& j, const std::string& context) {
  if (j.contains("polygon") || j.contains("points")) {
    bool poly = j.contains("polygon");
    std::vector<Complex> pts;
    for (const auto& p : j[poly ? "polygon" : "points"])
      pts.push_back(complex_from_json(p, context));
    if (pts.empty()) throw ParseError(context, "region needs at least one point");
    return poly ? PlanarRegion::polygon(std::move(pts)) : PlanarRegion::points(std::move(pts));
  }
  if (j.contains("raster")) {
    const json& r = j["raster"];
    if (!r.contains("origin") || !r.contains("cell") || !r.contains("rows"))
      throw ParseError(context, "raster region needs origin, cell, rows");
    double cell = r["cell"].get<double>();
    const auto& rows = r["rows"];
    int height = static_cast<int>(rows.size());
    if (height == 0) throw ParseError(context, "raster needs at least one row");
    int width = static_cast<int>(rows[0].get<std::string>().size());
    RasterMask m(complex_from_json(r["origin"], context), cell, width, height);
    for (int i = 0; i < height; ++i) {
      std::string row = rows[i].get<std::string>();
      if (static_cast<int>(row.size()) != width)
        throw ParseError(context, "ragged raster rows");
      for (int jj = 0; jj < width; ++jj)
        if (row[jj] == '1') m.set(i, jj);
    }
    return PlanarRegion::raster(std::move(m));
  }
  throw ParseError(context, "region JSON needs polygon, points, or raster");
}

PlanarRegion load_region(const std::string& path) {
  return region_from_json(load_json_file(path), path);
}

void save_region(const std::string& path, const PlanarRegion& r) {
  save_json_file(path, region_to_json(r));
}

json state_to_json(const ProductStateTuple& s) {
  json factors = json::array();
  for (const auto& f : s.factors) {
    json v = json::array();
    for (auto c : f) v.push_back(complex_to_json(c));
    factors.push_back(std::move(v));
  }
  return json{{"factors", std::move(factors)}};
}

json boundary_to_json(const RangeBoundary& b, bool with_witnesses) {
  json j;
  j["theta"] = b.theta;
  j["support"] = b.support;
  json pts = json::array();
  for (auto p : b.points) pts.push_back(complex_to_json(p));
  j["points"] = std::move(pts);
  json hull = json::array();
  for (auto p : b.hull) hull.push_back(complex_to_json(p));
  j["hull"] = std::move(hull);
  if (with_witnesses) {
    json ws = json::array();
    for (const auto& w : b.witnesses) {
      json v = json::array();
      for (auto c : w) v.push_back(complex_to_json(c));
      ws.push_back(std::move(v));
    }
    j["witnesses"] = std::move(ws);
  }
  return j;
}

void save_boundary_csv(const std::string& path, const RangeBoundary& b) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << "theta,support,re,im\n";
  out.precision(17);
  for (std::size_t i = 0; i < b.theta.size(); ++i)
    out << b.theta[i] << "," << b.support[i] << "," << b.points[i].real() << ","
        << b.points[i].imag() << "\n";
}

json report_to_json(const PnrReport& rep) {
  json j;
  switch (rep.method) {
    case PnrMethod::sampled: j["method"] = "sampled"; break;
    case PnrMethod::parametrized: j["method"] = "parametrized"; break;
    case PnrMethod::minkowski: j["method"] = "minkowski"; break;
    case PnrMethod::seesaw: j["method"] = "seesaw"; break;
  }
  json pts = json::array();
  for (auto p : rep.points) pts.push_back(complex_to_json(p));
  j["points"] = std::move(pts);
  if (rep.extrema) {
    j["extrema"] = {{"min", rep.extrema->min_value},
                    {"max", rep.extrema->max_value},
                    {"witnesses",
                     {{"min", state_to_json(rep.extrema->min_witness)},
                      {"max", state_to_json(rep.extrema->max_witness)}}}};
  }
  if (rep.radius) {
    j["radius"] = {{"lower", rep.radius->lower},
                   {"upper", rep.radius->upper},
                   {"witness", state_to_json(rep.radius->witness)}};
  }
  if (rep.barycenter) {
    j["barycenter"] = {{"value", complex_to_json(rep.barycenter->value)},
                       {"witness", state_to_json(rep.barycenter->witness)}};
  }
  if (rep.region) j["region"] = region_to_json(*rep.region);
  return j;
}

void save_points_csv(const std::string& path, const std::vector<Complex>& pts) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << "re,im\n";
  out.precision(17);
  for (auto p : pts) out << p.real() << "," << p.imag() << "\n";
}

json topology_to_json(const RegionTopology& t) {
  json per = json::object();
  for (auto [comp, holes] : t.per_component_genus) per[std::to_string(comp)] = holes;
  return json{{"components", t.components},
              {"genus", t.genus},
              {"isConvex", t.is_convex},
              {"resolution", t.resolution},
              {"hullAreaRatio", t.hull_area_ratio},
              {"perComponentGenus", std::move(per)},
              {"eulerCharacteristic", t.euler_characteristic}};
}

json bound_report_to_json(const SpectralBoundReport& r) {
  auto side = [](const ProductSearchResult& s, double value) {
    json j{{"found", s.found}, {"mu2", s.mu2}, {"spanResidual", s.span_residual}};
    if (s.found) {
      j["witness"] = state_to_json(s.state);
      j["value"] = value;
    }
    return j;
  };
  return json{{"K", r.dim_k},
              {"M", r.dim_m},
              {"spectrum", r.spectrum},
              {"lowerIdx", r.lower_idx},
              {"upperIdx", r.upper_idx},
              {"boundLow", r.bound_low},
              {"boundHigh", r.bound_high},
              {"maxSide", side(r.max_side, r.max_witness_value)},
              {"minSide", side(r.min_side, r.min_witness_value)},
              {"seesaw",
               {{"min", r.seesaw.min_value},
                {"max", r.seesaw.max_value},
                {"witnesses",
                 {{"min", state_to_json(r.seesaw.min_witness)},
                  {"max", state_to_json(r.seesaw.max_witness)}}}}}};
}

void save_mask_pbm(const std::string& path_base, const RasterMask& m) {
  {
    std::ofstream out(path_base + ".pbm");
    if (!out) throw ParseError(path_base + ".pbm", "cannot open file for writing");
    out << "P1\n" << m.width << " " << m.height << "\n";
    for (int i = 0; i < m.height; ++i) {
      for (int j = 0; j < m.width; ++j) out << (m.get(i, j) ? '1' : '0');
      out << "\n";
    }
  }
  save_json_file(path_base + ".json",
                 json{{"origin", complex_to_json(m.origin)},
                      {"cell", m.cell},
                      {"width", m.width},
                      {"height", m.height}});
}

}  // namespace prodrange

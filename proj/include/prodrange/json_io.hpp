#pragma once

#include <string>

#include <json.hpp>

#include "prodrange/hermitian_bounds.hpp"
#include "prodrange/numerical_range.hpp"
#include "prodrange/product_range.hpp"
#include "prodrange/raster_topology.hpp"

namespace prodrange {

using nlohmann::json;

// Matrix interchange format: {"dims":[m1,...,mk],"entries":[[re,im],...]},
// entries row-major of length N^2.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& context);
ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

// Region tagged union: {"polygon": [[re,im],...]} | {"points": [...]} |
// {"raster": {"origin":[re,im],"cell":h,"rows":["0110...",...]}}
json region_to_json(const PlanarRegion& r);
PlanarRegion region_from_json(const json& j, const std::string& context);
PlanarRegion load_region(const std::string& path);
void save_region(const std::string& path, const PlanarRegion& r);

json state_to_json(const ProductStateTuple& s);
json boundary_to_json(const RangeBoundary& b, bool with_witnesses = true);
void save_boundary_csv(const std::string& path, const RangeBoundary& b);

json report_to_json(const PnrReport& rep);
void save_points_csv(const std::string& path, const std::vector<Complex>& pts);

json topology_to_json(const RegionTopology& t);
json bound_report_to_json(const SpectralBoundReport& r);

// Plain-text PBM (P1) plus a JSON frame header next to it.
void save_mask_pbm(const std::string& path_base, const RasterMask& m);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace prodrange

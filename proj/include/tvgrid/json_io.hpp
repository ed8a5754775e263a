// JSON schemas for grids, witnesses, complexes, and reports. All numerics
// serialize as rational strings ("a/b", or "a" for integers) so exactness
// survives the round trip; key order is fixed for byte-stable output.
#pragma once

#include "tvgrid/complexes.hpp"
#include "tvgrid/grid.hpp"
#include "tvgrid/homology.hpp"

#include <json.hpp>

#include <string>

namespace tvgrid {

using Json = nlohmann::ordered_json;

Json grid_to_json(const PointGrid& grid);
PointGrid grid_from_json(const Json& json);

Json point_to_json(const RationalPoint& point);
RationalPoint point_from_json(const Json& json);

Json witness_to_json(const TverbergWitness& witness);

Json line_to_json(const Line& line);

Json complex_to_json(const SimplicialComplex& complex);

Json homology_report_to_json(const std::string& complex_name,
                             const ConnectivityCheck& check);

}  // namespace tvgrid

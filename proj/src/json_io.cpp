#include "tvgrid/json_io.hpp"

#include <stdexcept>

namespace tvgrid {

Json point_to_json(const RationalPoint& point) {
  Json out = Json::array();
  for (const auto& coordinate : point) out.push_back(format_rational(coordinate));
  return out;
}

RationalPoint point_from_json(const Json& json) {
  if (!json.is_array()) throw std::invalid_argument("point must be an array");
  RationalPoint point;
  for (const auto& item : json) {
    point.push_back(parse_rational(item.get<std::string>()));
  }
  return point;
}

Json grid_to_json(const PointGrid& grid) {
  Json out;
  out["d"] = grid.params.d;
  out["m"] = grid.params.m;
  out["n"] = grid.params.n;
  out["p"] = grid.params.p;
  Json points = Json::object();
  for (const auto& [index, point] : grid.points) {
    points[grid_index_key(index)] = point_to_json(point);
  }
  out["points"] = std::move(points);
  return out;
}

PointGrid grid_from_json(const Json& json) {
  PointGrid grid;
  try {
    grid.params.d = json.at("d").get<int>();
    grid.params.m = json.at("m").get<int>();
    grid.params.n = json.at("n").get<int>();
    grid.params.p = json.at("p").get<int>();
    for (const auto& [key, value] : json.at("points").items()) {
      grid.points.emplace(parse_grid_index_key(key), point_from_json(value));
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed grid JSON: ") + e.what());
  }
  validate_grid(grid);
  return grid;
}

Json witness_to_json(const TverbergWitness& witness) {
  Json out;
  out["axis"] = witness.axis;
  Json parts = Json::array();
  for (const auto& part : witness.partition.parts) parts.push_back(part);
  out["parts"] = std::move(parts);
  out["point"] = point_to_json(witness.witness.point);
  Json coefficients = Json::object();
  for (std::size_t j = 0; j < witness.part_vertices.size(); ++j) {
    Json per_part = Json::object();
    const auto& vertices = witness.part_vertices[j];
    const auto& coeffs = witness.witness.coefficients[j];
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (coeffs[v] != 0) {
        per_part[grid_index_key(vertices[v])] = format_rational(coeffs[v]);
      }
    }
    coefficients[std::to_string(j + 1)] = std::move(per_part);
  }
  out["coefficients"] = std::move(coefficients);
  return out;
}

Json line_to_json(const Line& line) {
  Json out;
  out["base"] = point_to_json(line.base);
  Json direction = Json::array();
  for (const auto& c : line.direction) direction.push_back(format_rational(c));
  out["direction"] = std::move(direction);
  return out;
}

Json complex_to_json(const SimplicialComplex& complex) {
  Json out;
  out["vertices"] = complex.labels();
  Json facets = Json::array();
  for (const auto& facet : complex.facets()) facets.push_back(facet);
  out["facets"] = std::move(facets);
  return out;
}

Json homology_report_to_json(const std::string& complex_name,
                             const ConnectivityCheck& check) {
  Json out;
  out["complex"] = complex_name;
  out["target"] = check.target;
  out["vacuous"] = check.vacuous;
  Json fields = Json::array();
  for (const auto& report : check.reports) {
    Json entry;
    entry["field"] = report.field.name();
    entry["betti"] = report.betti;
    entry["connectivity"] = report.connectivity;
    fields.push_back(std::move(entry));
  }
  out["fields"] = std::move(fields);
  out["field_disagreement"] = check.field_disagreement;
  out["pass"] = check.pass;
  return out;
}

}  // namespace tvgrid

#include "irank/matrix_file.hpp"

#include "irank/errors.hpp"

namespace irank {
namespace {

using nlohmann::json;

Rational parse_entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw ParseError("matrix entries must be number strings or integers, got " + v.dump());
}

PointMatrix parse_grid(const json& doc, const char* key, std::size_t rows, std::size_t cols) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing array \"") + key + "\"");
  const json& grid = doc[key];
  if (grid.size() != rows) throw ParseError(std::string("\"") + key + "\" does not have rows rows");
  PointMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = grid[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string("\"") + key + "\" row " + std::to_string(i) + " does not have cols entries");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = parse_entry(row[j]);
  }
  return out;
}

json grid_to_json(const PointMatrix& a) {
  json grid = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    grid.push_back(std::move(row));
  }
  return grid;
}

}  // namespace

IntervalMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
  for (const char* key : {"rows", "cols"})
    if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::size_t>() == 0)
      throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  const PointMatrix lower = parse_grid(doc, "min", rows, cols);
  const PointMatrix upper = parse_grid(doc, "max", rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (lower(i, j) > upper(i, j))
        throw ParseError("min exceeds max at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  return make_interval_matrix(lower, upper);
}

IntervalMatrix parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

json matrix_to_json(const IntervalMatrix& mu) {
  return json{{"rows", mu.rows()},
              {"cols", mu.cols()},
              {"min", grid_to_json(lower_bounds(mu))},
              {"max", grid_to_json(upper_bounds(mu))}};
}

std::string serialize_matrix_file(const IntervalMatrix& mu) { return matrix_to_json(mu).dump(2) + "\n"; }

json point_matrix_to_json(const PointMatrix& a) { return grid_to_json(a); }

}  // namespace irank

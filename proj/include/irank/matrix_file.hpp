#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "irank/matrix.hpp"

namespace irank {

/// JSON matrix file:
///   {"rows": p, "cols": q, "min": [[...], ...], "max": [[...], ...]}
/// Entries are number strings ("3", "-1.5", "7/2") or JSON integers.
/// Throws ParseError on malformed input, including min > max.
IntervalMatrix parse_matrix_file(std::string_view text);
IntervalMatrix matrix_from_json(const nlohmann::json& doc);

/// Canonical form: entries as "n" or "n/d" strings.
nlohmann::json matrix_to_json(const IntervalMatrix& mu);
std::string serialize_matrix_file(const IntervalMatrix& mu);

nlohmann::json point_matrix_to_json(const PointMatrix& a);

}  // namespace irank

#pragma once

#include <string>

#include <json.hpp>

#include "fatpoints/bounds.hpp"
#include "fatpoints/cohomology.hpp"
#include "fatpoints/geometry.hpp"

namespace fatpoints {

using json = nlohmann::ordered_json;

/// Scheme file format:
///   {"prime": 32749, "n": 4, "points": [[1,0,0,0,0], ...],
///    "multiplicities": [3,3,3,3,3,3,3]}
/// Coordinates are integers, reduced mod p on load; the writer emits
/// normalized representatives.
json scheme_to_json(const FatPointScheme& Z);
FatPointScheme scheme_from_json(const json& j);

FatPointScheme load_scheme(const std::string& path);
void save_scheme(const FatPointScheme& Z, const std::string& path);

json report_to_json(const CohomologyReport& rep);
json bound_report_to_json(const BoundReport& rep);
std::string bound_report_csv_header();
std::string bound_report_to_csv(const BoundReport& rep);

}  // namespace fatpoints

#pragma once

#include <string>

#include "json.hpp"
#include "thetaloc/census.hpp"
#include "thetaloc/characteristic.hpp"
#include "thetaloc/incidence.hpp"
#include "thetaloc/siegel.hpp"

namespace thetaloc {

// Ordered JSON keeps field order stable across runs so serialized artifacts
// diff reproducibly. Doubles are written in shortest-round-trip form, so
// parse → serialize → parse is exact.
using Json = nlohmann::ordered_json;

Json to_json(const Characteristic& delta);
Characteristic characteristic_from_json(const Json& j);

Json to_json(const PeriodMatrix& omega);
PeriodMatrix period_matrix_from_json(const Json& j);

Json to_json_vector(const Eigen::VectorXcd& z);
Eigen::VectorXcd vector_from_json(const Json& j);

Json to_json(const SymplecticMatrix& m);
SymplecticMatrix symplectic_from_json(const Json& j);

Json to_json(const Grouping& grouping);
Grouping grouping_from_json(const Json& j);

Json to_json(const NerveInput& input);
NerveInput nerve_input_from_json(const Json& j);

Json to_json(const StratumPoint& point);
StratumPoint stratum_point_from_json(const Json& j);

Json to_json(const IncidenceReport& report);
IncidenceReport incidence_report_from_json(const Json& j);

std::string to_string(Classification cls);
Classification classification_from_string(const std::string& s);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Detect the payload type by its keys (period matrix, characteristic,
// symplectic matrix, grouping, nerve input, stratum point, incidence report,
// or z vector), parse it, serialize, reparse, and compare. Schema violations
// throw with the offending field named.
bool io_roundtrip(const std::string& path);

}  // namespace thetaloc

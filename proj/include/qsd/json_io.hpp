#pragma once

// JSON state files and report rendering for the command line tool. Complex
// values serialize as [re, im] pairs; state files round-trip bit-exactly,
// reports use a fixed 12-significant-digit format.

#include <string>

#include "qsd/majorize.hpp"

// the vendored single-header json library
#include "json.hpp"

namespace qsd {

using Json = nlohmann::ordered_json;

struct JsonError : Error {
    using Error::Error;
};

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

PureState pure_state_from_json(const Json& j);
DensityOperator density_from_json(const Json& j);
State state_from_json(const Json& j);
Ensemble ensemble_from_json(const Json& j);
ProbVector probvector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);  // bare complex matrix, no validation

Json to_json(const PureState& s);
Json to_json(const DensityOperator& rho);
Json to_json(const Ensemble& e);
Json to_json(const Matrix& m);
Json to_json(const RealVector& v);

// Rounds to 12 significant digits so reports render identically across runs.
double report_round(double v);

// Report verdict tolerance, overridable through QSD_TOLERANCE.
double report_tolerance(double fallback);

}  // namespace qsd

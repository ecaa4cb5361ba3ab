#pragma once

#include <json.hpp>
#include <string>

#include "solvclass/classify.hpp"
#include "solvclass/geometry.hpp"

namespace solvclass {

using json = nlohmann::json;

/// Numbers are emitted as JSON integers when they fit, decimal strings
/// otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// RadExt as a list of (radicand, numerator, denominator) triples.
json radext_to_json(const RadExt& v);
RadExt radext_from_json(const json& j);

/// {"n": int, "arrows": [[i,j,k], ...]} — one unordered class per entry, i<j.
json diagram_to_json(const NiceDiagram& d);
/// Applies the symmetry closure; throws std::runtime_error on invalid input.
NiceDiagram diagram_from_json(const json& j);

json record_to_json(const SolutionRecord& rec);
SolutionRecord record_from_json(const json& j);

/// Explicit metric Lie algebra:
/// {"n": int, "metric": [...], "brackets": [{"i":..,"j":..,"k":..,"c": radext}]}.
json algebra_to_json(const MetricLieAlgebra& L);
MetricLieAlgebra algebra_from_json(const json& j);

json report_to_json(const ClassificationReport& report);

/// Nilpotent algebra, metric and derivation encoded by a record.
MetricLieAlgebra record_algebra(const SolutionRecord& rec);
RadMatrix record_derivation(const SolutionRecord& rec);

}  // namespace solvclass

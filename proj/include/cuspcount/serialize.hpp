#pragma once

#include <string>
#include <utility>

#include "cuspcount/perturbed.hpp"
#include "cuspcount/spectrum.hpp"
#include "json.hpp"

namespace cuspcount {

using OrderedJson = nlohmann::ordered_json;

// Comma-separated axes. Each axis is a rational followed by an optional
// perturbation: a bare "+" or "-" for one unit of delta, or explicit terms
// "+k*eps", "-k*eps^2", ... with rational k.
EllipsoidShape parse_shape(const std::string& text);

// Sum of "l" and "e" terms with optional integer coefficients, e.g. "5l-2e".
// Returns the (l, e) coefficients.
std::pair<long long, long long> parse_class_spec(const std::string& text);

OrderedJson perturbed_to_json(const PerturbedRational& v);
PerturbedRational perturbed_from_json(const OrderedJson& j);

OrderedJson shape_to_json(const EllipsoidShape& a);
EllipsoidShape shape_from_json(const OrderedJson& j);

OrderedJson orbit_to_json(const ReebOrbit& o);
ReebOrbit orbit_from_json(const OrderedJson& j);

}  // namespace cuspcount

#pragma once

#include <json.hpp>

#include "padspec/projector.hpp"
#include "padspec/spectral.hpp"

namespace padspec {

using Json = nlohmann::json;

// Scalars: {"p":5,"precision":16,"valuation":2,"unit":"2"} with the unit as a
// decimal string; zero is {"p":5,"precision":16,"zero":true}. All parsers
// throw InputError on malformed input.
Json scalar_to_json(const PadicScalar& x);
PadicScalar scalar_from_json(const Json& j);

Json lognorm_to_json(const LogNorm& n);      // {"exponent":"-1/2"} or {"exponent":"inf"}
LogNorm lognorm_from_json(const Json& j);

Json space_to_json(const WeightedSpace& s);  // {"p":...,"precision":...,"omega":[...]}
SpacePtr space_from_json(const Json& j);

Json vector_to_json(const Vector& x);        // {"space":{...},"coords":[...]}
Vector vector_from_json(const Json& j);

Json operator_to_json(const Operator& u);    // {"space":{...},"entries":[[...],...]}
Operator operator_from_json(const Json& j);

// {"space":{...},"partition":[[0,1],[2]],"alpha0":...,"alphas":[...]}
Json belement_to_json(const BElement& u);
BElement belement_from_json(const Json& j);

// {"kind":"finite","atoms":[...]} or {"kind":"zp","p":5,"resolution":2}
Json algebra_to_json(const ClopenAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j);

Json clopen_set_to_json(const ClopenSet& s);  // list of atom labels
ClopenSet clopen_set_from_json(const Json& j, const AlgebraPtr& algebra);

// {"algebra":{...},"space":{...},"projectors":{"a":[[...],...],...}}
Json pvm_to_json(const ProjectionValuedMeasure& p);
ProjectionValuedMeasure pvm_from_json(const Json& j);

// {"algebra":{...},"pieces":[{"set":["a"],"value":...},...]}; the pieces-only
// overload reads within a known algebra and scalar field.
Json step_to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j);
StepFunction step_from_json(const Json& j, const AlgebraPtr& algebra, std::int64_t p,
                            std::int32_t precision);

// {"algebra":{...},"values":{"a":scalar,...}}
Json kmeasure_to_json(const KMeasure& mu);
KMeasure kmeasure_from_json(const Json& j);

// {"algebra":{...},"space":{...},"table":{"a":[[...],...],...}}; table entries
// may also be full operator objects.
Json rep_to_json(const FiniteRepresentation& t);
FiniteRepresentation rep_from_json(const Json& j);

// {"support":[scalar,...],"pvm":{...}} with the support in canonical order
Json decomposition_to_json(const SpectralDecomposition& d);
SpectralDecomposition decomposition_from_json(const Json& j);

}  // namespace padspec

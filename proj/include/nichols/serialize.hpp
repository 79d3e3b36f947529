#pragma once

#include "json.hpp"

#include "nichols/hopf_core.hpp"
#include "nichols/report.hpp"

namespace nichols {

using Json = nlohmann::ordered_json;

/// Version of every document written by this module.
inline constexpr int kFormatVersion = 1;

/// TruncatedHopf as a JSON document. Scalars are strings in the scalar
/// syntax; sparse vectors are lists of [index, scalar] pairs.
Json to_json(const TruncatedHopf& h);
/// Inverse of to_json. Throws Error("BadDocument").
TruncatedHopf hopf_from_json(const Json& j);

Json to_json(const AxiomReport& r);

} // namespace nichols

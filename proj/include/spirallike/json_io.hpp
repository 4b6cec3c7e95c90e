#pragma once

#include "spirallike/radii.hpp"
#include "spirallike/samples.hpp"
#include "spirallike/verify.hpp"

#include <json.hpp>

#include <string_view>

namespace spirallike {

using Json = nlohmann::ordered_json;

/// Schema tag written into every verification report.
inline constexpr std::string_view kReportSchema = "v1";

/// {"atoms": [{"w": weight, "theta": angle}, ...]}
Json to_json(const HerglotzMeasure& m);

/// Inverse of to_json(HerglotzMeasure); throws std::invalid_argument on malformed input
/// or when the atoms violate the measure invariants.
HerglotzMeasure measure_from_json(const Json& j);

Json to_json(const RadiusReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const FalsifyResult& r);

} // namespace spirallike

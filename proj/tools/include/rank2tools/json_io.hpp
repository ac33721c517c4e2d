#pragma once

#include <json.hpp>

#include "rank2/laurent.hpp"

namespace rank2::tools {

/// {"terms":[{"e":[d1,d2],"c":"<decimal>"}, ...]} in lex order.
nlohmann::json to_json(const LaurentPoly& p);

/// Inverse of to_json; throws Error on malformed input.
LaurentPoly laurent_from_json(const nlohmann::json& j);

} // namespace rank2::tools

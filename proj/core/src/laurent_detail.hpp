#pragma once

#include <functional>

#include "rank2/laurent.hpp"

namespace rank2::detail {

/// Thrown when a long computation is abandoned through its stop callback.
struct Cancelled : Error {
  Cancelled() : Error("cancelled") {}
};

/// substitute_inverse with a stop callback polled between rows.
LaurentPoly substitute_inverse(const LaurentPoly& p, int var, const LaurentPoly& g,
                               const std::function<bool()>& stop);

} // namespace rank2::detail

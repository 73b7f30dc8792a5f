#pragma once

#include "uniairy/precision.hpp"

namespace uniairy {

// Gamma(x) for x > 0 at ctx precision.
Real gamma_fn(const Real& x, const PrecisionContext& ctx);

// Complete elliptic integral of the first kind, 0 <= k < 1, by the AGM.
Real elliptic_K(const Real& k, const PrecisionContext& ctx);

} // namespace uniairy

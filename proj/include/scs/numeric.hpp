#pragma once

#include <algorithm>
#include <cmath>

namespace scs {

// Threshold a weight delta must clear to count as a strict improvement.
// Scaled to the magnitude of the objective so that accumulated rounding in
// sums of stored weights can never register as progress, while genuine
// improvements (which are bounded away from zero by the instance's weight
// granularity) always do.
inline double improvement_epsilon(double scale) {
    return 1e-11 * std::max(1.0, std::abs(scale));
}

} // namespace scs

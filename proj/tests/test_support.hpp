#pragma once

#include <cmath>

#include "qinv/states.hpp"

namespace qinv::test {

// |m - e| <= rtol * max(|e|, scale); the scale floor handles expected zeros
// and Delta333's tiny range
inline bool close_scaled(double measured, double expected, double rtol, double scale) {
    return std::abs(measured - expected) <= rtol * std::max(std::abs(expected), scale);
}

inline double max_amp_diff(const QutritState& x, const QutritState& y) {
    double worst = 0.0;
    for (int t = 0; t < 27; ++t) worst = std::max(worst, std::abs(x.a[t] - y.a[t]));
    return worst;
}

inline SemiSimpleCoeffs raw_uniform_triple(Rng& rng) {
    return {rng.uniform_pm1(), rng.uniform_pm1(), rng.uniform_pm1()};
}

}  // namespace qinv::test

#pragma once

#include <cmath>
#include <numbers>

namespace hopfbloch {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle into [0, 2pi).
inline double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a value just below a multiple of 2pi can round up to 2pi
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Signed difference a - b reduced to (-pi, pi].
inline double angle_diff(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -kPi) d += kTwoPi;
    return d;
}

/// Wrap-aware distance between two azimuths, in [0, pi].
inline double angle_distance(double a, double b) { return std::abs(angle_diff(a, b)); }

}  // namespace hopfbloch

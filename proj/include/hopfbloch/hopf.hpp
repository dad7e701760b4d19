#pragma once

/**
 * The Hopf map S^7 -> S^4 as a composition: h1 sends a normalized quaternion
 * pair to R^4 by quaternion division, then the inverse stereographic projection
 * lands on S^4 minus its North pole (1,0,0,0,0). Pairs that differ by a common
 * right factor q_f (|q_f| = 1) map to the same point.
 */

#include "hopfbloch/flags.hpp"
#include "hopfbloch/quaternion.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

struct HopfPointR4 {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double q4 = 0.0;

    constexpr double norm2() const { return q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4; }
    /// Q1 + Q2 i + Q3 j + Q4 k
    constexpr Quaternion as_quaternion() const { return {q1, q2, q3, q4}; }
    static constexpr HopfPointR4 from_quaternion(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
};

/// Cartesian point of the unit 4-sphere embedded in R^5.
struct S4Point {
    double x0 = -1.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    static constexpr S4Point north_pole() { return {1.0, 0.0, 0.0, 0.0, 0.0}; }

    constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4; }
    /// Canonical (non-negative) b = |(x2, x3, x4)|.
    double b() const { return std::sqrt(x2 * x2 + x3 * x3 + x4 * x4); }
    /// c = |(x2, x3)|.
    double c() const { return std::hypot(x2, x3); }
    bool is_north_pole() const { return x0 >= 1.0 - kZeroTol; }

    /// The pure quaternion b t = x2 i + x3 j + x4 k.
    constexpr Quaternion bt() const { return {0.0, x2, x3, x4}; }
};

/**
 * Q = q1 conj(q0) / |q1|^2.
 * Throws Error(NotNormalized) if |q0|^2 + |q1|^2 is off 1 by more than kUnitTol,
 * Error(FiberAtInfinity) when |q1| <= kZeroTol (the pair sits over the North pole).
 */
HopfPointR4 h1(const Quaternion& q0, const Quaternion& q1);

/// x0 = (|Q|^2 - 1)/(|Q|^2 + 1), x_i = 2 Q_i / (|Q|^2 + 1).
S4Point inverse_stereographic(const HopfPointR4& q);

/// Q_i = x_i / (1 - x0). Throws Error(NorthPole) when x0 >= 1 - kZeroTol.
HopfPointR4 stereographic(const S4Point& p);

/// h2 o h1, assigning the North pole directly when q1 vanishes.
S4Point base_point(const Quaternion& q0, const Quaternion& q1);

/**
 * x0 = cos(theta), x1 = sin(theta)cos(phi), and with b = sin(theta)sin(phi):
 * (x2, x3, x4) = b (sin(chi)cos(xi), sin(chi)sin(xi), cos(chi)).
 */
S4Point base_from_angles(double theta, double phi, double chi, double xi);

struct BaseAngles {
    double theta = 0.0;
    double phi = 0.0;
    double chi = 0.0;
    double xi = 0.0;
    Flags flags;
};

/**
 * Inverts base_from_angles on the b >= 0 branch (phi in [0, pi]).
 *
 * Undefined angles get conventional values and a flag: phi = 0 when
 * sin(theta) <= kZeroTol; t = k (chi = xi = 0) when b <= kZeroTol; xi = 0 when
 * c <= kZeroTol. Throws Error(OffSphere) when |sum x_i^2 - 1| > kUnitTol.
 */
BaseAngles angles_from_base(const S4Point& p);

}  // namespace hopfbloch

#pragma once

/**
 * Real quaternions q = w + xi + yj + zk with i^2 = j^2 = k^2 = ijk = -1.
 *
 * Throughout the library k doubles as the imaginary unit of ordinary complex
 * numbers, so a complex number a + b*k is the quaternion (a, 0, 0, b) and every
 * quaternion splits uniquely as u + v*j with complex u, v.
 */

#include <cmath>
#include <complex>

#include "hopfbloch/linalg.hpp"

namespace hopfbloch {

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr explicit Quaternion(double real) : w(real) {}

    /// Embeds a + b*k.
    static constexpr Quaternion from_complex(Complex c) { return {c.real(), 0.0, 0.0, c.imag()}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    // Hamilton product
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    constexpr bool is_pure() const { return w == 0.0; }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline constexpr Quaternion kQOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQK{0.0, 0.0, 0.0, 1.0};

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }

/// conj(q) / |q|^2. Throws Error(ZeroNorm) when |q| <= kZeroTol.
Quaternion inverse(const Quaternion& q);

/**
 * A pure unit quaternion t = t_x i + t_y j + t_z k, t^2 = -1.
 *
 * Polar angle chi is measured from +k, azimuth xi from +i towards +j:
 * t = i sin(chi)cos(xi) + j sin(chi)sin(xi) + k cos(chi).
 */
class PureUnitQuaternion {
public:
    /// Defaults to k.
    constexpr PureUnitQuaternion() = default;

    /// Throws Error(NotPureUnit) unless |(x,y,z)| is 1 within kUnitTol.
    static PureUnitQuaternion from_components(double x, double y, double z);
    /// Throws Error(NotPureUnit) if q has a real part or is not unit.
    static PureUnitQuaternion from_quaternion(const Quaternion& q);
    static PureUnitQuaternion from_angles(double chi, double xi);

    constexpr double x() const { return x_; }
    constexpr double y() const { return y_; }
    constexpr double z() const { return z_; }

    /// atan2(sqrt(tx^2 + ty^2), tz), in [0, pi].
    double chi() const;
    /// atan2(ty, tx) mapped into [0, 2pi).
    double xi() const;

    constexpr Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }
    constexpr PureUnitQuaternion operator-() const { return PureUnitQuaternion(-x_, -y_, -z_); }

private:
    constexpr PureUnitQuaternion(double x, double y, double z) : x_(x), y_(y), z_(z) {}

    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 1.0;
};

/// e^{t phi} = cos(phi) + t sin(phi).
Quaternion exp_pure(const PureUnitQuaternion& t, double phi);
/// Same, validating an arbitrary quaternion as the axis first (NotPureUnit).
Quaternion exp_pure(const Quaternion& t, double phi);

/**
 * Returns conj(q) t q. For q = e^{k zeta} this rotates t clockwise about the
 * k-axis by 2 zeta. Pass conj(q) to get q t conj(q) instead.
 * Throws Error(NotUnit) unless |q| = 1 within kUnitTol.
 */
PureUnitQuaternion conjugate_rotate(const Quaternion& q, const PureUnitQuaternion& t);

struct ComplexPair {
    Complex u;
    Complex v;
};

/// Splits q = u + v j (u, v complex in k). Exact.
constexpr ComplexPair to_complex_pair(const Quaternion& q) {
    return {Complex(q.w, q.z), Complex(q.y, -q.x)};
}

/// Builds u + v j. Exact inverse of to_complex_pair.
constexpr Quaternion from_complex_pair(Complex u, Complex v) {
    return {u.real(), -v.imag(), v.real(), u.imag()};
}

}  // namespace hopfbloch

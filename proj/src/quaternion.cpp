#include "hopfbloch/quaternion.hpp"

#include <cmath>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm2();
    if (!(std::sqrt(n2) > kZeroTol)) throw Error(ErrorKind::ZeroNorm, "inverse of a zero quaternion");
    return q.conj() / n2;
}

PureUnitQuaternion PureUnitQuaternion::from_components(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTol)
        throw Error(ErrorKind::NotPureUnit, "imaginary unit must have unit norm");
    return PureUnitQuaternion(x / n, y / n, z / n);
}

PureUnitQuaternion PureUnitQuaternion::from_quaternion(const Quaternion& q) {
    if (std::abs(q.w) > kUnitTol) throw Error(ErrorKind::NotPureUnit, "imaginary unit must have zero real part");
    return from_components(q.x, q.y, q.z);
}

PureUnitQuaternion PureUnitQuaternion::from_angles(double chi, double xi) {
    const double s = std::sin(chi);
    return PureUnitQuaternion(s * std::cos(xi), s * std::sin(xi), std::cos(chi));
}

double PureUnitQuaternion::chi() const { return std::atan2(std::hypot(x_, y_), z_); }

double PureUnitQuaternion::xi() const { return wrap_angle(std::atan2(y_, x_)); }

Quaternion exp_pure(const PureUnitQuaternion& t, double phi) {
    const double s = std::sin(phi);
    return {std::cos(phi), t.x() * s, t.y() * s, t.z() * s};
}

Quaternion exp_pure(const Quaternion& t, double phi) {
    return exp_pure(PureUnitQuaternion::from_quaternion(t), phi);
}

PureUnitQuaternion conjugate_rotate(const Quaternion& q, const PureUnitQuaternion& t) {
    if (std::abs(q.norm() - 1.0) > kUnitTol) throw Error(ErrorKind::NotUnit, "rotor must be a unit quaternion");
    const Quaternion r = q.conj() * t.as_quaternion() * q;
    return PureUnitQuaternion::from_components(r.x, r.y, r.z);
}

}  // namespace hopfbloch

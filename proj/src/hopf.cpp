#include "hopfbloch/hopf.hpp"

#include <cmath>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

HopfPointR4 h1(const Quaternion& q0, const Quaternion& q1) {
    const double n0 = q0.norm2();
    const double n1 = q1.norm2();
    if (std::abs(n0 + n1 - 1.0) > kUnitTol)
        throw Error(ErrorKind::NotNormalized, "quaternion pair must satisfy |q0|^2 + |q1|^2 = 1");
    if (std::sqrt(n1) <= kZeroTol)
        throw Error(ErrorKind::FiberAtInfinity, "q1 = 0 maps to the North pole of S^4");
    return HopfPointR4::from_quaternion(q1 * q0.conj() / n1);
}

S4Point inverse_stereographic(const HopfPointR4& q) {
    const double n2 = q.norm2();
    const double d = n2 + 1.0;
    return {(n2 - 1.0) / d, 2.0 * q.q1 / d, 2.0 * q.q2 / d, 2.0 * q.q3 / d, 2.0 * q.q4 / d};
}

HopfPointR4 stereographic(const S4Point& p) {
    if (p.x0 >= 1.0 - kZeroTol) throw Error(ErrorKind::NorthPole, "stereographic projection undefined at the North pole");
    const double d = 1.0 - p.x0;
    return {p.x1 / d, p.x2 / d, p.x3 / d, p.x4 / d};
}

S4Point base_point(const Quaternion& q0, const Quaternion& q1) {
    if (q1.norm() <= kZeroTol) {
        if (std::abs(q0.norm2() + q1.norm2() - 1.0) > kUnitTol)
            throw Error(ErrorKind::NotNormalized, "quaternion pair must satisfy |q0|^2 + |q1|^2 = 1");
        return S4Point::north_pole();
    }
    return inverse_stereographic(h1(q0, q1));
}

S4Point base_from_angles(double theta, double phi, double chi, double xi) {
    const double st = std::sin(theta);
    const double b = st * std::sin(phi);
    const double c = b * std::sin(chi);
    return {std::cos(theta), st * std::cos(phi), c * std::cos(xi), c * std::sin(xi), b * std::cos(chi)};
}

BaseAngles angles_from_base(const S4Point& p) {
    if (!(std::abs(p.norm2() - 1.0) <= kUnitTol)) throw Error(ErrorKind::OffSphere, "point is not on the unit 4-sphere");

    BaseAngles out;
    const double b = p.b();
    const double c = p.c();
    const double sin_theta = std::hypot(p.x1, b);
    out.theta = std::atan2(sin_theta, p.x0);

    if (sin_theta <= kZeroTol) {
        out.phi = 0.0;
        out.flags.set(CoordFlag::PhiAUndefined);
    } else {
        out.phi = std::atan2(b, p.x1);
    }

    if (b <= kZeroTol) {
        out.chi = 0.0;
        out.xi = 0.0;
        out.flags.set(CoordFlag::TUndefined);
        return out;
    }
    out.chi = std::atan2(c, p.x4);
    if (c <= kZeroTol) {
        out.xi = 0.0;
        out.flags.set(CoordFlag::XiUndefined);
    } else {
        out.xi = wrap_angle(std::atan2(p.x3, p.x2));
    }
    return out;
}

}  // namespace hopfbloch

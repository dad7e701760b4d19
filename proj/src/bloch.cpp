#include "hopfbloch/bloch.hpp"

#include <cmath>
#include <string>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

double BlochCoordinates::b() const { return std::sin(theta_a) * std::sin(phi_a); }

double BlochCoordinates::c() const { return b() * std::sin(chi); }

S4Point BlochCoordinates::base() const { return base_from_angles(theta_a, phi_a, chi, xi); }

std::array<double, 3> BlochCoordinates::qubit_b_cartesian() const {
    const double s = std::sin(theta_b);
    return {s * std::cos(phi_b), s * std::sin(phi_b), std::cos(theta_b)};
}

SouthPoleAError::SouthPoleAError(const SingleQubitState& psi_b, double one_plus_x0)
    : Error(ErrorKind::SouthPoleA,
            "state is |1>_A (x) |psi_B> (1 + x0 = " + std::to_string(one_plus_x0) +
                "); represent it as two single-qubit states"),
      psi_b_(psi_b) {}

namespace {

double one_plus_x0(const TwoQubitState& s) {
    // 1 + x0 = 2(|alpha|^2 + |beta|^2), free of cancellation
    return 2.0 * (std::norm(s.alpha()) + std::norm(s.beta()));
}

SingleQubitState qubit_b_fallback(const TwoQubitState& s) {
    // exact |1>_A (x) |psi_B>: the state is already unit, keep psi_B bit for bit
    if (s.alpha() == Complex() && s.beta() == Complex()) return {s.gamma(), s.delta()};
    const double n = std::sqrt(std::norm(s.gamma()) + std::norm(s.delta()));
    return {s.gamma() / n, s.delta() / n};
}

// Fills theta_B, phi_B, zeta_B from q_B = (cos(theta_B/2) + sin(theta_B/2) e^{k phi_B} j) e^{k zeta_B}.
void set_fiber_angles(const Quaternion& q_b, BlochCoordinates& out) {
    const auto [u, v] = to_complex_pair(q_b);
    const double au = std::abs(u);
    const double av = std::abs(v);
    out.theta_b = 2.0 * std::atan2(av, au);
    if (au <= kZeroTol) {
        out.zeta_b = 0.0;
        out.phi_b = wrap_angle(std::arg(v));
        out.flags.set(CoordFlag::ThetaBPiAmbiguous);
        return;
    }
    out.zeta_b = wrap_angle(std::arg(u));
    if (av <= kZeroTol) {
        out.phi_b = 0.0;
        out.flags.set(CoordFlag::PhiBUndefined);
    } else {
        out.phi_b = wrap_angle(std::arg(v) + out.zeta_b);
    }
}

void check_range(double v, double hi, const char* name) {
    if (!std::isfinite(v) || v < -kNumTol || v > hi + kNumTol)
        throw Error(ErrorKind::OutOfRange, std::string(name) + " = " + std::to_string(v) + " is out of range");
}

}  // namespace

BlochCoordinates extract(const TwoQubitState& s) {
    const double opx0 = one_plus_x0(s);
    if (opx0 <= kDegenerateTol) throw SouthPoleAError(qubit_b_fallback(s), opx0);

    const Complex coherence = std::conj(s.alpha()) * s.gamma() + std::conj(s.beta()) * s.delta();
    const Complex det = s.determinant();
    const S4Point p{opx0 - 1.0,
                    2.0 * coherence.real(),
                    -2.0 * det.imag(),
                    2.0 * det.real(),
                    2.0 * coherence.imag()};
    const BaseAngles base = angles_from_base(p);

    BlochCoordinates out;
    out.theta_a = base.theta;
    out.phi_a = base.phi;
    out.chi = base.chi;
    out.xi = base.xi;
    out.flags = base.flags;

    const QuasiState qs = quasi_state(s, Basis::A);
    const PureUnitQuaternion t = PureUnitQuaternion::from_angles(out.chi, out.xi);
    const Quaternion q_b = std::cos(0.5 * out.theta_a) * qs.q0 +
                           std::sin(0.5 * out.theta_a) * (exp_pure(t, -out.phi_a) * qs.q1);
    set_fiber_angles(q_b, out);
    return out;
}

BlochCoordinates south_pole_coordinates(const TwoQubitState& s) {
    const double opx0 = one_plus_x0(s);
    if (opx0 > kDegenerateTol) throw Error(ErrorKind::OutOfRange, "state is not of the form |1>_A (x) |psi_B>");
    const SingleQubitState psi = qubit_b_fallback(s);
    BlochCoordinates out;
    out.theta_a = kPi;
    out.flags = Flags(CoordFlag::SouthPoleA) | CoordFlag::PhiAUndefined | CoordFlag::TUndefined;
    set_fiber_angles(from_complex_pair(psi.zero, psi.one), out);
    return out;
}

TwoQubitState reconstruct(const BlochCoordinates& c) {
    check_range(c.theta_a, kPi, "theta_A");
    check_range(c.phi_a, kTwoPi, "phi_A");
    check_range(c.chi, kPi, "chi");
    check_range(c.xi, kTwoPi, "xi");
    check_range(c.theta_b, kPi, "theta_B");
    check_range(c.phi_b, kTwoPi, "phi_B");
    check_range(c.zeta_b, kTwoPi, "zeta_B");

    double phi_a = c.phi_a, chi = c.chi, xi = c.xi, phi_b = c.phi_b, zeta = c.zeta_b;
    if (c.flags.has(CoordFlag::PhiAUndefined)) phi_a = 0.0;
    if (c.flags.has(CoordFlag::TUndefined)) chi = xi = 0.0;
    if (c.flags.has(CoordFlag::XiUndefined)) xi = 0.0;
    if (c.flags.has(CoordFlag::PhiBUndefined)) phi_b = 0.0;
    if (c.flags.has(CoordFlag::ThetaBPiAmbiguous)) zeta = 0.0;

    const double ca = std::cos(0.5 * c.theta_a), sa = std::sin(0.5 * c.theta_a);
    const double cb = std::cos(0.5 * c.theta_b), sb = std::sin(0.5 * c.theta_b);
    const Complex i(0.0, 1.0);
    const Complex local(std::cos(phi_a), std::sin(phi_a) * std::cos(chi));
    const Complex nonlocal = i * (std::sin(phi_a) * std::sin(chi)) * std::polar(1.0, xi - phi_b);
    const Complex e_zeta = std::polar(1.0, zeta);
    const Complex e_phase_b = std::polar(1.0, phi_b - zeta);

    return TwoQubitState::make(ca * cb * e_zeta,
                               ca * sb * e_phase_b,
                               sa * (local * cb + nonlocal * sb) * e_zeta,
                               sa * (local * sb - nonlocal * cb) * e_phase_b);
}

BlochCoordinates normalize_global_phase(const BlochCoordinates& c) {
    BlochCoordinates out = c;
    const double shift = 2.0 * c.zeta_b;
    if (!c.flags.has(CoordFlag::TUndefined) && !c.flags.has(CoordFlag::XiUndefined))
        out.xi = wrap_angle(c.xi - shift);
    if (!c.flags.has(CoordFlag::PhiBUndefined)) out.phi_b = wrap_angle(c.phi_b - shift);
    out.zeta_b = 0.0;
    return out;
}

BlochCoordinates alternate_branch(const BlochCoordinates& c) {
    BlochCoordinates out = c;
    out.phi_a = wrap_angle(kTwoPi - c.phi_a);
    if (c.flags.has(CoordFlag::TUndefined)) return out;
    out.chi = kPi - c.chi;
    if (!c.flags.has(CoordFlag::XiUndefined)) out.xi = wrap_angle(c.xi + kPi);
    return out;
}

BlochCoordinates canonicalize(const BlochCoordinates& c) {
    return c.b() < 0.0 ? alternate_branch(c) : c;
}

ShortcutBase shortcut_base(const TwoQubitState& s) {
    const QuasiDensity rho = quasi_density(quasi_state(s, Basis::A));
    const double opx0 = 2.0 * rho.m[0][0].w;
    if (opx0 <= kDegenerateTol) throw SouthPoleAError(qubit_b_fallback(s), opx0);

    const Quaternion lower = 2.0 * rho.m[1][0];
    ShortcutBase out;
    out.x0 = opx0 - 1.0;
    out.x1 = lower.w;
    const Quaternion bt{0.0, lower.x, lower.y, lower.z};
    out.b = bt.norm();
    if (out.b <= kZeroTol) {
        out.t = PureUnitQuaternion();
        out.flags.set(CoordFlag::TUndefined);
    } else {
        out.t = PureUnitQuaternion::from_quaternion(bt / out.b);
    }
    const double scale = 1.0 / std::sqrt(2.0 * opx0);
    out.column = {Quaternion(opx0 * scale), (Quaternion(out.x1) + bt) * scale};
    return out;
}

double coordinate_distance(const BlochCoordinates& a, const BlochCoordinates& b) {
    const double d[7] = {a.theta_a - b.theta_a, angle_diff(a.phi_a, b.phi_a), a.chi - b.chi,
                         angle_diff(a.xi, b.xi),   a.theta_b - b.theta_b,       angle_diff(a.phi_b, b.phi_b),
                         angle_diff(a.zeta_b, b.zeta_b)};
    double sum = 0.0;
    for (double x : d) sum += x * x;
    return std::sqrt(sum);
}

}  // namespace hopfbloch

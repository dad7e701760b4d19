#pragma once

/**
 * Seven-angle coordinates of a two-qubit pure state:
 *
 *   (alpha + beta j, gamma + delta j)^T
 *       = (cos(theta_A/2), sin(theta_A/2) e^{t phi_A})^T
 *         (cos(theta_B/2) + sin(theta_B/2) e^{k phi_B} j) e^{k zeta_B}
 *
 * with t = i sin(chi)cos(xi) + j sin(chi)sin(xi) + k cos(chi).
 *
 * (theta_A, phi_A) is the qubit-A quasi-Bloch sphere, (chi, xi) the
 * entanglement sphere carrying t, (theta_B, phi_B) the qubit-B quasi-Bloch
 * sphere and zeta_B the remaining fiber phase. Only the product b t enters the
 * state, so (b, t) and (-b, -t) describe the same state; extraction returns the
 * b >= 0 branch.
 */

#include <array>

#include "hopfbloch/errors.hpp"
#include "hopfbloch/flags.hpp"
#include "hopfbloch/hopf.hpp"
#include "hopfbloch/quaternion.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

struct BlochCoordinates {
    double theta_a = 0.0;  // [0, pi]
    double phi_a = 0.0;    // [0, 2pi)
    double chi = 0.0;      // [0, pi]
    double xi = 0.0;       // [0, 2pi)
    double theta_b = 0.0;  // [0, pi]
    double phi_b = 0.0;    // [0, 2pi)
    double zeta_b = 0.0;   // [0, 2pi)
    Flags flags;

    /// b = sin(theta_A) sin(phi_A); negative on the alternate branch.
    double b() const;
    /// c = b sin(chi); the concurrence on the canonical branch.
    double c() const;
    PureUnitQuaternion t() const { return PureUnitQuaternion::from_angles(chi, xi); }
    S4Point base() const;
    /// (sin(theta_B)cos(phi_B), sin(theta_B)sin(phi_B), cos(theta_B))
    std::array<double, 3> qubit_b_cartesian() const;

    std::array<double, 7> angles() const { return {theta_a, phi_a, chi, xi, theta_b, phi_b, zeta_b}; }
};

/// Raised for |1>_A (x) |psi_B>; carries psi_B as the direct representation.
class SouthPoleAError : public Error {
public:
    SouthPoleAError(const SingleQubitState& psi_b, double one_plus_x0);

    const SingleQubitState& psi_b() const noexcept { return psi_b_; }

private:
    SingleQubitState psi_b_;
};

/**
 * Amplitudes to coordinates.
 *
 * Steps: x0 = |alpha|^2 + |beta|^2 - |gamma|^2 - |delta|^2;
 * x1 + k x4 = 2(conj(alpha) gamma + conj(beta) delta) fixes phi_A (b >= 0) and chi;
 * x3 - k x2 = 2(alpha delta - beta gamma) fixes xi;
 * q_B = cos(theta_A/2)(alpha + beta j) + sin(theta_A/2) e^{-t phi_A}(gamma + delta j)
 * gives theta_B, phi_B, zeta_B through q_B = u + v j.
 *
 * Throws SouthPoleAError when 1 + x0 <= kDegenerateTol.
 */
BlochCoordinates extract(const TwoQubitState& s);

/**
 * The coordinates used for |1>_A (x) |psi_B> in place of extract: theta_A = pi,
 * qubit B read straight from (gamma, delta), flag SouthPoleA. reconstruct maps
 * them back to the state. Requires 1 + x0 <= kDegenerateTol (OutOfRange otherwise).
 */
BlochCoordinates south_pole_coordinates(const TwoQubitState& s);

/**
 * Closed-form amplitudes from the seven angles. Flagged angles are replaced by
 * their conventional values. Throws Error(OutOfRange) for non-finite angles or
 * angles outside their ranges.
 */
TwoQubitState reconstruct(const BlochCoordinates& c);

/// Moves zeta_B out as a global phase: xi -> xi - 2 zeta_B, phi_B -> phi_B - 2 zeta_B, zeta_B -> 0.
BlochCoordinates normalize_global_phase(const BlochCoordinates& c);

/// The (-b, -t) description of the same state: phi_A -> 2pi - phi_A, chi -> pi - chi, xi -> xi + pi.
BlochCoordinates alternate_branch(const BlochCoordinates& c);

/// Moves to the b >= 0 branch. Idempotent.
BlochCoordinates canonicalize(const BlochCoordinates& c);

/// Base-point data read from the first column of the quasi-density matrix.
struct ShortcutBase {
    double x0 = 1.0;
    double x1 = 0.0;
    double b = 0.0;
    PureUnitQuaternion t;
    Flags flags;
    /// (1 + x0, x1 + b t) / sqrt(2(1 + x0)); the quasi state equals this column times q_B.
    std::array<Quaternion, 2> column{};
};

/// Throws SouthPoleAError when 1 + x0 <= kDegenerateTol.
ShortcutBase shortcut_base(const TwoQubitState& s);

/// Euclidean norm of the wrap-aware per-angle differences (azimuths mod 2pi).
double coordinate_distance(const BlochCoordinates& a, const BlochCoordinates& b);

}  // namespace hopfbloch

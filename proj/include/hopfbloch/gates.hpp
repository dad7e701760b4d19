#pragma once

#include <array>
#include <vector>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/bloch.hpp"
#include "hopfbloch/linalg.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

enum class GateKind { CNOT, CZ, SWAP, ControlledU };

/**
 * A gate built from the single-qubit block U = e^{k eta} R_n(omega), with
 * R_n(omega) = cos(omega/2) - k sin(omega/2) n.sigma.
 *
 * CNOT, CZ and ControlledU act with U on (gamma, delta) (qubit A controls);
 * SWAP acts with U on (beta, gamma). The standard kinds use eta = pi/2, omega = pi
 * with n = x (CNOT, SWAP) or n = z (CZ).
 */
struct GateSpec {
    GateKind kind = GateKind::CNOT;
    std::array<double, 3> axis{1.0, 0.0, 0.0};
    double omega = kPi;
    double eta = kPi / 2.0;

    static GateSpec cnot() { return {GateKind::CNOT, {1.0, 0.0, 0.0}, kPi, kPi / 2.0}; }
    static GateSpec cz() { return {GateKind::CZ, {0.0, 0.0, 1.0}, kPi, kPi / 2.0}; }
    static GateSpec swap() { return {GateKind::SWAP, {1.0, 0.0, 0.0}, kPi, kPi / 2.0}; }
    static GateSpec controlled_u(const std::array<double, 3>& axis, double omega, double eta) {
        return {GateKind::ControlledU, axis, omega, eta};
    }
};

/// e^{k eta} R_n(omega). Throws Error(BadAxis) unless |n| = 1 within kUnitTol.
Matrix2c single_qubit_unitary(const std::array<double, 3>& axis, double eta, double omega);

/// 4x4 matrix of the gate with its block evaluated at (eta, omega).
Matrix4c gate_matrix(const GateSpec& g, double eta, double omega);

/// Applies the gate at its endpoint (g.eta, g.omega).
TwoQubitState apply(const GateSpec& g, const TwoQubitState& s);

enum class Stage { PhaseRamp, RotationRamp };

struct TrajectorySample {
    Stage stage = Stage::PhaseRamp;
    double s = 0.0;  // path parameter within the stage, [0, 1]
    double eta = 0.0;
    double omega = 0.0;
    TwoQubitState state;
    BlochCoordinates coords;
    /// coords is the (-b, -t) alternate of the canonical extraction.
    bool branch_flip = false;
};

struct Trajectory {
    GateSpec gate;
    TwoQubitState initial;
    TwoQubitState final_state;
    std::vector<TrajectorySample> samples;
};

inline constexpr int kDefaultSamplesPerStage = 32;

/**
 * Samples the two-step path of the gate on s: n1 points with eta 0 -> g.eta at
 * omega = 0, then n2 points with omega 0 -> g.omega at eta = g.eta.
 *
 * Each sample starts from the canonical extraction; the alternate branch is
 * emitted (and branch_flip set) when it lies closer to the previous sample.
 * |1>_A (x) |psi_B> samples carry south_pole_coordinates. Throws
 * Error(OutOfRange) when n1 or n2 is below 2.
 */
Trajectory trajectory(const GateSpec& g, const TwoQubitState& s,
                      int n1 = kDefaultSamplesPerStage, int n2 = kDefaultSamplesPerStage);

}  // namespace hopfbloch

#include "hopfbloch/gates.hpp"

#include <cmath>
#include <utility>

#include "hopfbloch/errors.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

Matrix2c single_qubit_unitary(const std::array<double, 3>& axis, double eta, double omega) {
    const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTol) throw Error(ErrorKind::BadAxis, "rotation axis must be a unit vector");
    const auto [nx, ny, nz] = axis;
    const Complex i(0.0, 1.0);
    const double c = std::cos(0.5 * omega);
    const Complex ms = -i * std::sin(0.5 * omega);
    const Complex phase = std::polar(1.0, eta);
    Matrix2c u{};
    u[0][0] = phase * (c + ms * nz);
    u[0][1] = phase * ms * Complex(nx, -ny);
    u[1][0] = phase * ms * Complex(nx, ny);
    u[1][1] = phase * (c - ms * nz);
    return u;
}

Matrix4c gate_matrix(const GateSpec& g, double eta, double omega) {
    const Matrix2c u = single_qubit_unitary(g.axis, eta, omega);
    const std::size_t lo = g.kind == GateKind::SWAP ? 1 : 2;
    Matrix4c m = identity_matrix<4>();
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m[lo + r][lo + c] = u[r][c];
    return m;
}

TwoQubitState apply(const GateSpec& g, const TwoQubitState& s) {
    return TwoQubitState::make(gate_matrix(g, g.eta, g.omega) * s.amplitudes());
}

namespace {

BlochCoordinates coordinates_of(const TwoQubitState& s) {
    try {
        return extract(s);
    } catch (const SouthPoleAError&) {
        return south_pole_coordinates(s);
    }
}

}  // namespace

Trajectory trajectory(const GateSpec& g, const TwoQubitState& s, int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw Error(ErrorKind::OutOfRange, "each trajectory stage needs at least 2 samples");

    Trajectory out;
    out.gate = g;
    out.initial = s;
    out.final_state = apply(g, s);
    out.samples.reserve(static_cast<std::size_t>(n1 + n2));

    auto push = [&](Stage stage, double param, double eta, double omega) {
        TrajectorySample sample;
        sample.stage = stage;
        sample.s = param;
        sample.eta = eta;
        sample.omega = omega;
        sample.state = TwoQubitState::make(gate_matrix(g, eta, omega) * s.amplitudes());
        sample.coords = coordinates_of(sample.state);
        if (!out.samples.empty() && !sample.coords.flags.has(CoordFlag::SouthPoleA)) {
            const BlochCoordinates& prev = out.samples.back().coords;
            const BlochCoordinates alt = alternate_branch(sample.coords);
            if (coordinate_distance(sample.coords, prev) > coordinate_distance(alt, prev)) {
                sample.coords = alt;
                sample.branch_flip = true;
            }
        }
        out.samples.push_back(std::move(sample));
    };

    for (int i = 0; i < n1; ++i) {
        const double p = static_cast<double>(i) / (n1 - 1);
        push(Stage::PhaseRamp, p, p * g.eta, 0.0);
    }
    for (int i = 0; i < n2; ++i) {
        const double p = static_cast<double>(i) / (n2 - 1);
        push(Stage::RotationRamp, p, g.eta, p * g.omega);
    }
    return out;
}

}  // namespace hopfbloch

#pragma once
// JSON and CSV serialization of states, coordinates and trajectories.

#include <string>

#include <json.hpp>

#include "hopfbloch/bloch.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/gates.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch::cli {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; magnitudes below kZeroTol (and -0) become 0.
double round12(double v);

/// "%.12g" of round12(v).
std::string format_number(double v);

/// "re,im;re,im;re,im;re,im". Throws Error(Parse); normalization per TwoQubitState::make.
TwoQubitState parse_state(const std::string& text);

/// Seven comma-separated angles in extraction order. Throws Error(Parse).
BlochCoordinates parse_angles(const std::string& text);

/// "x,y,z". Throws Error(Parse).
std::array<double, 3> parse_axis(const std::string& text);

/// Lower-case gate name: cnot, cz, swap or cu. Throws Error(UnknownGate).
GateKind parse_gate(const std::string& name);
std::string gate_name(GateKind kind);

Json complex_json(Complex z);
Json state_json(const TwoQubitState& s);
Json angles_json(const BlochCoordinates& c);

/// Angles, base point, t, qubit-B Cartesian, concurrence, flags and alternate branch.
Json coords_json(const TwoQubitState& s, const BlochCoordinates& c);

/// {"error": {...}}; SouthPoleAError adds psi_b and the fallback coordinates.
Json error_json(const Error& e);

Json trajectory_json(const Trajectory& tr);

/// Header row of trajectory_csv.
const std::string& trajectory_csv_header();

/// One row per sample, '\n'-terminated, header first.
std::string trajectory_csv(const Trajectory& tr);

}  // namespace hopfbloch::cli

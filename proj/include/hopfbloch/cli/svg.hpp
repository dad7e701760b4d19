#pragma once

#include <string>

#include "hopfbloch/gates.hpp"

namespace hopfbloch::cli {

/// Three sphere panels (qubit A, entanglement, qubit B) with the sampled path
/// drawn over a great-circle wireframe. Each panel is a <g class="sphere">.
std::string trajectory_svg(const Trajectory& tr);

}  // namespace hopfbloch::cli

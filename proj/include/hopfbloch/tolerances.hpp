#pragma once

namespace hopfbloch {

// Unit-norm checks on quaternions and points of S^4.
inline constexpr double kUnitTol = 1e-9;
// Numerical agreement between algebraically equal quantities.
inline constexpr double kNumTol = 1e-9;
// Below this magnitude a norm, radius or angle carrier counts as zero.
inline constexpr double kZeroTol = 1e-12;
// Threshold on 1 + x0 for the |1>_A (x) |psi_B> exception.
inline constexpr double kDegenerateTol = 1e-9;
// Inputs with |norm - 1| up to this are renormalized, beyond it rejected.
inline constexpr double kNormalizeTol = 1e-6;

}  // namespace hopfbloch

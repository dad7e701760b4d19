#pragma once

#include <array>

#include "hopfbloch/hopf.hpp"
#include "hopfbloch/linalg.hpp"
#include "hopfbloch/quaternion.hpp"

namespace hopfbloch {

enum class Basis { A, B };

/// a|0> + b|1> for one qubit.
struct SingleQubitState {
    Complex zero;
    Complex one;
};

/**
 * alpha|00> + beta|01> + gamma|10> + delta|11>, qubit A on the left.
 *
 * Always unit-normalized: construction renormalizes inputs whose norm is
 * within kNormalizeTol of 1 and throws Error(NotNormalized) otherwise.
 */
class TwoQubitState {
public:
    /// |00>
    TwoQubitState() : amps_{Complex(1.0), Complex(), Complex(), Complex()} {}

    static TwoQubitState make(Complex alpha, Complex beta, Complex gamma, Complex delta);
    static TwoQubitState make(const CVector<4>& amps) { return make(amps[0], amps[1], amps[2], amps[3]); }

    const Complex& alpha() const { return amps_[0]; }
    const Complex& beta() const { return amps_[1]; }
    const Complex& gamma() const { return amps_[2]; }
    const Complex& delta() const { return amps_[3]; }
    const CVector<4>& amplitudes() const { return amps_; }

    /// alpha*delta - beta*gamma
    Complex determinant() const { return amps_[0] * amps_[3] - amps_[1] * amps_[2]; }

private:
    explicit TwoQubitState(const CVector<4>& a) : amps_(a) {}
    CVector<4> amps_;
};

/// (x) product, qubit A first. Both factors are normalized first.
TwoQubitState product_state(const SingleQubitState& a, const SingleQubitState& b);

/// Bell states 00: (|00>+|11>)/sqrt2, 01: (|01>+|10>)/sqrt2,
/// 10: (|00>-|11>)/sqrt2, 11: (|01>-|10>)/sqrt2. index = 2*first + second.
TwoQubitState bell_state(int index);

/**
 * max_i |a_i - e^{k phi} b_i| with phi chosen to align b onto a
 * (phi = arg <b|a>).
 */
double distance_up_to_phase(const TwoQubitState& a, const TwoQubitState& b);

/// Quaternionic column (q0, q1); for basis A (alpha + beta j, gamma + delta j),
/// for basis B (alpha + gamma j, beta + delta j).
struct QuasiState {
    Quaternion q0;
    Quaternion q1;
    Basis basis = Basis::A;
};

QuasiState quasi_state(const TwoQubitState& s, Basis basis);

/// rho~ = |Psi~><Psi~| with quaternion entries.
struct QuasiDensity {
    std::array<std::array<Quaternion, 2>, 2> m{};

    QuasiDensity operator*(const QuasiDensity& o) const;
    Quaternion trace() const { return m[0][0] + m[1][1]; }
};

/// Throws Error(NotNormalized) when |q0|^2 + |q1|^2 is off 1 by more than kUnitTol.
QuasiDensity quasi_density(const QuasiState& qs);

/// Embeds a complex 2x2 matrix entrywise (complex unit -> k).
QuasiDensity embed(const Matrix2c& m);

struct ReducedDensity {
    Matrix2c m{};

    Complex trace() const { return hopfbloch::trace(m); }
};

/// Partial trace of |Psi><Psi| keeping qubit `keep`.
ReducedDensity reduced_density(const TwoQubitState& s, Basis keep);

struct ConcurrenceInfo {
    double c = 0.0;      // 2 |alpha delta - beta gamma|, in [0, 1]
    double phase = 0.0;  // arg(alpha delta - beta gamma) in [0, 2pi)
};

ConcurrenceInfo concurrence(const TwoQubitState& s);

/**
 * e^{k eta} [a e^{-k phi1}|00> + b e^{-k phi2}|01> + c e^{k phi2}|10> + d e^{k phi1}|11>]
 * for non-negative a, b, c, d. Its determinant is (ad - bc) e^{2k eta}.
 * Throws Error(NotNormalized) unless a^2 + b^2 + c^2 + d^2 = 1 within kUnitTol.
 */
TwoQubitState phase_family_state(double a, double b, double c, double d,
                                 double phi1, double phi2, double eta);

/**
 * Reduced density of qubit A read off the S^4 base point: the pure
 * quaternion b t is projected onto the k axis, giving
 * (1/2)[[1 + x0, x1 - x4 k], [x1 + x4 k, 1 - x0]].
 * Its Bloch vector (x1, x4, x0) has length sqrt(1 - c^2).
 * Throws Error(OffSphere) off the unit sphere.
 */
ReducedDensity partial_trace_projection(const S4Point& p);

}  // namespace hopfbloch

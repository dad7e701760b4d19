#include "hopfbloch/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/tolerances.hpp"

namespace hopfbloch {

TwoQubitState TwoQubitState::make(Complex alpha, Complex beta, Complex gamma, Complex delta) {
    CVector<4> a{alpha, beta, gamma, delta};
    double n2 = 0.0;
    for (const auto& z : a) n2 += std::norm(z);
    const double n = std::sqrt(n2);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormalizeTol)
        throw Error(ErrorKind::NotNormalized, "state norm " + std::to_string(n) + " is not 1");
    if (n != 1.0)
        for (auto& z : a) z /= n;
    return TwoQubitState(a);
}

namespace {

SingleQubitState normalized(const SingleQubitState& q) {
    const double n = std::sqrt(std::norm(q.zero) + std::norm(q.one));
    if (!(n > kZeroTol)) throw Error(ErrorKind::NotNormalized, "single-qubit state has zero norm");
    return {q.zero / n, q.one / n};
}

}  // namespace

TwoQubitState product_state(const SingleQubitState& a, const SingleQubitState& b) {
    const auto qa = normalized(a);
    const auto qb = normalized(b);
    return TwoQubitState::make(qa.zero * qb.zero, qa.zero * qb.one, qa.one * qb.zero, qa.one * qb.one);
}

TwoQubitState bell_state(int index) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (index) {
        case 0: return TwoQubitState::make(h, 0.0, 0.0, h);
        case 1: return TwoQubitState::make(0.0, h, h, 0.0);
        case 2: return TwoQubitState::make(h, 0.0, 0.0, -h);
        case 3: return TwoQubitState::make(0.0, h, -h, 0.0);
        default: throw Error(ErrorKind::OutOfRange, "Bell index must be 0..3");
    }
}

double distance_up_to_phase(const TwoQubitState& a, const TwoQubitState& b) {
    Complex overlap{};
    for (int i = 0; i < 4; ++i) overlap += std::conj(b.amplitudes()[i]) * a.amplitudes()[i];
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.amplitudes()[i] - phase * b.amplitudes()[i]));
    return m;
}

QuasiState quasi_state(const TwoQubitState& s, Basis basis) {
    if (basis == Basis::A)
        return {from_complex_pair(s.alpha(), s.beta()), from_complex_pair(s.gamma(), s.delta()), Basis::A};
    return {from_complex_pair(s.alpha(), s.gamma()), from_complex_pair(s.beta(), s.delta()), Basis::B};
}

QuasiDensity QuasiDensity::operator*(const QuasiDensity& o) const {
    QuasiDensity r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

QuasiDensity quasi_density(const QuasiState& qs) {
    if (std::abs(qs.q0.norm2() + qs.q1.norm2() - 1.0) > kUnitTol)
        throw Error(ErrorKind::NotNormalized, "quasi state must satisfy |q0|^2 + |q1|^2 = 1");
    const std::array<Quaternion, 2> col{qs.q0, qs.q1};
    QuasiDensity r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = col[i] * col[j].conj();
    return r;
}

QuasiDensity embed(const Matrix2c& m) {
    QuasiDensity r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = Quaternion::from_complex(m[i][j]);
    return r;
}

ReducedDensity reduced_density(const TwoQubitState& s, Basis keep) {
    const Complex a = s.alpha(), b = s.beta(), c = s.gamma(), d = s.delta();
    ReducedDensity r;
    if (keep == Basis::A) {
        r.m[0][0] = std::norm(a) + std::norm(b);
        r.m[0][1] = a * std::conj(c) + b * std::conj(d);
        r.m[1][0] = std::conj(a) * c + std::conj(b) * d;
        r.m[1][1] = std::norm(c) + std::norm(d);
    } else {
        r.m[0][0] = std::norm(a) + std::norm(c);
        r.m[0][1] = a * std::conj(b) + c * std::conj(d);
        r.m[1][0] = std::conj(a) * b + std::conj(c) * d;
        r.m[1][1] = std::norm(b) + std::norm(d);
    }
    return r;
}

ConcurrenceInfo concurrence(const TwoQubitState& s) {
    const Complex det = s.determinant();
    ConcurrenceInfo out;
    out.c = std::min(1.0, 2.0 * std::abs(det));
    out.phase = std::abs(det) > 0.0 ? wrap_angle(std::arg(det)) : 0.0;
    return out;
}

TwoQubitState phase_family_state(double a, double b, double c, double d,
                                 double phi1, double phi2, double eta) {
    if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0)
        throw Error(ErrorKind::OutOfRange, "phase-family weights must be non-negative");
    if (std::abs(a * a + b * b + c * c + d * d - 1.0) > kUnitTol)
        throw Error(ErrorKind::NotNormalized, "phase-family weights must satisfy a^2+b^2+c^2+d^2 = 1");
    const Complex g = std::polar(1.0, eta);
    return TwoQubitState::make(g * std::polar(a, -phi1), g * std::polar(b, -phi2),
                               g * std::polar(c, phi2), g * std::polar(d, phi1));
}

ReducedDensity partial_trace_projection(const S4Point& p) {
    if (!(std::abs(p.norm2() - 1.0) <= kUnitTol)) throw Error(ErrorKind::OffSphere, "point is not on the unit 4-sphere");
    ReducedDensity r;
    r.m[0][0] = 0.5 * (1.0 + p.x0);
    r.m[0][1] = 0.5 * Complex(p.x1, -p.x4);
    r.m[1][0] = 0.5 * Complex(p.x1, p.x4);
    r.m[1][1] = 0.5 * (1.0 - p.x0);
    return r;
}

}  // namespace hopfbloch

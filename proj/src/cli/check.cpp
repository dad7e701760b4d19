#include "hopfbloch/cli/check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hopfbloch/bloch.hpp"
#include "hopfbloch/hopf.hpp"

namespace hopfbloch::cli {

namespace {

enum Check { kRoundTrip, kConcurrence, kProjector, kBall, kPartialTrace, kFiber, kCheckCount };

constexpr const char* kCheckNames[kCheckCount] = {
    "roundtrip", "concurrence", "quasi_density_projector", "ball_identity", "partial_trace", "fiber_invariance",
};

double amp_diff(const TwoQubitState& a, const TwoQubitState& b) {
    double m = 0.0;
    for (int n = 0; n < 4; ++n) m = std::max(m, std::abs(a.amplitudes()[n] - b.amplitudes()[n]));
    return m;
}

double quat_diff(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

class Checker {
public:
    explicit Checker(std::uint64_t seed) : rng_(seed) {}

    TwoQubitState random_state() {
        CVector<4> a{};
        for (auto& z : a) z = Complex(normal_(rng_), normal_(rng_));
        double n2 = 0.0;
        for (const auto& z : a) n2 += std::norm(z);
        for (auto& z : a) z /= std::sqrt(n2);
        return TwoQubitState::make(a);
    }

    // Returns false when the state sits at the qubit-A south pole.
    bool check(const TwoQubitState& s, std::array<double, kCheckCount>& err) {
        BlochCoordinates c;
        try {
            c = extract(s);
        } catch (const SouthPoleAError&) {
            err[kRoundTrip] = std::max(err[kRoundTrip], amp_diff(reconstruct(south_pole_coordinates(s)), s));
            return false;
        }
        err[kRoundTrip] = std::max(err[kRoundTrip], amp_diff(reconstruct(c), s));

        const Complex d = s.determinant();
        const double c_state = 2.0 * std::abs(d);
        err[kConcurrence] = std::max({err[kConcurrence], std::abs(c_state - c.c()),
                                      std::abs(2.0 * d - c.c() * std::polar(1.0, c.xi - kPi / 2))});

        const QuasiDensity rho = quasi_density(quasi_state(s, Basis::A));
        const QuasiDensity sq = rho * rho;
        double proj = quat_diff(rho.trace(), kQOne);
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 2; ++k) proj = std::max(proj, quat_diff(sq.m[r][k], rho.m[r][k]));
        err[kProjector] = std::max(err[kProjector], proj);

        const S4Point p = c.base();
        err[kBall] = std::max(err[kBall], std::abs(p.x0 * p.x0 + p.x1 * p.x1 + p.x4 * p.x4 + p.c() * p.c() - 1.0));
        err[kPartialTrace] =
            std::max(err[kPartialTrace], max_abs_diff(partial_trace_projection(p).m, reduced_density(s, Basis::A).m));

        Quaternion qf(normal_(rng_), normal_(rng_), normal_(rng_), normal_(rng_));
        qf = qf * (1.0 / qf.norm());
        const QuasiState qs = quasi_state(s, Basis::A);
        const S4Point moved = base_point(qs.q0 * qf, qs.q1 * qf);
        const S4Point fixed = base_point(qs.q0, qs.q1);
        err[kFiber] = std::max(err[kFiber], std::max({std::abs(moved.x0 - fixed.x0), std::abs(moved.x1 - fixed.x1),
                                                      std::abs(moved.x2 - fixed.x2), std::abs(moved.x3 - fixed.x3),
                                                      std::abs(moved.x4 - fixed.x4)}));
        return true;
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
};

}  // namespace

bool CheckReport::pass() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

Json CheckReport::to_json() const {
    Json checks = Json::array();
    for (const auto& r : results)
        checks.push_back(Json{{"name", r.name}, {"max_error", r.max_error}, {"pass", r.pass}});
    return Json{{"seed", seed},          {"count", count},   {"south_pole", south_pole},
                {"tolerance", tolerance}, {"checks", checks}, {"pass", pass()}};
}

CheckReport run_checks(const std::optional<TwoQubitState>& state, std::uint64_t seed, int count, double tolerance) {
    Checker checker(seed);
    std::array<double, kCheckCount> err{};
    CheckReport report;
    report.seed = seed;
    report.tolerance = tolerance;
    report.count = state ? 1 : count;
    for (int n = 0; n < report.count; ++n) {
        const TwoQubitState s = state ? *state : checker.random_state();
        if (!checker.check(s, err)) ++report.south_pole;
    }
    for (int k = 0; k < kCheckCount; ++k) report.results.push_back({kCheckNames[k], err[k], err[k] <= tolerance});
    return report;
}

}  // namespace hopfbloch::cli

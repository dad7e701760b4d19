#include <gtest/gtest.h>

#include <cmath>

#include "hopfbloch/angles.hpp"
#include "hopfbloch/bloch.hpp"
#include "hopfbloch/errors.hpp"
#include "support/oracles.hpp"

using namespace hopfbloch;
using hopfbloch::oracle::wrap_dist;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);
const double kR3 = 1.0 / std::sqrt(3.0);

BlochCoordinates coords(double ta, double pa, double chi, double xi, double tb, double pb, double z) {
    BlochCoordinates c;
    c.theta_a = ta;
    c.phi_a = pa;
    c.chi = chi;
    c.xi = xi;
    c.theta_b = tb;
    c.phi_b = pb;
    c.zeta_b = z;
    return c;
}

BlochCoordinates random_coords(oracle::Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return coords(std::acos(1 - 2 * u(rng)), kTwoPi * u(rng), std::acos(1 - 2 * u(rng)), kTwoPi * u(rng),
                  std::acos(1 - 2 * u(rng)), kTwoPi * u(rng), kTwoPi * u(rng));
}

void expect_angles_near(const BlochCoordinates& a, const BlochCoordinates& b, double tol) {
    EXPECT_NEAR(a.theta_a, b.theta_a, tol);
    EXPECT_LE(wrap_dist(a.phi_a, b.phi_a), tol);
    EXPECT_NEAR(a.chi, b.chi, tol);
    EXPECT_LE(wrap_dist(a.xi, b.xi), tol);
    EXPECT_NEAR(a.theta_b, b.theta_b, tol);
    EXPECT_LE(wrap_dist(a.phi_b, b.phi_b), tol);
    EXPECT_LE(wrap_dist(a.zeta_b, b.zeta_b), tol);
}

bool near_south_pole(const TwoQubitState& s) {
    return 2.0 * (std::norm(s.alpha()) + std::norm(s.beta())) <= 1e-6;
}

}  // namespace

TEST(Extract, BellStates) {
    const auto b00 = extract(bell_state(0));
    expect_angles_near(b00, coords(kPi / 2, kPi / 2, kPi / 2, kPi / 2, 0, 0, 0), 1e-12);
    EXPECT_TRUE(b00.flags.has(CoordFlag::PhiBUndefined));
    EXPECT_NEAR(b00.b(), 1.0, 1e-15);
    EXPECT_NEAR(b00.t().y(), 1.0, 1e-15);

    const auto b01 = extract(bell_state(1));
    expect_angles_near(b01, coords(kPi / 2, kPi / 2, kPi / 2, 3 * kPi / 2, kPi, 0, 0), 1e-12);
    EXPECT_TRUE(b01.flags.has(CoordFlag::ThetaBPiAmbiguous));
    EXPECT_NEAR(b01.t().y(), -1.0, 1e-15);
}

TEST(Extract, ProductGroundState) {
    const auto c = extract(TwoQubitState());
    EXPECT_EQ(c.theta_a, 0.0);
    EXPECT_EQ(c.theta_b, 0.0);
    EXPECT_EQ(c.zeta_b, 0.0);
    EXPECT_EQ(c.chi, 0.0);
    EXPECT_EQ(c.xi, 0.0);
    EXPECT_TRUE(c.flags.has(CoordFlag::PhiAUndefined));
    EXPECT_TRUE(c.flags.has(CoordFlag::TUndefined));
    EXPECT_TRUE(c.flags.has(CoordFlag::PhiBUndefined));
}

TEST(Extract, RelativePhaseMovesXi) {
    for (int n = 0; n < 16; ++n) {
        const double eta = kTwoPi * n / 16;
        const auto s = TwoQubitState::make(kR2, 0.0, 0.0, std::polar(kR2, eta));
        const auto c = extract(s);
        EXPECT_NEAR(c.theta_a, kPi / 2, 1e-12);
        EXPECT_NEAR(c.phi_a, kPi / 2, 1e-12);
        EXPECT_NEAR(c.chi, kPi / 2, 1e-12);
        EXPECT_LE(wrap_dist(c.xi, kPi / 2 + eta), 1e-12);
        EXPECT_NEAR(c.theta_b, 0.0, 1e-12);
        EXPECT_NEAR(c.zeta_b, 0.0, 1e-12);
    }
}

TEST(Extract, SouthPoleRaisesWithFallback) {
    const double mu = 0.3;
    const auto s = TwoQubitState::make(0.0, 0.0, std::cos(mu), std::sin(mu));
    try {
        (void)extract(s);
        FAIL();
    } catch (const SouthPoleAError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SouthPoleA);
        EXPECT_EQ(e.psi_b().zero, s.gamma());
        EXPECT_EQ(e.psi_b().one, s.delta());
    }
    const auto fallback = south_pole_coordinates(s);
    EXPECT_TRUE(fallback.flags.has(CoordFlag::SouthPoleA));
    EXPECT_EQ(fallback.theta_a, kPi);
    EXPECT_NEAR(fallback.theta_b, 2 * mu, 1e-15);
    EXPECT_LE(distance_up_to_phase(reconstruct(fallback), s), 1e-15);
    EXPECT_THROW((void)south_pole_coordinates(bell_state(0)), Error);
}

TEST(Reconstruct, Examples) {
    EXPECT_LE(oracle::max_amp_diff(reconstruct(coords(kPi / 2, kPi / 2, kPi / 2, kPi / 2, 0, 0, 0)).amplitudes(),
                                    bell_state(0).amplitudes()),
              1e-15);
    const double tb = 1.1, pb = 2.3;
    const auto prod = reconstruct(coords(0, 0, 0, 0, tb, pb, 0));
    EXPECT_LE(oracle::max_amp_diff(prod.amplitudes(),
                                    {std::cos(tb / 2), std::polar(std::sin(tb / 2), pb), 0.0, 0.0}),
              1e-15);
    EXPECT_LE(oracle::max_amp_diff(reconstruct(coords(kPi / 2, kPi / 2, kPi / 2, 3 * kPi / 2, kPi, 0, 0)).amplitudes(),
                                    bell_state(1).amplitudes()),
              1e-15);
}

TEST(Reconstruct, RejectsOutOfRange) {
    for (auto bad : {coords(-0.1, 0, 0, 0, 0, 0, 0), coords(0, 7.0, 0, 0, 0, 0, 0), coords(0, 0, 3.5, 0, 0, 0, 0),
                     coords(0, 0, 0, 0, 0, 0, std::nan(""))}) {
        try {
            (void)reconstruct(bad);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
        }
    }
}

TEST(Reconstruct, ClosedFormMatchesQuaternionProduct) {
    oracle::Rng rng(41);
    for (int n = 0; n < 10000; ++n) {
        const auto c = random_coords(rng);
        const auto oracle = oracle::quaternionic_amplitudes(c.theta_a, c.phi_a, c.chi, c.xi, c.theta_b, c.phi_b, c.zeta_b);
        ASSERT_LE(oracle::max_amp_diff(reconstruct(c).amplitudes(), oracle), 1e-12);
    }
}

TEST(NormalizeGlobalPhase, Examples) {
    const auto same = coords(1.0, 2.0, 0.5, 1.5, 0.7, 3.0, 0.0);
    expect_angles_near(normalize_global_phase(same), same, 0.0);

    const auto c = coords(1.0, 2.0, 0.5, kPi, 0.7, kPi / 2, kPi / 4);
    const auto n = normalize_global_phase(c);
    expect_angles_near(n, coords(1.0, 2.0, 0.5, kPi / 2, 0.7, 0.0, 0.0), 1e-15);
}

TEST(NormalizeGlobalPhase, FactorsOutPhase) {
    oracle::Rng rng(42);
    for (int n = 0; n < 10000; ++n) {
        const auto c = random_coords(rng);
        const auto before = reconstruct(c).amplitudes();
        auto after = reconstruct(normalize_global_phase(c)).amplitudes();
        for (auto& a : after) a *= std::polar(1.0, c.zeta_b);
        ASSERT_LE(oracle::max_amp_diff(after, before), 1e-9);
    }
}

TEST(Canonicalize, Examples) {
    // b = -1, t = -j
    const auto alt = coords(kPi / 2, 3 * kPi / 2, kPi / 2, 3 * kPi / 2, 0, 0, 0);
    EXPECT_NEAR(alt.b(), -1.0, 1e-15);
    const auto canon = canonicalize(alt);
    expect_angles_near(canon, coords(kPi / 2, kPi / 2, kPi / 2, kPi / 2, 0, 0, 0), 1e-15);
    expect_angles_near(canonicalize(canon), canon, 0.0);
}

TEST(Canonicalize, PreservesStateAndIsIdempotent) {
    oracle::Rng rng(43);
    for (int n = 0; n < 10000; ++n) {
        const auto c = random_coords(rng);
        const auto k = canonicalize(c);
        ASSERT_GE(k.b(), 0.0);
        ASSERT_LE(oracle::max_amp_diff(reconstruct(k).amplitudes(), reconstruct(c).amplitudes()), 1e-9);
        const auto kk = canonicalize(k);
        ASSERT_EQ(kk.phi_a, k.phi_a);
        ASSERT_EQ(kk.chi, k.chi);
        ASSERT_EQ(kk.xi, k.xi);
        ASSERT_LE(oracle::max_amp_diff(reconstruct(alternate_branch(c)).amplitudes(), reconstruct(c).amplitudes()),
                  1e-9);
    }
}

TEST(Shortcut, Examples) {
    const auto b00 = shortcut_base(bell_state(0));
    EXPECT_NEAR(b00.x0, 0.0, 1e-15);
    EXPECT_NEAR(b00.x1, 0.0, 1e-15);
    EXPECT_NEAR(b00.b, 1.0, 1e-15);
    EXPECT_NEAR(b00.t.y(), 1.0, 1e-15);

    const auto g = shortcut_base(TwoQubitState());
    EXPECT_EQ(g.x0, 1.0);
    EXPECT_EQ(g.x1, 0.0);
    EXPECT_EQ(g.b, 0.0);
    EXPECT_TRUE(g.flags.has(CoordFlag::TUndefined));
    EXPECT_EQ(g.t.z(), 1.0);

    const auto b11 = shortcut_base(bell_state(3));
    EXPECT_NEAR(b11.x0, 0.0, 1e-15);
    EXPECT_NEAR(b11.b, 1.0, 1e-15);
    EXPECT_NEAR(b11.t.y(), 1.0, 1e-15);

    EXPECT_THROW((void)shortcut_base(TwoQubitState::make(0, 0, 1, 0)), SouthPoleAError);
}

TEST(Shortcut, AgreesWithStepRoute) {
    oracle::Rng rng(44);
    for (int n = 0; n < 10000; ++n) {
        const auto s = oracle::random_state(rng);
        if (near_south_pole(s)) continue;
        const auto sc = shortcut_base(s);
        const auto c = extract(s);
        const S4Point p = c.base();
        ASSERT_NEAR(sc.x0, p.x0, 1e-9);
        ASSERT_NEAR(sc.x1, p.x1, 1e-9);
        ASSERT_NEAR(sc.b, c.b(), 1e-9);
        const auto t = c.t();
        ASSERT_NEAR(sc.t.x(), t.x(), 1e-9);
        ASSERT_NEAR(sc.t.y(), t.y(), 1e-9);
        ASSERT_NEAR(sc.t.z(), t.z(), 1e-9);
        // the quasi state factors as column * q_B
        const Quaternion q_b = from_complex_pair(std::polar(std::cos(c.theta_b / 2), c.zeta_b),
                                                 std::polar(std::sin(c.theta_b / 2), c.phi_b - c.zeta_b));
        const auto qs = quasi_state(s, Basis::A);
        ASSERT_LE((sc.column[0] * q_b - qs.q0).norm(), 1e-9);
        ASSERT_LE((sc.column[1] * q_b - qs.q1).norm(), 1e-9);
    }
}

TEST(BlochProperties, ExtractReconstructRoundTrip) {
    oracle::Rng rng(45);
    for (int n = 0; n < 20000; ++n) {
        const auto s = oracle::random_state(rng);
        if (near_south_pole(s)) continue;
        const auto c = extract(s);
        ASSERT_LE(oracle::max_amp_diff(reconstruct(c).amplitudes(), s.amplitudes()), 1e-9);
        const auto n0 = normalize_global_phase(c);
        ASSERT_LE(distance_up_to_phase(reconstruct(n0), s), 1e-9);
    }
}

TEST(BlochProperties, ReconstructExtractRecoversCanonicalCoordinates) {
    oracle::Rng rng(46);
    int checked = 0;
    for (int n = 0; n < 10000; ++n) {
        const auto c = canonicalize(random_coords(rng));
        const auto e = extract(reconstruct(c));
        if (!e.flags.empty()) continue;
        ++checked;
        EXPECT_NEAR(e.theta_a, c.theta_a, 1e-8);
        EXPECT_LE(wrap_dist(e.phi_a, c.phi_a), 1e-8);
        EXPECT_NEAR(e.chi, c.chi, 1e-8);
        EXPECT_LE(wrap_dist(e.xi, c.xi), 1e-8);
        EXPECT_NEAR(e.theta_b, c.theta_b, 1e-8);
        EXPECT_LE(wrap_dist(e.phi_b, c.phi_b), 1e-8);
        EXPECT_LE(wrap_dist(e.zeta_b, c.zeta_b), 1e-8);
    }
    EXPECT_GT(checked, 9000);
}

TEST(BlochProperties, ConcurrenceIdentity) {
    oracle::Rng rng(47);
    for (int n = 0; n < 10000; ++n) {
        const auto s = oracle::random_state(rng);
        if (near_south_pole(s)) continue;
        const auto c = extract(s);
        const double conc = c.c();
        ASSERT_GE(conc, 0.0);
        ASSERT_NEAR(conc, 2.0 * std::abs(s.determinant()), 1e-9);
        ASSERT_FALSE(c.flags.has(CoordFlag::XiUndefined));
        ASSERT_LE(std::abs(2.0 * s.determinant() - conc * std::polar(1.0, c.xi - kPi / 2)), 1e-9);
        ASSERT_LE(wrap_dist(concurrence(s).phase, c.xi - kPi / 2), 1e-9);
    }
}

TEST(BlochProperties, QuasiDensityPauliForm) {
    // rho~ = (I + n_A . sigma(t)) / 2, sigma_y(t) = [[0, -t], [t, 0]]
    oracle::Rng rng(48);
    for (int n = 0; n < 10000; ++n) {
        const auto s = oracle::random_state(rng);
        if (near_south_pole(s)) continue;
        const auto c = extract(s);
        const double nx = std::sin(c.theta_a) * std::cos(c.phi_a);
        const double ny = std::sin(c.theta_a) * std::sin(c.phi_a);
        const double nz = std::cos(c.theta_a);
        const Quaternion t = c.t().as_quaternion();
        const auto rho = quasi_density(quasi_state(s, Basis::A));
        ASSERT_LE((rho.m[0][0] - Quaternion(0.5 * (1 + nz))).norm(), 1e-9);
        ASSERT_LE((rho.m[1][1] - Quaternion(0.5 * (1 - nz))).norm(), 1e-9);
        ASSERT_LE((rho.m[0][1] - 0.5 * (Quaternion(nx) - ny * t)).norm(), 1e-9);
        ASSERT_LE((rho.m[1][0] - 0.5 * (Quaternion(nx) + ny * t)).norm(), 1e-9);
    }
}

TEST(BlochProperties, SeparabilityCriterion) {
    oracle::Rng rng(49);
    for (int n = 0; n < 2000; ++n) {
        const auto a = oracle::random_state(rng);
        const auto prod = product_state({a.alpha(), a.beta()}, {a.gamma(), a.delta()});
        if (!near_south_pole(prod)) {
            const auto c = extract(prod);
            ASSERT_LE(std::abs(c.c()), 1e-9);
            ASSERT_LE(oracle::amplitude_matrix_min_singular_value(prod), 1e-9);
        }
        const auto ent = oracle::random_state(rng);
        if (near_south_pole(ent)) continue;
        const auto e = extract(ent);
        ASSERT_EQ(e.c() <= 1e-9, oracle::amplitude_matrix_min_singular_value(ent) <= 1e-9);
    }
}

TEST(BlochProperties, NorthPoleEntanglementIsTensorProduct) {
    oracle::Rng rng(50);
    for (int n = 0; n < 5000; ++n) {
        auto c = random_coords(rng);
        c.chi = 0.0;
        const auto s = reconstruct(c);
        const SingleQubitState a{std::cos(c.theta_a / 2), std::polar(std::sin(c.theta_a / 2), c.phi_a)};
        const SingleQubitState b{std::cos(c.theta_b / 2), std::polar(std::sin(c.theta_b / 2), c.phi_b - 2 * c.zeta_b)};
        auto expected = product_state(a, b).amplitudes();
        for (auto& x : expected) x *= std::polar(1.0, c.zeta_b);
        ASSERT_LE(oracle::max_amp_diff(s.amplitudes(), expected), 1e-9);
    }
}

TEST(BlochProperties, ThetaBPiPinsZeta) {
    oracle::Rng rng(51);
    for (int n = 0; n < 5000; ++n) {
        auto c = random_coords(rng);
        c.theta_b = kPi;
        const auto s = reconstruct(c);
        if (near_south_pole(s)) continue;
        const auto e = extract(s);
        ASSERT_TRUE(e.flags.has(CoordFlag::ThetaBPiAmbiguous));
        ASSERT_EQ(e.zeta_b, 0.0);
        ASSERT_LE(oracle::max_amp_diff(reconstruct(e).amplitudes(), s.amplitudes()), 1e-9);
    }
}

TEST(BlochProperties, PhaseFamilyEqualities) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const double p1 = kTwoPi * i / 8 + 0.1, p2 = kTwoPi * j / 8 + 0.05;
            const auto c = normalize_global_phase(extract(phase_family_state(kR3, kR3, 0.0, kR3, p1, p2, 0.37)));
            EXPECT_LE(wrap_dist(c.xi, 2 * p1 + kPi / 2), 1e-9);
            EXPECT_LE(wrap_dist(c.phi_b, p1 - p2), 1e-9);
            EXPECT_NEAR(std::cos(c.phi_a), kR2 * std::cos(p1 + p2), 1e-9);
        }
}

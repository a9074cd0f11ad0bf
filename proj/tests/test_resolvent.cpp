#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "atsplit/presets.hpp"
#include "atsplit/resolvent.hpp"
#include "atsplit/spectrum.hpp"

using namespace atsplit;

namespace {

bool contains_root(const RootTriple& r, cplx target, double tol)
{
    for (const auto& z : r.z)
        if (std::abs(z - target) <= tol)
            return true;
    return false;
}

cplx random_complex(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> mag(-3.0, 3.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * 3.141592653589793);
    return std::polar(std::pow(10.0, mag(rng)), arg(rng));
}

}  // namespace

TEST_CASE("uncoupled cubic has the diagonal energies as roots")
{
    const auto sys = SystemEnergies::from_detunings(3.0e7, 1.0e7, 2.0e7, 0.0, 0.0);
    const auto roots = solve_cubic(build_cubic(sys));
    const double tol = 1e-9 * 3.0e7;
    CHECK(contains_root(roots, sys.omega_i, tol));
    CHECK(contains_root(roots, sys.omega_a_tilde, tol));
    CHECK(contains_root(roots, sys.omega_b, tol));
}

TEST_CASE("symmetric lossless cubic")
{
    const double va = 3.0, vb = 4.0;
    const auto sys = SystemEnergies::from_detunings(0.0, 0.0, 0.0, va, vb);
    const auto c = build_cubic(sys);
    CHECK(std::abs(c.c2) == 0.0);
    CHECK(std::abs(c.c1 - cplx(-25.0)) < 1e-14);
    CHECK(std::abs(c.c0) == 0.0);
    const auto roots = solve_cubic(c);
    CHECK(contains_root(roots, 0.0, 1e-12));
    CHECK(contains_root(roots, 5.0, 1e-12));
    CHECK(contains_root(roots, -5.0, 1e-12));
}

TEST_CASE("cesium cubic re-expands from its roots")
{
    const auto atom = preset("cs-1photon");
    const auto drive = atom.drive();
    const auto sys = drive.system(25.0 * atom.default_scale, 0.0);
    const auto c = build_cubic(sys);
    const auto r = solve_cubic(c).z;
    const cplx e2 = -(r[0] + r[1] + r[2]);
    const cplx e1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
    const cplx e0 = -r[0] * r[1] * r[2];
    const double s = c.coefficient_scale();
    CHECK(std::abs(e2 - c.c2) / s < 1e-12);
    CHECK(std::abs(e1 - c.c1) / s < 1e-12);
    CHECK(std::abs(e0 - c.c0) / s < 1e-12);
}

TEST_CASE("hand-expanded cubics")
{
    SUBCASE("triple root at the origin")
    {
        const auto r = solve_cubic({});
        for (const auto& z : r.z)
            CHECK(std::abs(z) == 0.0);
    }
    SUBCASE("(z-1)(z-2)(z-3)")
    {
        const auto r = solve_cubic({-6.0, 11.0, -6.0});
        CHECK(contains_root(r, 1.0, 1e-13));
        CHECK(contains_root(r, 2.0, 1e-13));
        CHECK(contains_root(r, 3.0, 1e-13));
    }
    SUBCASE("double root")
    {
        // (z-2)^2 (z+1)
        const auto r = solve_cubic({-3.0, 0.0, 4.0});
        CHECK(contains_root(r, -1.0, 1e-12));
        CHECK(contains_root(r, 2.0, 1e-7));
        CHECK(is_degenerate(r));
    }
}

TEST_CASE("random cubics: residuals and Vieta identities")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        const Cubic c{random_complex(rng), random_complex(rng), random_complex(rng)};
        const auto roots = solve_cubic(c);
        const auto& r = roots.z;
        const double m = std::max(1.0, roots.magnitude_scale());
        for (const auto& z : r) {
            const double scale = std::max({m * m * m, std::abs(c.c2) * m * m, std::abs(c.c1) * m,
                                           std::abs(c.c0)});
            CHECK(std::abs(c(z)) / scale < 1e-10);
        }
        const double s2 = std::max(std::abs(c.c2), m);
        const double s1 = std::max(std::abs(c.c1), m * m);
        const double s0 = std::max(std::abs(c.c0), m * m * m);
        CHECK(std::abs(-(r[0] + r[1] + r[2]) - c.c2) / s2 < 1e-10);
        CHECK(std::abs(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] - c.c1) / s1 < 1e-10);
        CHECK(std::abs(-r[0] * r[1] * r[2] - c.c0) / s0 < 1e-10);
        if (!is_degenerate(roots))
            CHECK(std::abs(ubi_amplitude(roots, 1.0, 1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("amplitude vanishes at t = 0 and without pump coupling")
{
    const auto sys = SystemEnergies::from_detunings(1e7, -2e7, 1e7, 0.0, 5e6);
    CHECK(population_b(sys, 0.0) == 0.0);
    for (double t : {1e-9, 1e-8, 1e-7})
        CHECK(population_b(sys, t) == 0.0);

    const auto coupled = SystemEnergies::from_detunings(1e7, -2e7, 1e7, 3e7, 5e6);
    CHECK(population_b(coupled, 0.0) == 0.0);
    const auto roots = solve_cubic(build_cubic(coupled));
    CHECK(std::abs(ubi_amplitude(roots, coupled.v_ai, coupled.v_ba, 0.0)) < 1e-12);
    CHECK(std::abs(ubi_amplitude(roots, 0.0, coupled.v_ba, 1e-7)) == 0.0);
}

TEST_CASE("pole sum agrees with direct integration")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto log_uniform = [&](double lo, double hi) {
        return std::pow(10.0, std::log10(lo) + u(rng) * (std::log10(hi) - std::log10(lo)));
    };
    for (int trial = 0; trial < 100; ++trial) {
        const double rabi = log_uniform(1e6, 1e9);
        const double width = log_uniform(1e6, 1e9);
        const double probe = log_uniform(1e5, 1e8);
        const double d1 = (2.0 * u(rng) - 1.0) * 5.0 * rabi;
        const double d2 = (2.0 * u(rng) - 1.0) * 5.0 * rabi;
        const double t = trial % 2 == 0 ? 1e-8 : 1e-7;
        const auto sys = SystemEnergies::from_detunings(d1, d2, width, 0.5 * rabi, 0.5 * probe);
        const double p = population_b(sys, t);
        const double ref = oracle::population_rk4(sys, t);
        CHECK(std::abs(p - ref) < 1e-8);
        CHECK(std::abs(ubi_amplitude_ode(sys, t) - oracle::amplitude_rk4(sys, t)) < 1e-8);
    }
}

TEST_CASE("degenerate poles fall back to integration")
{
    // omega_B sits on omega_I and both couplings are tiny, so two poles nearly coincide
    const auto sys = SystemEnergies::from_detunings(0.0, 0.0, 1e7, 1e-3, 1e-3);
    const auto roots = solve_cubic(build_cubic(sys));
    CHECK(is_degenerate(roots));
    CHECK_THROWS_AS(ubi_amplitude(roots, sys.v_ai, sys.v_ba, 1e-7), DegenerateRoots);
    const double p = population_b(sys, 1e-7);
    CHECK(std::isfinite(p));
    const double ref = oracle::population_rk4(sys, 1e-7);
    CHECK(ref > 0.0);
    CHECK(std::abs(p - ref) < 1e-6 * ref);
}

TEST_CASE("mirror symmetry in delta2 at delta1 = 0")
{
    const auto drive = preset("cs-1photon").drive();
    for (double n_eff : {1e6, 1e8, 4e8}) {
        for (double d2 = 1e6; d2 < 2e8; d2 *= 1.7) {
            const double plus = population_b(drive.system(n_eff, d2), 1e-7);
            const double minus = population_b(drive.system(n_eff, -d2), 1e-7);
            CHECK(std::abs(plus - minus) < 1e-9);
        }
    }
}

TEST_CASE("gain media and negative couplings are rejected")
{
    SystemEnergies s;
    s.omega_a_tilde = cplx(0.0, 1.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    SystemEnergies n;
    n.v_ai = -1.0;
    CHECK_THROWS_AS(n.validate(), std::invalid_argument);
}

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "atsplit/presets.hpp"
#include "atsplit/spectrum.hpp"

using namespace atsplit;

namespace {

DriveParameters small_drive()
{
    DriveParameters d;
    d.order_n = 1;
    d.rabi_coefficient = 2e6;  // Omega(30) ~ 1.1e7
    d.omega2_rabi = 1e6;
    d.gamma_a = 5e6;
    d.ion_coefficient = 1e4;
    d.scale = 1.0;
    d.interaction_time = 1e-7;
    return d;
}

std::vector<double> sample(const std::vector<double>& grid, auto f)
{
    std::vector<double> y;
    for (double x : grid)
        y.push_back(f(x));
    return y;
}

}  // namespace

TEST_CASE("Rabi frequency and ionization width")
{
    DriveParameters d;
    d.rabi_coefficient = 2.0;
    d.ion_coefficient = 0.5;
    d.order_n = 1;
    CHECK(d.rabi(9.0) == doctest::Approx(6.0));
    CHECK(d.ionization_rate(8.0) == 4.0);
    d.order_n = 2;
    CHECK(d.rabi(5.0) == doctest::Approx(2.0 * std::sqrt(20.0)));
    CHECK(d.rabi(1.0) == 0.0);  // below the first non-zero term
    CHECK(d.rabi(0.5) == 0.0);
    d.scale = 4.0;
    CHECK(d.mean_rabi(1.25) == doctest::Approx(2.0 * std::sqrt(20.0)));
}

TEST_CASE("vacuum cannot pump")
{
    CHECK(averaged_population(small_drive(), {FieldKind::chaotic, 0.0}, 0.0) == 0.0);
    CHECK(averaged_population(small_drive(), {FieldKind::coherent, 0.0}, 3e6) == 0.0);
}

TEST_CASE("fock average is the single-number population")
{
    const auto d = small_drive();
    for (double d2 : {-2e7, 0.0, 4e6})
        CHECK(averaged_population(d, {FieldKind::fock, 42.0}, d2) ==
              population_for_photons(d, 42, d2, d.interaction_time));
}

TEST_CASE("coherent average equals brute-force summation")
{
    const auto d = small_drive();
    for (double d2 : {-1.5e7, -5e6, 0.0, 2e6, 1.1e7}) {
        // independent weights (lgamma) and populations (RK4) over n = 0..300
        double ref = 0.0;
        for (int n = 0; n <= 300; ++n) {
            const double w = std::exp(-30.0 + n * std::log(30.0) - std::lgamma(n + 1.0));
            ref += w * oracle::population_rk4(d.system(n, d2), d.interaction_time);
        }
        const double got = averaged_population(d, {FieldKind::coherent, 30.0}, d2);
        CHECK(std::abs(got - ref) < 1e-12);
    }
}

TEST_CASE("grid construction")
{
    const auto g = linear_grid(-3.7e8, 3.7e8, 501);
    REQUIRE(g.size() == 501);
    CHECK(g.front() == -3.7e8);
    CHECK(g.back() == 3.7e8);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(g[i] == -g[g.size() - 1 - i]);
    CHECK(g[250] == 0.0);
    CHECK_THROWS(linear_grid(0.0, 1.0, 1));
}

TEST_CASE("peak detection on synthetic rows")
{
    const auto grid = linear_grid(-10.0, 10.0, 401);
    const double step = grid[1] - grid[0];

    SUBCASE("monotone row has no peaks")
    {
        const auto y = sample(grid, [](double x) { return x + 20.0; });
        CHECK(find_peaks(y, grid).empty());
    }
    SUBCASE("flat row has no peaks")
    {
        const std::vector<double> y(grid.size(), 0.3);
        CHECK(find_peaks(y, grid).empty());
    }
    SUBCASE("double Lorentzian recovers its centres")
    {
        const double omega = 6.3;
        const auto y = sample(grid, [&](double x) {
            return oracle::lorentzian(x, -omega / 2, 1.0) + oracle::lorentzian(x, omega / 2, 1.0);
        });
        const auto peaks = find_peaks(y, grid);
        REQUIRE(peaks.size() == 2);
        CHECK(std::abs(peaks[0].position + omega / 2) < step);
        CHECK(std::abs(peaks[1].position - omega / 2) < step);
        const auto split = measure_splitting(peaks);
        REQUIRE(split.has_value());
        CHECK(std::abs(*split - omega) < 2 * step);
    }
    SUBCASE("single Lorentzian: width and no splitting")
    {
        for (double w : {0.5, 1.3, 4.0}) {
            const auto y = sample(grid, [&](double x) { return oracle::lorentzian(x, 0.7, w); });
            const auto peaks = find_peaks(y, grid);
            REQUIRE(peaks.size() == 1);
            CHECK_FALSE(measure_splitting(peaks).has_value());
            const auto fwhm = measure_fwhm(y, grid, peaks[0]);
            REQUIRE(fwhm.has_value());
            CHECK(std::abs(*fwhm - w) < 2 * step);
        }
    }
    SUBCASE("ripples below one percent are ignored")
    {
        auto y = sample(grid, [&](double x) { return oracle::lorentzian(x, 0.0, 1.0); });
        y[20] += 0.005;
        CHECK(find_peaks(y, grid).size() == 1);
        y[20] += 0.01;
        CHECK(find_peaks(y, grid).size() == 2);
    }
    SUBCASE("plateau resolves to its leftmost index")
    {
        std::vector<double> y(grid.size(), 0.0);
        y[100] = 1.0;
        y[101] = 1.0;
        y[102] = 1.0;
        const auto peaks = find_peaks(y, grid);
        REQUIRE(peaks.size() == 1);
        CHECK(peaks[0].index == 100);
    }
    SUBCASE("width is absent when a half-height crossing leaves the grid")
    {
        const auto y = sample(grid, [&](double x) { return oracle::lorentzian(x, 9.5, 3.0); });
        const auto peaks = find_peaks(y, grid);
        REQUIRE(peaks.size() == 1);
        CHECK_FALSE(measure_fwhm(y, grid, peaks[0]).has_value());
    }
}

TEST_CASE("sweep results do not depend on the worker count")
{
    auto d = preset("cs-1photon").drive();
    const std::vector<DistributionSpec> specs = {{FieldKind::coherent, 20.0},
                                                 {FieldKind::chaotic, 20.0},
                                                 {FieldKind::squeezed_vacuum, 20.0}};
    const auto grid = linear_grid(-2e8, 2e8, 41);
    const auto one = sweep_spectrum(d, specs, grid, 1);
    const auto many = sweep_spectrum(d, specs, grid, 7);
    REQUIRE(one.fields.size() == 3);
    for (std::size_t f = 0; f < 3; ++f) {
        CHECK(one.fields[f].kind == specs[f].kind);
        CHECK(one.fields[f].populations == many.fields[f].populations);
    }
    CHECK(one.find(FieldKind::chaotic) == &one.fields[1]);
    CHECK(one.find(FieldKind::fock) == nullptr);
}

TEST_CASE("sweep rejects unordered grids and invalid drives")
{
    auto d = small_drive();
    const std::vector<DistributionSpec> specs = {{FieldKind::coherent, 5.0}};
    const std::vector<double> bad = {0.0, 1.0, 1.0};
    CHECK_THROWS_AS(sweep_spectrum(d, specs, bad), std::invalid_argument);
    d.scale = 0.5;
    CHECK_THROWS_AS(sweep_spectrum(d, specs, std::vector<double>{0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("populations stay within [0, 1]")
{
    const auto d = preset("cs-1photon").drive();
    const std::vector<DistributionSpec> specs = {{FieldKind::coherent, 10.0},
                                                 {FieldKind::squeezed_vacuum, 10.0}};
    const auto r = sweep_spectrum(d, specs, linear_grid(-3e8, 3e8, 61), 2);
    for (const auto& f : r.fields)
        for (double p : f.populations) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-9);
        }
}

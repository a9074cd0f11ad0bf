#pragma once

#include <optional>
#include <span>
#include <vector>

#include "atsplit/photon_statistics.hpp"
#include "atsplit/resolvent.hpp"

namespace atsplit {

/// Pump/probe configuration of the compound system. Frequencies and rates in rad/s.
struct DriveParameters {
    int order_n = 1;                ///< photons absorbed on the pump transition
    double delta1 = 0.0;
    double rabi_coefficient = 0.0;  ///< Omega_1(n) = c * sqrt(n_eff (n_eff-1) ... (n_eff-N+1))
    double omega2_rabi = 0.0;       ///< probe Rabi frequency
    double gamma_a = 0.0;
    double ion_coefficient = 0.0;   ///< Gamma_ion(n) = c_ion * n_eff
    double scale = 1.0;
    double interaction_time = 0.0;  ///< seconds

    void validate() const;  ///< throws std::invalid_argument

    double rabi(double n_eff) const;
    double ionization_rate(double n_eff) const;

    /// Mean Rabi frequency for a distribution of (scaled) mean nbar.
    double mean_rabi(double nbar) const { return rabi(nbar * scale); }

    SystemEnergies system(double n_eff, double delta2) const;
};

/// P_b(n, t) for one photon number of the distribution index space.
double population_for_photons(const DriveParameters& drive, std::uint64_t photons, double delta2,
                              double t);

double averaged_population(const DriveParameters& drive, const DistributionSpec& spec,
                           double delta2, double t);
double averaged_population(const DriveParameters& drive, const DistributionSpec& spec,
                           double delta2);

struct Peak {
    double position = 0.0;
    double height = 0.0;
    std::size_t index = 0;  ///< grid index of the sampled maximum
};

struct FieldProfile {
    FieldKind kind = FieldKind::coherent;
    std::vector<double> populations;
    std::vector<Peak> peaks;
    std::optional<double> splitting;
    std::optional<double> fwhm;
};

struct SpectrumResult {
    std::vector<double> delta2_grid;
    std::vector<FieldProfile> fields;

    const FieldProfile* find(FieldKind kind) const;
};

/// n points from lo to hi inclusive; exactly mirror-symmetric when lo == -hi.
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

/// Evaluates every (grid point, field) pair. Work is split over grid points;
/// each point's sum runs in ascending photon number, so results do not depend
/// on the worker count. workers == 0 picks the hardware concurrency.
SpectrumResult sweep_spectrum(const DriveParameters& drive, std::span<const DistributionSpec> specs,
                              std::span<const double> grid, unsigned workers = 0);

/// Strict interior maxima above 1% of the row maximum, refined by a parabola
/// through the sampled maximum and its neighbours. Plateaus resolve to their
/// leftmost index.
std::vector<Peak> find_peaks(std::span<const double> row, std::span<const double> grid);

/// Distance between the two tallest peaks.
std::optional<double> measure_splitting(std::span<const Peak> peaks);

/// Full width at half maximum of `peak`, by linear interpolation of the
/// half-height crossings. Absent if a crossing falls outside the grid.
std::optional<double> measure_fwhm(std::span<const double> row, std::span<const double> grid,
                                   const Peak& peak);

/// Tallest peak, if any.
std::optional<Peak> tallest_peak(std::span<const Peak> peaks);

}  // namespace atsplit

#include "atsplit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace atsplit {

void DriveParameters::validate() const
{
    if (order_n < 1)
        throw std::invalid_argument("order_n must be >= 1");
    if (!(scale >= 1.0))
        throw std::invalid_argument("scale must be >= 1");
    if (rabi_coefficient < 0.0 || omega2_rabi < 0.0 || gamma_a < 0.0 || ion_coefficient < 0.0)
        throw std::invalid_argument("Rabi coefficients and rates must be non-negative");
    if (!(interaction_time >= 0.0))
        throw std::invalid_argument("interaction_time must be >= 0");
}

double DriveParameters::rabi(double n_eff) const
{
    // sqrt of the falling factorial, one factor at a time to stay in range
    double value = rabi_coefficient;
    for (int k = 0; k < order_n; ++k) {
        const double factor = n_eff - k;
        if (factor <= 0.0)
            return 0.0;
        value *= std::sqrt(factor);
    }
    return value;
}

double DriveParameters::ionization_rate(double n_eff) const { return ion_coefficient * n_eff; }

SystemEnergies DriveParameters::system(double n_eff, double delta2) const
{
    const double width = gamma_a + ionization_rate(n_eff);
    return SystemEnergies::from_detunings(delta1, delta2, width, 0.5 * rabi(n_eff),
                                          0.5 * omega2_rabi);
}

double population_for_photons(const DriveParameters& drive, std::uint64_t photons, double delta2,
                              double t)
{
    const double n_eff = scaled_photon_number(photons, drive.scale);
    return population_b(drive.system(n_eff, delta2), t);
}

namespace {

double average_over(const DriveParameters& drive, std::span<const WeightedTerm> terms,
                    double delta2, double t)
{
    double sum = 0.0;
    for (const auto& term : terms) {
        if (term.weight == 0.0)
            continue;
        sum += term.weight * population_for_photons(drive, term.photon_number, delta2, t);
    }
    return sum;
}

}  // namespace

double averaged_population(const DriveParameters& drive, const DistributionSpec& spec,
                           double delta2, double t)
{
    drive.validate();
    const auto terms = enumerate_support(spec);
    return average_over(drive, terms, delta2, t);
}

double averaged_population(const DriveParameters& drive, const DistributionSpec& spec,
                           double delta2)
{
    return averaged_population(drive, spec, delta2, drive.interaction_time);
}

const FieldProfile* SpectrumResult::find(FieldKind kind) const
{
    for (const auto& f : fields)
        if (f.kind == kind)
            return &f;
    return nullptr;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (points < 2)
        throw std::invalid_argument("grid needs at least two points");
    std::vector<double> grid(points);
    const double denom = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double right = static_cast<double>(i);
        const double left = static_cast<double>(points - 1 - i);
        grid[i] = (lo * left + hi * right) / denom;
    }
    return grid;
}

SpectrumResult sweep_spectrum(const DriveParameters& drive, std::span<const DistributionSpec> specs,
                              std::span<const double> grid, unsigned workers)
{
    drive.validate();
    if (grid.empty())
        throw std::invalid_argument("delta2 grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("delta2 grid must be strictly increasing");

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));

    SpectrumResult result;
    result.delta2_grid.assign(grid.begin(), grid.end());

    const double t = drive.interaction_time;
    for (const auto& spec : specs) {
        const auto terms = enumerate_support(spec);
        FieldProfile profile;
        profile.kind = spec.kind;
        profile.populations.assign(grid.size(), 0.0);

        auto work = [&](unsigned w) {
            for (std::size_t i = w; i < grid.size(); i += workers)
                profile.populations[i] = average_over(drive, terms, grid[i], t);
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 1; w < workers; ++w)
                pool.emplace_back(work, w);
            work(0);
        }

        profile.peaks = find_peaks(profile.populations, grid);
        profile.splitting = measure_splitting(profile.peaks);
        if (auto top = tallest_peak(profile.peaks))
            profile.fwhm = measure_fwhm(profile.populations, grid, *top);
        result.fields.push_back(std::move(profile));
    }
    return result;
}

}  // namespace atsplit

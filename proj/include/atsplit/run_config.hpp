#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "atsplit/key_value.hpp"
#include "atsplit/presets.hpp"
#include "atsplit/spectrum.hpp"

namespace atsplit {

/// Parameter bundle of one figure panel.
struct FigureAlias {
    std::string name;  ///< "1a" .. "2d"
    std::string preset;
    double intensity_w_cm2 = 0.0;
    double time = 0.0;
    double gamma_l = 0.0;
    double scale = 1.0;
};

std::optional<FigureAlias> figure_alias(std::string_view name);
const std::vector<FigureAlias>& figure_aliases();

struct RunConfig {
    AtomPreset atom;                  ///< named preset or explicit parameters
    std::optional<std::string> figure;
    std::vector<FieldKind> fields;
    std::optional<double> intensity;  ///< W/cm^2
    std::optional<double> nbar;       ///< distribution mean, scaled units
    double scale = 1.0;
    double time = 1e-7;
    double delta1 = 0.0;
    std::optional<double> delta2_min;
    std::optional<double> delta2_max;
    std::size_t points = 501;
    double tail_mass = 1e-10;
    std::string out = "spectrum.csv";
    unsigned threads = 0;

    /// Realistic mean photon number (before scaling).
    double physical_nbar() const;
    /// Mean photon number of the distributions that are summed over.
    double distribution_nbar() const;
    DriveParameters drive() const;
    double mean_rabi() const;
    std::vector<DistributionSpec> distributions() const;
    std::vector<double> grid() const;
};

/// Builds a RunConfig from merged key/value settings. Later entries win;
/// a `figure` key supplies defaults for keys that are not given explicitly.
/// Throws ConfigError naming the offending key.
RunConfig resolve_config(const KeyValues& kv);

/// Human-readable warnings for strained model assumptions.
std::vector<std::string> validate(const RunConfig& config);

/// Grid default half-width in units of the mean Rabi frequency.
inline constexpr double kDefaultGridHalfWidth = 2.5;

struct RunOutput {
    SpectrumResult spectrum;
    std::vector<std::string> warnings;
    std::string csv_path;
    std::string metrics_path;
};

RunOutput execute(const RunConfig& config);

std::string format_csv(const SpectrumResult& result);
KeyValues format_metrics(const RunConfig& config, const SpectrumResult& result);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int config = 2;
inline constexpr int numeric = 3;
}  // namespace exit_code

/// CLI entry point: parses argv, runs, and reports on the given streams.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace atsplit

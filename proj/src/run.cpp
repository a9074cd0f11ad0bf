#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atsplit/run_config.hpp"

namespace atsplit {

namespace {

class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string column_name(FieldKind kind) { return "p_" + std::string(to_string(kind)); }

std::string metrics_path_for(const std::string& csv)
{
    const auto dot = csv.rfind('.');
    const auto slash = csv.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return csv.substr(0, dot) + ".metrics";
    return csv + ".metrics";
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("out", "cannot write '" + path + "'");
    f << text;
}

}  // namespace

std::string format_csv(const SpectrumResult& result)
{
    std::string out = "delta2_rad_s";
    for (const auto& f : result.fields)
        out += "," + column_name(f.kind);
    out += "\n";
    for (std::size_t i = 0; i < result.delta2_grid.size(); ++i) {
        out += format_double(result.delta2_grid[i]);
        for (const auto& f : result.fields)
            out += "," + format_double(f.populations[i]);
        out += "\n";
    }
    return out;
}

KeyValues format_metrics(const RunConfig& config, const SpectrumResult& result)
{
    KeyValues kv;
    kv.set("preset", config.atom.name);
    if (config.figure)
        kv.set("figure", *config.figure);
    kv.set("nbar_physical", format_double(config.physical_nbar()));
    kv.set("nbar", format_double(config.distribution_nbar()));
    kv.set("scale", format_double(config.scale));
    kv.set("time", format_double(config.time));
    kv.set("mean_rabi", format_double(config.mean_rabi()));
    for (const auto& f : result.fields) {
        const std::string p(to_string(f.kind));
        kv.set(p + ".peaks", std::to_string(f.peaks.size()));
        for (std::size_t i = 0; i < f.peaks.size(); ++i) {
            kv.set(p + ".peak" + std::to_string(i) + ".position", format_double(f.peaks[i].position));
            kv.set(p + ".peak" + std::to_string(i) + ".height", format_double(f.peaks[i].height));
        }
        kv.set(p + ".splitting", f.splitting ? format_double(*f.splitting) : "none");
        kv.set(p + ".fwhm", f.fwhm ? format_double(*f.fwhm) : "none");
    }
    return kv;
}

RunOutput execute(const RunConfig& config)
{
    RunOutput out;
    out.warnings = validate(config);
    const auto grid = config.grid();
    const auto specs = config.distributions();
    out.spectrum = sweep_spectrum(config.drive(), specs, grid, config.threads);

    for (const auto& f : out.spectrum.fields)
        for (double p : f.populations)
            if (!std::isfinite(p) || p < 0.0 || p > 1.0 + 1e-9)
                throw NumericFailure("population outside [0, 1] in " +
                                     std::string(to_string(f.kind)) + " profile");

    out.csv_path = config.out;
    out.metrics_path = metrics_path_for(config.out);
    write_file(out.csv_path, format_csv(out.spectrum));
    write_file(out.metrics_path, format_metrics(config, out.spectrum).to_text());
    return out;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Double-resonance probe spectra of a strongly driven transition"};

    std::optional<std::string> config_path;
    std::optional<std::string> export_preset;
    std::vector<std::string> fields;
    struct Flag {
        const char* key;
        const char* help;
        std::optional<std::string> value;
    };
    std::vector<Flag> flags = {
        {"preset", "cs-1photon | li-2photon", {}},
        {"figure", "panel alias 1a-1d or 2a-2d", {}},
        {"intensity", "pump intensity, W/cm^2", {}},
        {"nbar", "mean photon number in scaled units", {}},
        {"scale", "photon-number scaling factor (>= 1)", {}},
        {"time", "interaction time, s", {}},
        {"delta1", "pump detuning, rad/s", {}},
        {"omega2", "probe Rabi frequency, rad/s", {}},
        {"gamma-l", "source bandwidth, s^-1", {}},
        {"delta2-min", "probe detuning grid start, rad/s", {}},
        {"delta2-max", "probe detuning grid end, rad/s", {}},
        {"tail-mass", "excluded probability per distribution", {}},
        {"out", "CSV path; metrics go next to it", {}},
        {"threads", "worker threads (0 = all cores)", {}},
    };
    std::optional<std::string> points;

    app.add_option("--config", config_path, "key = value configuration file");
    for (auto& f : flags)
        app.add_option(std::string("--") + f.key, f.value, f.help);
    app.add_option("--delta2-points,--points", points, "number of delta2 samples (>= 5)");
    app.add_option("--field", fields, "coherent | chaotic | squeezed | fock (repeatable)");
    app.add_option("--export-preset", export_preset, "print a preset in config format and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::config;
    }

    try {
        if (export_preset) {
            try {
                out << preset(*export_preset).to_key_values().to_text();
            } catch (const UnknownPreset& e) {
                throw ConfigError("export-preset", e.what());
            }
            return exit_code::ok;
        }

        KeyValues kv = config_path ? KeyValues::load(*config_path) : KeyValues{};
        for (const auto& f : flags)
            if (f.value)
                kv.append(f.key, *f.value);
        if (points)
            kv.append("points", *points);
        for (const auto& f : fields)
            kv.append("field", f);

        const RunConfig config = resolve_config(kv);
        const RunOutput result = execute(config);

        for (const auto& w : result.warnings)
            err << "warning: " << w << "\n";

        out << "preset " << config.atom.name << ", nbar " << config.distribution_nbar()
            << " (x" << config.scale << " = " << config.physical_nbar()
            << " photons), mean Rabi " << config.mean_rabi() << " rad/s\n";
        for (const auto& f : result.spectrum.fields) {
            out << "  " << to_string(f.kind) << ": " << f.peaks.size() << " peak(s)";
            for (const auto& p : f.peaks)
                out << " [" << p.position << ", " << p.height << "]";
            out << "; splitting " << (f.splitting ? std::to_string(*f.splitting) : "none")
                << "; fwhm " << (f.fwhm ? std::to_string(*f.fwhm) : "none") << "\n";
        }
        out << "wrote " << result.csv_path << " and " << result.metrics_path << "\n";
        return exit_code::ok;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_code::config;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return exit_code::numeric;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return exit_code::numeric;
    }
}

}  // namespace atsplit

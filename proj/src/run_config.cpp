#include "atsplit/run_config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace atsplit {

const std::vector<FigureAlias>& figure_aliases()
{
    static const std::vector<FigureAlias> aliases = {
        {"1a", "cs-1photon", 0.086, 1e-7, 0.82e5, 4e6},
        {"1b", "cs-1photon", 0.43, 1e-7, 0.82e5, 4e6},
        {"1c", "cs-1photon", 0.86, 1e-7, 0.82e5, 4e6},
        {"1d", "cs-1photon", 1.29, 1e-7, 0.82e5, 4e6},
        {"2a", "li-2photon", 0.49e6, 1e-7, 1.78e5, 1e13},
        {"2b", "li-2photon", 2.47e6, 1e-7, 1.78e5, 1e13},
        {"2c", "li-2photon", 4.95e6, 1e-7, 1.78e5, 1e13},
        {"2d", "li-2photon", 7.43e6, 1e-7, 1.78e5, 1e13},
    };
    return aliases;
}

std::optional<FigureAlias> figure_alias(std::string_view name)
{
    for (const auto& a : figure_aliases())
        if (a.name == name)
            return a;
    return std::nullopt;
}

namespace {

constexpr std::array kKnownKeys = {
    "preset", "figure", "field", "intensity", "nbar", "scale", "time", "delta1", "omega2",
    "gamma-l", "gamma-a", "delta2-min", "delta2-max", "points", "tail-mass", "out", "threads",
    // explicit level scheme (no preset)
    "name", "omega-g-ev", "omega-a-ev", "omega-b-ev", "order", "rabi-coefficient",
    "ion-coefficient", "intermediate-detuning-ev"};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

}  // namespace

double RunConfig::physical_nbar() const
{
    if (intensity)
        return nbar_from_intensity(*intensity, atom.pump_photon_ev(), atom.gamma_l, atom.order_n);
    return nbar.value_or(0.0) * scale;
}

double RunConfig::distribution_nbar() const
{
    if (intensity)
        return physical_nbar() / scale;
    return nbar.value_or(0.0);
}

DriveParameters RunConfig::drive() const
{
    DriveParameters d = atom.drive(delta1);
    d.scale = scale;
    d.interaction_time = time;
    return d;
}

double RunConfig::mean_rabi() const { return drive().mean_rabi(distribution_nbar()); }

std::vector<DistributionSpec> RunConfig::distributions() const
{
    std::vector<DistributionSpec> specs;
    const double n = distribution_nbar();
    for (const auto kind : fields)
        specs.push_back({kind, n, tail_mass});
    return specs;
}

std::vector<double> RunConfig::grid() const
{
    double half = kDefaultGridHalfWidth * mean_rabi();
    if (half == 0.0)
        half = kDefaultGridHalfWidth * std::max(atom.gamma_a, atom.omega2_rabi);
    return linear_grid(delta2_min.value_or(-half), delta2_max.value_or(half), points);
}

RunConfig resolve_config(const KeyValues& kv)
{
    for (const auto& [key, value] : kv.entries())
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw ConfigError(key, "unknown key");

    RunConfig cfg;

    std::optional<FigureAlias> fig;
    if (const auto f = kv.get("figure")) {
        fig = figure_alias(*f);
        if (!fig)
            throw ConfigError("figure", "unknown figure '" + *f + "' (expected 1a-1d or 2a-2d)");
        cfg.figure = *f;
    }

    std::optional<std::string> preset_name = kv.get("preset");
    if (!preset_name && fig)
        preset_name = fig->preset;
    if (preset_name) {
        try {
            cfg.atom = preset(*preset_name);
        } catch (const UnknownPreset& e) {
            throw ConfigError("preset", e.what());
        }
    } else {
        cfg.atom = AtomPreset::from_key_values(kv);
    }

    if (const auto v = kv.get_double("gamma-a"))
        cfg.atom.gamma_a = *v;
    if (const auto v = kv.get_double("gamma-l"))
        cfg.atom.gamma_l = *v;
    else if (fig)
        cfg.atom.gamma_l = fig->gamma_l;
    if (const auto v = kv.get_double("omega2"))
        cfg.atom.omega2_rabi = *v;
    if (cfg.atom.gamma_a < 0.0)
        throw ConfigError("gamma-a", "must be >= 0");
    if (!(cfg.atom.gamma_l > 0.0))
        throw ConfigError("gamma-l", "must be > 0");
    if (cfg.atom.omega2_rabi < 0.0)
        throw ConfigError("omega2", "must be >= 0");

    cfg.scale = kv.get_double("scale").value_or(fig ? fig->scale : cfg.atom.default_scale);
    if (!(cfg.scale >= 1.0))
        throw ConfigError("scale", "must be >= 1");
    cfg.time = kv.get_double("time").value_or(fig ? fig->time : cfg.atom.default_time);
    if (!(cfg.time >= 0.0))
        throw ConfigError("time", "must be >= 0");
    cfg.delta1 = kv.get_double("delta1").value_or(0.0);

    cfg.intensity = kv.get_double("intensity");
    cfg.nbar = kv.get_double("nbar");
    if (cfg.intensity && cfg.nbar)
        throw ConfigError("intensity", "give exactly one of intensity or nbar");
    if (!cfg.intensity && !cfg.nbar) {
        if (!fig)
            throw ConfigError("intensity", "one of intensity or nbar is required");
        cfg.intensity = fig->intensity_w_cm2;
    }
    if (cfg.intensity && !(*cfg.intensity > 0.0))
        throw ConfigError("intensity", "must be > 0");
    if (cfg.nbar && !(*cfg.nbar >= 0.0))
        throw ConfigError("nbar", "must be >= 0");

    for (const auto& entry : kv.get_all("field")) {
        for (const auto& name : split_list(entry)) {
            const auto kind = parse_field_kind(name);
            if (!kind)
                throw ConfigError("field", "unknown field kind '" + name + "'");
            if (std::find(cfg.fields.begin(), cfg.fields.end(), *kind) == cfg.fields.end())
                cfg.fields.push_back(*kind);
        }
    }
    if (cfg.fields.empty() && fig)
        cfg.fields = {FieldKind::coherent, FieldKind::chaotic, FieldKind::squeezed_vacuum};
    if (cfg.fields.empty())
        throw ConfigError("field", "at least one field kind is required");

    if (const auto p = kv.get_int("points")) {
        if (*p < 5)
            throw ConfigError("points", "must be >= 5");
        cfg.points = static_cast<std::size_t>(*p);
    }
    cfg.delta2_min = kv.get_double("delta2-min");
    cfg.delta2_max = kv.get_double("delta2-max");
    cfg.tail_mass = kv.get_double("tail-mass").value_or(1e-10);
    if (!(cfg.tail_mass > 0.0 && cfg.tail_mass <= 1e-4))
        throw ConfigError("tail-mass", "must lie in (0, 1e-4]");
    if (const auto out = kv.get("out"))
        cfg.out = *out;
    if (const auto t = kv.get_int("threads")) {
        if (*t < 0)
            throw ConfigError("threads", "must be >= 0");
        cfg.threads = static_cast<unsigned>(*t);
    }

    for (const auto& spec : cfg.distributions()) {
        try {
            spec.validate();
        } catch (const InvalidSpec& e) {
            throw ConfigError(cfg.nbar ? "nbar" : "intensity", e.what());
        }
    }
    const auto g = cfg.grid();
    if (!(g.front() < g.back()))
        throw ConfigError("delta2-min", "must be smaller than delta2-max");
    return cfg;
}

std::vector<std::string> validate(const RunConfig& config)
{
    std::vector<std::string> warnings;
    const double mean_rabi = config.mean_rabi();
    const auto& atom = config.atom;

    if (atom.omega2_rabi >= mean_rabi / 10.0) {
        std::ostringstream os;
        os << "probe is not weak: omega2 = " << atom.omega2_rabi
           << " rad/s >= mean pump Rabi / 10 = " << mean_rabi / 10.0 << " rad/s";
        warnings.push_back(os.str());
    }
    if (atom.gamma_l >= atom.gamma_a / 10.0) {
        std::ostringstream os;
        os << "zero-bandwidth averaging is invalid: gamma-l = " << atom.gamma_l
           << " >= gamma-a / 10 = " << atom.gamma_a / 10.0;
        warnings.push_back(os.str());
    }
    if (atom.intermediate_detuning_ev) {
        const DriveParameters d = config.drive();
        double max_rabi = 0.0;
        for (const auto& spec : config.distributions()) {
            const auto range = support_range(spec);
            const std::uint64_t photons =
                spec.kind == FieldKind::squeezed_vacuum ? 2 * range.hi : range.hi;
            max_rabi = std::max(max_rabi, d.rabi(scaled_photon_number(photons, d.scale)));
        }
        if (!intermediate_detuning_ok(atom, max_rabi)) {
            std::ostringstream os;
            os << "effective multiphoton Rabi frequency up to " << max_rabi
               << " rad/s is not small against the intermediate-level detuning of "
               << ev_to_rad_per_s(*atom.intermediate_detuning_ev) << " rad/s";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

}  // namespace atsplit

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "atsplit/key_value.hpp"
#include "atsplit/spectrum.hpp"

namespace atsplit {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double planck = 6.62607015e-34;    // J s
inline constexpr double c = 299792458.0;            // m / s
inline constexpr double electron_volt = 1.602176634e-19;  // J
}  // namespace constants

/// Angular frequency (rad/s) of an energy in eV.
double ev_to_rad_per_s(double ev);

class UnknownPreset : public std::invalid_argument {
public:
    explicit UnknownPreset(const std::string& name)
        : std::invalid_argument("unknown preset '" + name + "'") {}
};

class NonPositiveInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResonantIntermediate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Reference level scheme. Rates are s^-1 and enter the dynamics unchanged.
struct AtomPreset {
    std::string name;
    double omega_g_ev = 0.0;
    double omega_a_ev = 0.0;
    double omega_b_ev = 0.0;
    int order_n = 1;
    double gamma_a = 0.0;
    double gamma_l = 0.0;           ///< source bandwidth
    double rabi_coefficient = 0.0;  ///< see DriveParameters::rabi
    double ion_coefficient = 0.0;
    double omega2_rabi = 0.0;       ///< probe Rabi frequency
    double default_scale = 1.0;
    double default_time = 1e-7;
    /// Detuning of the first pump photon from the nearest intermediate level, eV.
    std::optional<double> intermediate_detuning_ev;

    /// Pump photon energy for exact N-photon resonance (delta1 = 0), eV.
    double pump_photon_ev() const { return (omega_a_ev - omega_g_ev) / order_n; }

    DriveParameters drive(double delta1 = 0.0) const;

    KeyValues to_key_values() const;
    static AtomPreset from_key_values(const KeyValues& kv);

    bool operator==(const AtomPreset&) const = default;
};

/// "cs-1photon" or "li-2photon"; throws UnknownPreset otherwise.
AtomPreset preset(std::string_view name);
std::vector<std::string> preset_names();

/// Mean photons per mode of a source of bandwidth gamma_l:
///   nbar = (8 pi^3 c^2 / nu^2) F / gamma_l,   F = I / (N h nu),
/// with nu = E / h the cyclic optical frequency. Intensity in W/cm^2.
double nbar_from_intensity(double intensity_w_cm2, double photon_energy_ev, double gamma_l,
                           int order_n);
double intensity_from_nbar(double nbar, double photon_energy_ev, double gamma_l, int order_n);

struct IntermediateCoupling {
    double mu_gl = 0.0;
    double mu_la = 0.0;
    double omega_la = 0.0;
};

/// mu^(2)_ga = sum_l mu_gl mu_la / (omega_la + omega1).
double two_photon_dipole(std::span<const IntermediateCoupling> intermediates, double omega1);

/// True when max_rabi (rad/s) stays below the intermediate-state detuning of the preset.
bool intermediate_detuning_ok(const AtomPreset& p, double max_rabi);

}  // namespace atsplit

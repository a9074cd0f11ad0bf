#include "atsplit/presets.hpp"

#include <cmath>
#include <numbers>

namespace atsplit {

double ev_to_rad_per_s(double ev) { return ev * constants::electron_volt / constants::hbar; }

DriveParameters AtomPreset::drive(double delta1) const
{
    DriveParameters d;
    d.order_n = order_n;
    d.delta1 = delta1;
    d.rabi_coefficient = rabi_coefficient;
    d.omega2_rabi = omega2_rabi;
    d.gamma_a = gamma_a;
    d.ion_coefficient = ion_coefficient;
    d.scale = default_scale;
    d.interaction_time = default_time;
    return d;
}

namespace {

AtomPreset cesium()
{
    // 6s -> 7p pump, 7p -> 7s probe
    AtomPreset p;
    p.name = "cs-1photon";
    p.omega_g_ev = 0.0;
    p.omega_a_ev = 2.698;
    p.omega_b_ev = 2.298;
    p.order_n = 1;
    p.gamma_a = 0.82e7;
    p.gamma_l = 0.82e5;
    p.rabi_coefficient = 1.884e4;
    p.ion_coefficient = 1.181e-7;
    p.omega2_rabi = p.gamma_a;
    p.default_scale = 4e6;
    p.default_time = 1e-7;
    return p;
}

AtomPreset lithium()
{
    // 2s -> 4s two-photon pump, 4s -> 3p probe
    AtomPreset p;
    p.name = "li-2photon";
    p.omega_g_ev = 0.0;
    p.omega_a_ev = 4.372;
    p.omega_b_ev = 3.835;
    p.order_n = 2;
    p.gamma_a = 1.78e7;
    p.gamma_l = 1.78e5;
    p.rabi_coefficient = 11.225e-7;
    p.ion_coefficient = 3.09e-7;
    p.omega2_rabi = p.gamma_a;
    p.default_scale = 1e13;
    p.default_time = 1e-7;
    p.intermediate_detuning_ev = 0.338;  // from 2p
    return p;
}

}  // namespace

AtomPreset preset(std::string_view name)
{
    if (name == "cs-1photon")
        return cesium();
    if (name == "li-2photon")
        return lithium();
    throw UnknownPreset(std::string(name));
}

std::vector<std::string> preset_names() { return {"cs-1photon", "li-2photon"}; }

KeyValues AtomPreset::to_key_values() const
{
    KeyValues kv;
    kv.set("name", name);
    kv.set("omega-g-ev", format_double(omega_g_ev));
    kv.set("omega-a-ev", format_double(omega_a_ev));
    kv.set("omega-b-ev", format_double(omega_b_ev));
    kv.set("order", std::to_string(order_n));
    kv.set("gamma-a", format_double(gamma_a));
    kv.set("gamma-l", format_double(gamma_l));
    kv.set("rabi-coefficient", format_double(rabi_coefficient));
    kv.set("ion-coefficient", format_double(ion_coefficient));
    kv.set("omega2", format_double(omega2_rabi));
    kv.set("scale", format_double(default_scale));
    kv.set("time", format_double(default_time));
    if (intermediate_detuning_ev)
        kv.set("intermediate-detuning-ev", format_double(*intermediate_detuning_ev));
    return kv;
}

AtomPreset AtomPreset::from_key_values(const KeyValues& kv)
{
    AtomPreset p;
    p.name = kv.get("name").value_or("custom");
    p.omega_g_ev = kv.get_double("omega-g-ev").value_or(0.0);
    p.omega_a_ev = kv.require_double("omega-a-ev");
    p.omega_b_ev = kv.require_double("omega-b-ev");
    const auto order = kv.get_int("order");
    if (!order || *order < 1)
        throw ConfigError("order", "must be an integer >= 1");
    p.order_n = static_cast<int>(*order);
    p.gamma_a = kv.require_double("gamma-a");
    p.gamma_l = kv.require_double("gamma-l");
    p.rabi_coefficient = kv.require_double("rabi-coefficient");
    p.ion_coefficient = kv.get_double("ion-coefficient").value_or(0.0);
    p.omega2_rabi = kv.get_double("omega2").value_or(p.gamma_a);
    p.default_scale = kv.get_double("scale").value_or(1.0);
    p.default_time = kv.get_double("time").value_or(1e-7);
    p.intermediate_detuning_ev = kv.get_double("intermediate-detuning-ev");
    return p;
}

double nbar_from_intensity(double intensity_w_cm2, double photon_energy_ev, double gamma_l,
                           int order_n)
{
    if (!(intensity_w_cm2 > 0.0) || !(photon_energy_ev > 0.0) || !(gamma_l > 0.0) || order_n < 1)
        throw NonPositiveInput("intensity, photon energy, bandwidth and order must be positive");
    const double intensity = intensity_w_cm2 * 1e4;  // W/m^2
    const double photon_energy = photon_energy_ev * constants::electron_volt;
    const double nu = photon_energy / constants::planck;
    const double flux = intensity / (order_n * photon_energy);
    const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    return 8.0 * pi3 * constants::c * constants::c / (nu * nu) * flux / gamma_l;
}

double intensity_from_nbar(double nbar, double photon_energy_ev, double gamma_l, int order_n)
{
    if (!(nbar > 0.0))
        throw NonPositiveInput("nbar must be positive");
    return nbar / nbar_from_intensity(1.0, photon_energy_ev, gamma_l, order_n);
}

double two_photon_dipole(std::span<const IntermediateCoupling> intermediates, double omega1)
{
    double sum = 0.0;
    for (const auto& l : intermediates) {
        const double denom = l.omega_la + omega1;
        if (denom == 0.0)
            throw ResonantIntermediate("pump photon is resonant with an intermediate level");
        sum += l.mu_gl * l.mu_la / denom;
    }
    return sum;
}

bool intermediate_detuning_ok(const AtomPreset& p, double max_rabi)
{
    if (!p.intermediate_detuning_ev)
        return true;
    return max_rabi < ev_to_rad_per_s(*p.intermediate_detuning_ev);
}

}  // namespace atsplit

#pragma once

// Photon-number distributions of the pump mode. Weights are evaluated in the
// log domain so that mean photon numbers up to ~1e9 stay representable.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atsplit {

enum class FieldKind { coherent, chaotic, squeezed_vacuum, fock };

std::string_view to_string(FieldKind kind);
std::optional<FieldKind> parse_field_kind(std::string_view name);

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DistributionSpec {
    FieldKind kind = FieldKind::coherent;
    double nbar = 0.0;  ///< mean photon number in scaled units
    double tail_mass = 1e-10;

    void validate() const;  ///< throws InvalidSpec
};

struct WeightedTerm {
    std::uint64_t photon_number = 0;  ///< photons entering P_b (2k for squeezed vacuum)
    double weight = 0.0;
};

/// Inclusive range of the distribution's own index (k for squeezed vacuum).
struct SupportRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// log-domain weights; -inf where the weight vanishes exactly
double log_weight_coherent(std::uint64_t n, double nbar);
double log_weight_chaotic(std::uint64_t n, double nbar);
double log_weight_sv(std::uint64_t k, double nbar);

double weight_coherent(std::uint64_t n, double nbar);
double weight_chaotic(std::uint64_t n, double nbar);
WeightedTerm weight_sv(std::uint64_t k, double nbar);

/// Truncation window whose excluded probability is below spec.tail_mass.
SupportRange support_range(const DistributionSpec& spec);

/// Streams the emitted support in ascending photon number without materializing it.
void for_each_term(const DistributionSpec& spec, const std::function<void(const WeightedTerm&)>& fn);

/// Materialized support; weights are not renormalized.
std::vector<WeightedTerm> enumerate_support(const DistributionSpec& spec);

/// Effective photon number fed to Rabi and ionization formulas.
double scaled_photon_number(std::uint64_t n, double scale);

}  // namespace atsplit

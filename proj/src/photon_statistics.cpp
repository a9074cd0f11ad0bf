#include "atsplit/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace atsplit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn2Pi = 1.8378770664093454836;

// lgamma(n+1) - (n+1/2) ln n + n - ln(2 pi)/2
double stirling_error(double n)
{
    if (n <= 15.0)
        return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - 0.5 * kLn2Pi;
    const double nn = n * n;
    constexpr double s0 = 1.0 / 12.0, s1 = 1.0 / 360.0, s2 = 1.0 / 1260.0, s3 = 1.0 / 1680.0,
                     s4 = 1.0 / 1188.0;
    return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x ln(x / m) + m - x without cancellation near x == m
double deviance_term(double x, double m)
{
    if (std::abs(x - m) < 0.1 * (x + m)) {
        double v = (x - m) / (x + m);
        double s = (x - m) * v;
        double ej = 2.0 * x * v;
        const double v2 = v * v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v2;
            const double next = s + ej / (2 * j + 1);
            if (next == s)
                return s;
            s = next;
        }
        return s;
    }
    return x * std::log(x / m) + m - x;
}

// ln Gamma(x), Stirling remainder
double binet(double x)
{
    const double x2 = x * x;
    return (1.0 / 12.0 - (1.0 / 360.0 - (1.0 / 1260.0 - 1.0 / (1680.0 * x2)) / x2) / x2) / x;
}

// ln[Gamma(k + 1/2) / Gamma(k + 1)]
double log_half_gamma_ratio(double k)
{
    if (k < 32.0)
        return std::lgamma(k + 0.5) - std::lgamma(k + 1.0);
    return k * std::log1p(-0.5 / (k + 1.0)) - 0.5 * std::log(k + 1.0) + 0.5 + binet(k + 0.5) -
           binet(k + 1.0);
}

// ln(nbar / (1 + nbar))
double log_ratio(double nbar) { return -std::log1p(1.0 / nbar); }

bool is_integral(double x) { return std::floor(x) == x; }

}  // namespace

std::string_view to_string(FieldKind kind)
{
    switch (kind) {
    case FieldKind::coherent: return "coherent";
    case FieldKind::chaotic: return "chaotic";
    case FieldKind::squeezed_vacuum: return "squeezed";
    case FieldKind::fock: return "fock";
    }
    return "unknown";
}

std::optional<FieldKind> parse_field_kind(std::string_view name)
{
    if (name == "coherent" || name == "coh")
        return FieldKind::coherent;
    if (name == "chaotic" || name == "thermal")
        return FieldKind::chaotic;
    if (name == "squeezed" || name == "sv" || name == "squeezed-vacuum" || name == "squeezed_vacuum")
        return FieldKind::squeezed_vacuum;
    if (name == "fock")
        return FieldKind::fock;
    return std::nullopt;
}

void DistributionSpec::validate() const
{
    if (!(nbar >= 0.0) || !std::isfinite(nbar))
        throw InvalidSpec("nbar must be a finite non-negative number");
    if (!(tail_mass > 0.0 && tail_mass <= 1e-4))
        throw InvalidSpec("tail_mass must lie in (0, 1e-4]");
    if (kind == FieldKind::fock && !is_integral(nbar))
        throw InvalidSpec("a Fock state needs an integer photon number");
}

double log_weight_coherent(std::uint64_t n, double nbar)
{
    if (nbar == 0.0)
        return n == 0 ? 0.0 : kNegInf;
    if (n == 0)
        return -nbar;
    const double x = static_cast<double>(n);
    return -0.5 * (kLn2Pi + std::log(x)) - stirling_error(x) - deviance_term(x, nbar);
}

double log_weight_chaotic(std::uint64_t n, double nbar)
{
    if (nbar == 0.0)
        return n == 0 ? 0.0 : kNegInf;
    return static_cast<double>(n) * log_ratio(nbar) - std::log1p(nbar);
}

double log_weight_sv(std::uint64_t k, double nbar)
{
    if (nbar == 0.0)
        return k == 0 ? 0.0 : kNegInf;
    const double x = static_cast<double>(k);
    return -0.5 * std::log1p(nbar) + log_half_gamma_ratio(x) - 0.5 * std::log(std::numbers::pi) +
           x * log_ratio(nbar);
}

double weight_coherent(std::uint64_t n, double nbar) { return std::exp(log_weight_coherent(n, nbar)); }

double weight_chaotic(std::uint64_t n, double nbar) { return std::exp(log_weight_chaotic(n, nbar)); }

WeightedTerm weight_sv(std::uint64_t k, double nbar)
{
    return {2 * k, std::exp(log_weight_sv(k, nbar))};
}

SupportRange support_range(const DistributionSpec& spec)
{
    spec.validate();
    const double nbar = spec.nbar;
    const double half_tail = 0.5 * spec.tail_mass;

    if (spec.kind == FieldKind::fock) {
        const auto n = static_cast<std::uint64_t>(nbar);
        return {n, n};
    }
    if (nbar == 0.0)
        return {0, 0};

    switch (spec.kind) {
    case FieldKind::coherent: {
        // Walk outward from the mode; successive-ratio bounds close each tail.
        const auto mode = static_cast<std::uint64_t>(std::floor(nbar));
        const auto step = static_cast<std::uint64_t>(std::max(1.0, std::ceil(0.5 * std::sqrt(nbar))));
        std::uint64_t lo = mode;
        std::uint64_t hi = mode;
        auto lower_tail = [&](std::uint64_t l) {
            if (l == 0)
                return 0.0;
            const double r = static_cast<double>(l - 1) / nbar;
            return weight_coherent(l - 1, nbar) / (1.0 - r);
        };
        auto upper_tail = [&](std::uint64_t h) {
            const double r = nbar / static_cast<double>(h + 2);
            return weight_coherent(h + 1, nbar) / (1.0 - r);
        };
        while (lower_tail(lo) >= half_tail)
            lo = lo > step ? lo - step : 0;
        while (upper_tail(hi) >= half_tail)
            hi += step;
        // one guard step beyond each closure
        lo = lo > step ? lo - step : 0;
        hi += step;
        return {lo, hi};
    }
    case FieldKind::chaotic: {
        // excluded mass = q^(hi+1)
        const double hi = std::ceil(std::log(spec.tail_mass) / log_ratio(nbar));
        return {0, static_cast<std::uint64_t>(std::max(hi, 0.0))};
    }
    case FieldKind::squeezed_vacuum: {
        // sum_{k>K} w_k <= sqrt(1+nbar) q^(K+1) / sqrt(pi (K+1)), using C(2k,k)/4^k <= 1/sqrt(pi k)
        const double lq = log_ratio(nbar);
        auto log_bound = [&](double kk) {
            return 0.5 * std::log1p(nbar) + (kk + 1.0) * lq - 0.5 * std::log(std::numbers::pi * (kk + 1.0));
        };
        double k = std::max(0.0, std::ceil(std::log(spec.tail_mass) / lq));
        const double log_tail = std::log(spec.tail_mass);
        while (log_bound(k) >= log_tail)
            k += std::max(1.0, std::floor(k / 64.0));
        return {0, static_cast<std::uint64_t>(k)};
    }
    case FieldKind::fock: break;
    }
    return {0, 0};
}

void for_each_term(const DistributionSpec& spec, const std::function<void(const WeightedTerm&)>& fn)
{
    const SupportRange range = support_range(spec);
    for (std::uint64_t i = range.lo; i <= range.hi; ++i) {
        switch (spec.kind) {
        case FieldKind::coherent: fn({i, weight_coherent(i, spec.nbar)}); break;
        case FieldKind::chaotic: fn({i, weight_chaotic(i, spec.nbar)}); break;
        case FieldKind::squeezed_vacuum: fn(weight_sv(i, spec.nbar)); break;
        case FieldKind::fock: fn({i, 1.0}); break;
        }
    }
}

std::vector<WeightedTerm> enumerate_support(const DistributionSpec& spec)
{
    const SupportRange range = support_range(spec);
    std::vector<WeightedTerm> terms;
    terms.reserve(range.hi - range.lo + 1);
    for_each_term(spec, [&](const WeightedTerm& t) { terms.push_back(t); });
    return terms;
}

double scaled_photon_number(std::uint64_t n, double scale)
{
    return static_cast<double>(n) * scale;
}

}  // namespace atsplit

#include "atsplit/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace atsplit {

SystemEnergies SystemEnergies::from_detunings(double delta1, double delta2, double width_a,
                                              double v_ai, double v_ba)
{
    SystemEnergies sys;
    sys.omega_i = 0.0;
    sys.omega_a_tilde = cplx(-delta1, -0.5 * width_a);
    sys.omega_b = -delta1 + delta2;
    sys.v_ai = v_ai;
    sys.v_ba = v_ba;
    return sys;
}

void SystemEnergies::validate() const
{
    if (omega_a_tilde.imag() > 0.0)
        throw std::invalid_argument("Im(omega_A) must be <= 0 (decay rates are non-negative)");
    if (v_ai < 0.0 || v_ba < 0.0)
        throw std::invalid_argument("couplings V_AI and V_BA must be non-negative");
}

double Cubic::coefficient_scale() const
{
    return std::max({1.0, std::abs(c2), std::abs(c1), std::abs(c0)});
}

double RootTriple::magnitude_scale() const
{
    return std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[2])});
}

double RootTriple::min_gap() const
{
    return std::min({std::abs(z[0] - z[1]), std::abs(z[0] - z[2]), std::abs(z[1] - z[2])});
}

Cubic build_cubic(const SystemEnergies& sys)
{
    const cplx wi = sys.omega_i;
    const cplx wa = sys.omega_a_tilde;
    const cplx wb = sys.omega_b;
    const double vba2 = sys.v_ba * sys.v_ba;
    const double vai2 = sys.v_ai * sys.v_ai;

    // (z - wi)(z - wa)(z - wb) - (z - wi) vba2 - (z - wb) vai2
    Cubic c;
    c.c2 = -(wi + wa + wb);
    c.c1 = wi * wa + wi * wb + wa * wb - vba2 - vai2;
    c.c0 = -wi * wa * wb + wi * vba2 + wb * vai2;
    return c;
}

namespace {

void newton_polish(const Cubic& cubic, cplx& z)
{
    const cplx f = cubic(z);
    const cplx df = cubic.derivative(z);
    if (df == cplx(0.0))
        return;
    const cplx candidate = z - f / df;
    if (std::abs(cubic(candidate)) <= std::abs(f))
        z = candidate;
}

}  // namespace

RootTriple solve_cubic(const Cubic& cubic)
{
    // Work in units of the root magnitude so that p, q are O(1).
    const double lambda = std::max({std::abs(cubic.c2), std::sqrt(std::abs(cubic.c1)),
                                    std::cbrt(std::abs(cubic.c0))});
    RootTriple roots;
    if (lambda == 0.0)
        return roots;

    const cplx a = cubic.c2 / lambda;
    const cplx b = cubic.c1 / (lambda * lambda);
    const cplx c = cubic.c0 / (lambda * lambda * lambda);

    // z = t - a/3 gives t^3 + p t + q = 0
    const cplx p = b - a * a / 3.0;
    const cplx q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    const cplx s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const cplx w1 = -q / 2.0 + s;
    const cplx w2 = -q / 2.0 - s;
    const cplx w = std::abs(w1) >= std::abs(w2) ? w1 : w2;

    const cplx shift = a / 3.0;
    if (std::abs(w) == 0.0) {
        roots.z.fill(-shift * lambda);
    } else {
        const cplx u = std::pow(w, 1.0 / 3.0);
        const cplx v = -p / (3.0 * u);
        const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        const cplx omega2 = std::conj(omega);
        roots.z[0] = (u + v - shift) * lambda;
        roots.z[1] = (omega * u + omega2 * v - shift) * lambda;
        roots.z[2] = (omega2 * u + omega * v - shift) * lambda;
    }

    for (auto& z : roots.z)
        newton_polish(cubic, z);
    return roots;
}

bool is_degenerate(const RootTriple& roots)
{
    const double scale = roots.magnitude_scale();
    if (scale == 0.0)
        return true;
    return roots.min_gap() < kDegeneracyThreshold * scale;
}

namespace {

// (e^x - 1) / x, without cancellation near x = 0.
cplx phi1(cplx x)
{
    if (std::abs(x) < 1e-3)
        return 1.0 + x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)));
    const double a = x.real(), b = x.imag();
    const double s = std::sin(0.5 * b);
    const cplx em1(std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b));
    return em1 / x;
}

// First divided difference of f(z) = exp(-i z t).
cplx divided_difference(cplx a, cplx b, double t)
{
    const cplx minus_i_t(0.0, -t);
    return minus_i_t * std::exp(minus_i_t * a) * phi1(minus_i_t * (b - a));
}

}  // namespace

cplx ubi_amplitude(const RootTriple& roots, double v_ai, double v_ba, double t)
{
    if (is_degenerate(roots))
        throw DegenerateRoots();

    // The pole sum sum_k exp(-i z_k t) / prod_{j!=k}(z_k - z_j) is the second divided
    // difference of exp(-i z t); build it from first differences, dividing by the widest gap.
    const auto& z = roots.z;
    int p = 0, r = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(z[i] - z[j]) > std::abs(z[p] - z[r])) {
                p = i;
                r = j;
            }
    const int q = 3 - p - r;
    const cplx second =
        (divided_difference(z[p], z[q], t) - divided_difference(z[q], z[r], t)) / (z[p] - z[r]);
    return v_ba * v_ai * second;
}

double population_b(const SystemEnergies& sys, double t)
{
    if (t == 0.0 || sys.v_ai == 0.0 || sys.v_ba == 0.0)
        return 0.0;

    const RootTriple roots = solve_cubic(build_cubic(sys));
    cplx amplitude;
    if (is_degenerate(roots))
        amplitude = ubi_amplitude_ode(sys, t);
    else
        amplitude = ubi_amplitude(roots, sys.v_ai, sys.v_ba, t);
    return std::norm(amplitude);
}

}  // namespace atsplit

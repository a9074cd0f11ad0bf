#pragma once

// Three-state compound system |I> = |g,n>, |A> = |a,n-N>, |B> = |b,n-N,m+1>.
//
// All frequencies are angular (rad/s) and measured in a frame where the
// initial state sits at zero, so the optical carrier never enters:
//
//   omega_I = 0
//   omega_A = -delta1 - i (gamma_a + Gamma_ion) / 2
//   omega_B = -delta1 + delta2
//
// The B <- I transition amplitude is the inverse Laplace transform of
//   G_BI(z) = V_BA V_AI / D(z),
//   D(z)    = (z - wI)(z - wA)(z - wB) - (z - wI) V_BA^2 - (z - wB) V_AI^2,
// evaluated as a sum over the three poles of D.

#include <array>
#include <complex>
#include <stdexcept>

namespace atsplit {

using cplx = std::complex<double>;

struct SystemEnergies {
    double omega_i = 0.0;
    cplx omega_a_tilde{0.0, 0.0};
    double omega_b = 0.0;
    double v_ai = 0.0;  ///< Omega_1^(N) / 2
    double v_ba = 0.0;  ///< Omega_2 / 2

    /// Frame-reduced system from detunings and the total width of |a>.
    static SystemEnergies from_detunings(double delta1, double delta2, double width_a,
                                         double v_ai, double v_ba);

    /// Throws std::invalid_argument on a gain medium or negative couplings.
    void validate() const;
};

/// Monic cubic z^3 + c2 z^2 + c1 z + c0.
struct Cubic {
    cplx c2{}, c1{}, c0{};

    cplx operator()(cplx z) const { return ((z + c2) * z + c1) * z + c0; }
    cplx derivative(cplx z) const { return (3.0 * z + 2.0 * c2) * z + c1; }
    double coefficient_scale() const;  ///< max(1, |c2|, |c1|, |c0|)
};

struct RootTriple {
    std::array<cplx, 3> z{};

    double magnitude_scale() const;  ///< max |z_i|
    double min_gap() const;          ///< min_{i<j} |z_i - z_j|
};

/// Relative root gap below which the pole sum is not evaluated.
inline constexpr double kDegeneracyThreshold = 1e-8;

class DegenerateRoots : public std::runtime_error {
public:
    DegenerateRoots() : std::runtime_error("resolvent poles are (nearly) degenerate") {}
};

Cubic build_cubic(const SystemEnergies& sys);

/// Cardano's formula on the depressed cubic, followed by one Newton step per root.
RootTriple solve_cubic(const Cubic& cubic);

bool is_degenerate(const RootTriple& roots);

/// U_BI(t) from the pole expansion. Throws DegenerateRoots when two poles
/// are closer than kDegeneracyThreshold relative to the root magnitude.
cplx ubi_amplitude(const RootTriple& roots, double v_ai, double v_ba, double t);

/// U_BI(t) by direct integration of i dc/dt = M c, c(0) = (1, 0, 0).
cplx ubi_amplitude_ode(const SystemEnergies& sys, double t);

/// P_b(t) = |U_BI(t)|^2. Falls back to the ODE path for degenerate poles.
double population_b(const SystemEnergies& sys, double t);

}  // namespace atsplit

#include "atsplit/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

namespace atsplit {

namespace {

using State = std::array<cplx, 3>;

// i dc/dtau = (M / scale) c with tau = scale * t.
struct AmplitudeRhs {
    cplx wi, wa, wb;
    double vai, vba;

    void operator()(const State& c, State& dcdt, double /*tau*/) const
    {
        const cplx minus_i(0.0, -1.0);
        dcdt[0] = minus_i * (wi * c[0] + vai * c[1]);
        dcdt[1] = minus_i * (vai * c[0] + wa * c[1] + vba * c[2]);
        dcdt[2] = minus_i * (vba * c[1] + wb * c[2]);
    }
};

}  // namespace

cplx ubi_amplitude_ode(const SystemEnergies& sys, double t)
{
    if (t == 0.0)
        return 0.0;

    const double scale = std::max({std::abs(sys.omega_i), std::abs(sys.omega_a_tilde),
                                   std::abs(sys.omega_b), sys.v_ai, sys.v_ba, 1.0 / t});
    const AmplitudeRhs rhs{sys.omega_i / scale, sys.omega_a_tilde / scale,
                           sys.omega_b / scale, sys.v_ai / scale, sys.v_ba / scale};

    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(1e-14, 1e-13);
    State c{cplx(1.0), cplx(0.0), cplx(0.0)};
    odeint::integrate_adaptive(stepper, rhs, c, 0.0, scale * t, 1e-2);
    return c[2];
}

}  // namespace atsplit

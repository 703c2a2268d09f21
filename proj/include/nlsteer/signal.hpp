#pragma once

#include <complex>
#include <vector>

#include "nlsteer/piecewise.hpp"

namespace nlsteer {

using cplx = std::complex<double>;

/// Phase theta(t) = rate*t + offset + pp(t) (pp optional).
struct PhaseFn {
    double rate = 0.0;
    double offset = 0.0;
    bool has_pp = false;
    PiecewisePoly pp;

    double eval(double t) const { return rate * t + offset + (has_pp ? pp.eval(t) : 0.0); }
    double rate_at(double t) const { return rate + (has_pp ? pp.eval_deriv(t) : 0.0); }
};

/// Real amplitude profile; optionally the square root of the stored polynomial
/// (the oscillator envelope v_r is sqrt of a piecewise-linear v_r^2).
struct Profile {
    PiecewisePoly pp;
    bool sqrt_of = false;

    double eval(double t) const {
        double v = pp.eval(t);
        return sqrt_of ? std::sqrt(std::max(v, 0.0)) : v;
    }
    /// Derivative where defined; sqrt profiles are one-sided-singular at zeros,
    /// callers use this for sampling/plots only, never for quadrature.
    double eval_deriv(double t) const {
        if (!sqrt_of) return pp.eval_deriv(t);
        double v = std::max(pp.eval(t), 0.0);
        double dv = pp.eval_deriv(t);
        if (v <= 0.0) return 0.0;
        return 0.5 * dv / std::sqrt(v);
    }
};

/// One additive term of a control signal:
///   carrier_amp:   scale * prof(t) * e^{i theta(t)}
///   carrier_deriv: scale * d/dt[ prof(t) e^{i theta(t)} ]
/// Integrals of carrier_deriv terms are taken by parts so the t^{-1/2}
/// singularity of sqrt-profile derivatives never meets a quadrature node.
struct SignalComponent {
    enum class Kind { carrier_amp, carrier_deriv };
    Kind kind = Kind::carrier_amp;
    PhaseFn theta;
    Profile prof;
    cplx scale = cplx(1.0, 0.0);
};

/// Complex-valued control signal on [t0, t1]: a sum of components.
class Signal {
  public:
    std::vector<SignalComponent> comps;

    cplx value(double t) const;

    /// Exact-to-quadrature integral of value(t) * e^{i omega t} over [a, b].
    cplx integral_mod(double a, double b, double omega) const;

    /// Bound on the carrier rate (for timestep rules); sampled estimate.
    double max_rate(double t0, double t1) const;

    bool empty() const { return comps.empty(); }

    static Signal constant(cplx v, double t0, double t1);
};

/// Gauss-Legendre panel integration of f(t)*e^{i phase(t)} with panels sized by
/// the local phase rate; used by Signal and exposed for tests.
cplx oscillatory_quad(const std::function<double(double)>& amp,
                      const std::function<double(double)>& phase,
                      const std::function<double(double)>& phase_rate, double a, double b);

}  // namespace nlsteer

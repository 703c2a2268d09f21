#include "nlsteer/signal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace nlsteer {

namespace {

// 12-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGLX[12] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047, -0.5873179542866175,
    -0.3678314989981802, -0.1252334085114689, 0.1252334085114689,  0.3678314989981802,
    0.5873179542866175,  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kGLW[12] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462, 0.2031674267230659,
    0.2334925365383548, 0.2491470458134028, 0.2491470458134028, 0.2334925365383548,
    0.2031674267230659, 0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

constexpr double kMaxPhasePerPanel = 0.5;  // radians

}  // namespace

cplx oscillatory_quad(const std::function<double(double)>& amp,
                      const std::function<double(double)>& phase,
                      const std::function<double(double)>& phase_rate, double a, double b) {
    if (b <= a) return cplx(0.0, 0.0);
    double r = std::max({std::abs(phase_rate(a)), std::abs(phase_rate(0.5 * (a + b))),
                         std::abs(phase_rate(b))});
    int panels = std::max(1, static_cast<int>(std::ceil(r * (b - a) / kMaxPhasePerPanel)));
    panels = std::min(panels, 100000);
    cplx acc(0.0, 0.0);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h, mid = lo + 0.5 * h;
        for (int q = 0; q < 12; ++q) {
            double t = mid + 0.5 * h * kGLX[q];
            double ph = phase(t);
            acc += (0.5 * h * kGLW[q] * amp(t)) * cplx(std::cos(ph), std::sin(ph));
        }
    }
    return acc;
}

namespace {

void collect_cuts(const SignalComponent& c, double a, double b, std::vector<double>& cuts) {
    auto add = [&](const std::vector<double>& brk) {
        for (double t : brk)
            if (t > a + 1e-15 && t < b - 1e-15) cuts.push_back(t);
    };
    add(c.prof.pp.breakpoints());
    if (c.theta.has_pp) add(c.theta.pp.breakpoints());
}

cplx integrate_component(const SignalComponent& c, double a, double b, double omega) {
    std::vector<double> cuts{a, b};
    collect_cuts(c, a, b, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-15; }),
               cuts.end());

    auto phase = [&](double t) { return c.theta.eval(t) + omega * t; };
    auto rate = [&](double t) { return c.theta.rate_at(t) + omega; };

    cplx acc(0.0, 0.0);
    if (c.kind == SignalComponent::Kind::carrier_amp) {
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            acc += oscillatory_quad([&](double t) { return c.prof.eval(t); }, phase, rate,
                                    cuts[i], cuts[i + 1]);
        return c.scale * acc;
    }
    // carrier_deriv, by parts over the whole [a, b]:
    //   int d/dt[P e^{i th}] e^{i om t} dt = [P e^{i(th+om t)}]_a^b - i om' ... with
    //   om constant: boundary term minus i*om * int P e^{i(th+om t)} dt, where the
    //   d/dt e^{i th} part stays inside the boundary term. Expanding instead:
    //   value = e^{i th}(P' + i th' P); int value e^{i om t}
    //         = [P e^{i(th+om t)}]_a^b - i om int P e^{i(th+om t)} dt.
    double pha = phase(a), phb = phase(b);
    cplx boundary = c.prof.eval(b) * cplx(std::cos(phb), std::sin(phb)) -
                    c.prof.eval(a) * cplx(std::cos(pha), std::sin(pha));
    cplx rest(0.0, 0.0);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        rest += oscillatory_quad([&](double t) { return c.prof.eval(t); }, phase, rate, cuts[i],
                                 cuts[i + 1]);
    return c.scale * (boundary - cplx(0.0, omega) * rest);
}

}  // namespace

cplx Signal::value(double t) const {
    cplx acc(0.0, 0.0);
    for (const auto& c : comps) {
        double ph = c.theta.eval(t);
        cplx e(std::cos(ph), std::sin(ph));
        if (c.kind == SignalComponent::Kind::carrier_amp) {
            acc += c.scale * c.prof.eval(t) * e;
        } else {
            acc += c.scale * e *
                   cplx(c.prof.eval_deriv(t), c.theta.rate_at(t) * c.prof.eval(t));
        }
    }
    return acc;
}

cplx Signal::integral_mod(double a, double b, double omega) const {
    cplx acc(0.0, 0.0);
    for (const auto& c : comps) acc += integrate_component(c, a, b, omega);
    return acc;
}

double Signal::max_rate(double t0, double t1) const {
    double m = 0.0;
    for (const auto& c : comps)
        for (int s = 0; s <= 8; ++s) {
            double t = t0 + (t1 - t0) * s / 8.0;
            m = std::max(m, std::abs(c.theta.rate_at(t)));
        }
    return m;
}

Signal Signal::constant(cplx v, double t0, double t1) {
    Signal s;
    if (std::abs(v) == 0.0) return s;
    SignalComponent c;
    c.kind = SignalComponent::Kind::carrier_amp;
    c.theta = PhaseFn{0.0, std::arg(v), false, {}};
    c.prof = Profile{PiecewisePoly::constant(t0, t1, std::abs(v)), false};
    s.comps.push_back(std::move(c));
    return s;
}

}  // namespace nlsteer

#include "spe/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spe/errors.hpp"
#include "spe/spectral.hpp"

namespace spe {

namespace {

struct VW {
    double v, w;
};

// Generic RK4 driver with the |dV| <= 0.1 |V| halving rule and cap stop.
template <class Rhs>
CharTrajectory integrate_vw(double v0, double w0, const Rhs& f, const OdeOptions& opt,
                            const std::function<double(double)>& u_of_t,
                            const std::function<double(double)>& g_of_t) {
    CharTrajectory traj;
    auto push = [&](double t, VW s) {
        traj.times.push_back(t);
        traj.states.push_back(CharState{s.v, s.w, u_of_t ? u_of_t(t) : 0.0,
                                        g_of_t ? g_of_t(t) : 0.0});
    };

    VW s{v0, w0};
    double t = 0.0;
    push(t, s);
    while (t < opt.t_max) {
        double dt = std::min(opt.dt, opt.t_max - t);
        for (int h = 0; h < 80; ++h) {
            const VW d = f(t, s);
            if (std::abs(d.v) * dt <= 0.1 * std::max(std::abs(s.v), 1e-12)) break;
            dt *= 0.5;
        }
        if (dt < 1e-16 * std::max(1.0, t)) break;

        const VW k1 = f(t, s);
        const VW k2 = f(t + 0.5 * dt, {s.v + 0.5 * dt * k1.v, s.w + 0.5 * dt * k1.w});
        const VW k3 = f(t + 0.5 * dt, {s.v + 0.5 * dt * k2.v, s.w + 0.5 * dt * k2.w});
        const VW k4 = f(t + dt, {s.v + dt * k3.v, s.w + dt * k3.w});
        s.v += dt / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
        s.w += dt / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w);
        t += dt;
        push(t, s);

        if (s.v > opt.v_cap) {
            traj.blew_up = true;
            break;
        }
        if (s.v < -opt.v_cap || std::abs(s.w) > 1e3 * opt.v_cap) break;  // runaway, not blow-up
    }

    if (traj.blew_up) {
        // 1/V vanishes linearly at t_*; least-squares line through the last
        // three samples, extrapolated to zero.
        const std::size_t n = traj.times.size();
        double st = 0, sy = 0, stt = 0, sty = 0;
        for (std::size_t i = n - 3; i < n; ++i) {
            const double ti = traj.times[i], yi = 1.0 / traj.states[i].v;
            st += ti;
            sy += yi;
            stt += ti * ti;
            sty += ti * yi;
        }
        const double slope = (3.0 * sty - st * sy) / (3.0 * stt - st * st);
        const double icept = (sy - slope * st) / 3.0;
        traj.t_star = -icept / slope;
    }
    return traj;
}

}  // namespace

CharTrajectory integrate_lower_system(double v0, double w0, const BreakingBounds& bounds,
                                      const OdeOptions& opt) {
    if (!(v0 > 0.0)) throw InvalidArgument("integrate_lower_system: need v0 > 0");
    if (!(opt.dt > 0.0)) throw InvalidArgument("integrate_lower_system: need dt > 0");
    const double f0 = bounds.f0, f1 = bounds.f1;
    auto rhs = [f0, f1](double, VW s) {
        return VW{s.v * s.w - f1, s.w * s.w - s.v * f0};
    };
    return integrate_vw(v0, w0, rhs, opt, nullptr, nullptr);
}

CharTrajectory integrate_full_system(double v0, double w0, const BreakingBounds& bounds,
                                     const std::function<double(double)>& u_of_t,
                                     const std::function<double(double)>& g_of_t,
                                     const OdeOptions& opt) {
    if (!(opt.dt > 0.0)) throw InvalidArgument("integrate_full_system: need dt > 0");
    (void)bounds;  // the closures are expected to respect |U| <= F1, |G| <= F0
    auto rhs = [&](double t, VW s) {
        const double u = u_of_t(t), g = g_of_t(t);
        return VW{s.v * s.w + u, s.w * s.w + s.v * g + u * u};
    };
    return integrate_vw(v0, w0, rhs, opt, u_of_t, g_of_t);
}

bool lower_blowup_conditions(double v0, double w0, const BreakingBounds& bounds) {
    if (!(v0 > 0.0)) return false;
    const double f0 = bounds.f0, f1 = bounds.f1;
    const double thr = f0 > 0.0 ? std::cbrt(f1 * f1 / (4.0 * f0))
                                : std::numeric_limits<double>::infinity();
    if (v0 > thr) {
        const double rad = 2.0 * f0 * v0 * v0 * v0 - 0.5 * f1 * f1;
        return v0 * w0 > f1 + std::sqrt(std::max(rad, 0.0));
    }
    return v0 * w0 > f1;
}

double blowup_time_bound(double v0, double w0, const BreakingBounds& bounds) {
    if (!lower_blowup_conditions(v0, w0, bounds))
        throw CriterionInapplicable("blowup_time_bound: blow-up hypotheses not satisfied");
    const double f0 = bounds.f0, f1 = bounds.f1;
    const double vdot0 = v0 * w0 - f1;
    const double rad = vdot0 * vdot0 - 2.0 * f0 * v0 * v0 * v0 + 0.5 * f1 * f1;
    return v0 / std::min(vdot0, std::sqrt(std::max(rad, 0.0)));
}

double lyapunov(const PhaseState& p, const BreakingBounds& bounds) {
    const double f0 = bounds.f0, f1 = bounds.f1;
    return 0.5 * p.xdot * p.xdot - f0 * p.x + 0.25 * f1 * f1 * p.x * p.x * p.x * p.x;
}

double domain_sigma(double x, const BreakingBounds& bounds) {
    const double f0 = bounds.f0, f1 = bounds.f1;
    const double x_star = std::cbrt(4.0 * f0 / (f1 * f1));
    if (x >= x_star) return 0.0;
    return -std::sqrt(std::max(2.0 * f0 * x - 0.5 * f1 * f1 * x * x * x * x, 0.0));
}

bool in_domain_D(const PhaseState& p, const BreakingBounds& bounds) {
    return p.x > 0.0 && p.xdot < domain_sigma(p.x, bounds);
}

PhaseState phase_from_slopes(double v, double w, const BreakingBounds& bounds) {
    if (!(v > 0.0)) throw InvalidArgument("phase_from_slopes: need v > 0");
    const double x = 1.0 / v;
    return PhaseState{x, bounds.f1 * x * x - w * x};
}

void slopes_from_phase(const PhaseState& p, const BreakingBounds& bounds, double& v, double& w) {
    if (!(p.x > 0.0)) throw InvalidArgument("slopes_from_phase: need x > 0");
    v = 1.0 / p.x;
    w = (bounds.f1 * p.x * p.x - p.xdot) / p.x;
}

double upper_blowup_time(double v0, double f1) {
    if (!(v0 > 0.0 && f1 > 0.0)) throw InvalidArgument("upper_blowup_time: need v0, f1 > 0");
    return (0.5 * M_PI - std::atan(v0)) / f1;
}

double upper_solution(double v0, double f1, double t) {
    if (!(v0 > 0.0 && f1 > 0.0)) throw InvalidArgument("upper_solution: need v0, f1 > 0");
    if (t >= upper_blowup_time(v0, f1))
        throw BlowupPassed("upper_solution: evaluation at or past the blow-up time");
    return std::tan(std::atan(v0) + f1 * t);
}

CharacteristicTrace trace_characteristic(const Trajectory& traj, double xi) {
    if (traj.fields.size() < 2)
        throw InvalidArgument("trace_characteristic: trajectory has fewer than two saves");

    const std::size_t ns = traj.fields.size();
    std::vector<TrigInterpolant> u_interp, ux_interp;
    u_interp.reserve(ns);
    ux_interp.reserve(ns);
    for (const auto& f : traj.fields) {
        u_interp.emplace_back(f);
        ux_interp.emplace_back(spectral_derivative(f, 1));
    }

    CharacteristicTrace trace;
    trace.xi = xi;
    trace.truncated = traj.stop_reason != StopReason::completed;
    if (trace.truncated) trace.reason = to_string(traj.stop_reason);

    trace.times = traj.times;
    trace.positions.resize(ns);
    trace.jacobian.resize(ns);
    trace.positions[0] = xi;

    double X = xi;
    for (std::size_t i = 0; i + 1 < ns; ++i) {
        const double t0 = traj.times[i], t1 = traj.times[i + 1];
        const double span = t1 - t0;
        // linear-in-time blend of the two bracketing saves
        auto u_at = [&](double x, double t) {
            const double a = (t - t0) / span;
            return (1.0 - a) * u_interp[i](x) + a * u_interp[i + 1](x);
        };
        const int sub = 2;
        const double h = span / sub;
        for (int ss = 0; ss < sub; ++ss) {
            const double ts = t0 + h * ss;
            auto xdot = [&](double x, double t) {
                const double u = u_at(x, t);
                return -0.5 * u * u;
            };
            const double k1 = xdot(X, ts);
            const double k2 = xdot(X + 0.5 * h * k1, ts + 0.5 * h);
            const double k3 = xdot(X + 0.5 * h * k2, ts + 0.5 * h);
            const double k4 = xdot(X + h * k3, ts + h);
            X += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        trace.positions[i + 1] = X;
    }

    // jacobian = exp(-int W ds) with W = u u_x sampled along the trace
    std::vector<double> w_along(ns);
    for (std::size_t i = 0; i < ns; ++i)
        w_along[i] = u_interp[i](trace.positions[i]) * ux_interp[i](trace.positions[i]);
    double acc = 0.0;
    trace.jacobian[0] = 1.0;
    for (std::size_t i = 1; i < ns; ++i) {
        acc += 0.5 * (traj.times[i] - traj.times[i - 1]) * (w_along[i] + w_along[i - 1]);
        trace.jacobian[i] = std::exp(-acc);
    }

    // consistency diagnostic: dU/dt should match G along the trace
    double worst = 0.0;
    std::vector<double> u_along(ns);
    for (std::size_t i = 0; i < ns; ++i) u_along[i] = u_interp[i](trace.positions[i]);
    for (std::size_t i = 1; i + 1 < ns; ++i) {
        const double dudt = (u_along[i + 1] - u_along[i - 1]) / (traj.times[i + 1] - traj.times[i - 1]);
        const PeriodicField g = antiderivative_periodic(traj.fields[i]);
        worst = std::max(worst, std::abs(dudt - interpolate(g, trace.positions[i])));
    }
    trace.max_udot_residual = worst;
    return trace;
}

}  // namespace spe

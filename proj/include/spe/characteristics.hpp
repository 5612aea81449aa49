#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spe/bounds.hpp"
#include "spe/pde.hpp"

namespace spe {

/// Slope variables along a characteristic: v = u_x, w = u u_x, plus the
/// solution value u and antiderivative value g when a full system drives
/// them.
struct CharState {
    double v = 0.0;
    double w = 0.0;
    double u = 0.0;
    double g = 0.0;
};

/// Phase-plane point of the scalar form: x = 1/V, xdot = F1 x^2 - y with
/// y = W x.
struct PhaseState {
    double x = 0.0;
    double xdot = 0.0;
};

struct OdeOptions {
    double dt = 1e-3;      // base step; halved while |dV| would exceed 0.1 V
    double t_max = 50.0;
    double v_cap = 1e6;    // blow-up declared past this
};

struct CharTrajectory {
    std::vector<double> times;
    std::vector<CharState> states;
    bool blew_up = false;
    double t_star = 0.0;  // extrapolated blow-up time when blew_up
};

/// Lower comparison system V' = V W - F1, W' = W^2 - V F0 (RK4, step
/// halving near blow-up). Stops past the V cap (blow-up; t_star from a
/// linear fit of 1/V through its last three samples) or at t_max.
CharTrajectory integrate_lower_system(double v0, double w0, const BreakingBounds& bounds,
                                      const OdeOptions& opt = {});

/// Full slope system V' = V W + U, W' = W^2 + V G + U^2 driven by
/// bound-respecting closures U(t), G(t).
CharTrajectory integrate_full_system(double v0, double w0, const BreakingBounds& bounds,
                                     const std::function<double(double)>& u_of_t,
                                     const std::function<double(double)>& g_of_t,
                                     const OdeOptions& opt = {});

/// Do (v0, w0) satisfy the blow-up hypotheses of the lower system?
bool lower_blowup_conditions(double v0, double w0, const BreakingBounds& bounds);

/// Upper bound on the lower-system blow-up time:
///   V(0) / min{ V'(0), sqrt(V'(0)^2 - 2 F0 V(0)^3 + F1^2/2) },
/// with V'(0) = V0 W0 - F1. Throws CriterionInapplicable unless the
/// blow-up hypotheses hold.
double blowup_time_bound(double v0, double w0, const BreakingBounds& bounds);

/// E(x, xdot) = 1/2 xdot^2 - F0 x + 1/4 F1^2 x^4, strictly increasing along
/// trajectories in x > 0.
double lyapunov(const PhaseState& p, const BreakingBounds& bounds);

/// Lower boundary of the trapping region:
/// sigma(x) = -sqrt(2 F0 x - 1/2 F1^2 x^4) on (0, x_*), 0 on [x_*, inf),
/// with x_* = 4^(1/3) (F0/F1^2)^(1/3).
double domain_sigma(double x, const BreakingBounds& bounds);

/// Membership in D = { x > 0, xdot < sigma(x) }.
bool in_domain_D(const PhaseState& p, const BreakingBounds& bounds);

/// Map between slope variables and the phase plane.
PhaseState phase_from_slopes(double v, double w, const BreakingBounds& bounds);
void slopes_from_phase(const PhaseState& p, const BreakingBounds& bounds, double& v, double& w);

/// Closed form of V' = F1 (V^2 + 1): V(t) = tan(arctan V0 + F1 t).
/// Throws BlowupPassed for t >= upper_blowup_time.
double upper_solution(double v0, double f1, double t);
double upper_blowup_time(double v0, double f1);

/// A characteristic x = X(xi, t) traced through a stored trajectory, with
/// the jacobian d_xi X = exp(-int u u_x ds) along it and the max residual of
/// dU/dt = G as a consistency diagnostic.
struct CharacteristicTrace {
    double xi = 0.0;
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> jacobian;
    bool truncated = false;
    std::string reason;
    double max_udot_residual = 0.0;
};

CharacteristicTrace trace_characteristic(const Trajectory& traj, double xi);

}  // namespace spe

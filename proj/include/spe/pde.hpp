#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "spe/field.hpp"

namespace spe {

/// Pseudospectral evolution settings for u_t = 1/2 u^2 u_x + d_x^-1 u on a
/// circle of length L (the antiderivative term is dropped in dispersionless
/// mode, leaving the advection equation).
struct SimConfig {
    std::size_t n = 1024;
    double L = 1.0;
    double cfl = 0.25;          // advection safety factor, in (0, 1]
    double t_end = 1.0;
    std::size_t save_every = 10;
    bool dealias = true;        // 2/3 rule on the cubic term
    double w_max = 1e3;         // blow-up cap on W = sup u u_x
    double drift_tol = 1e-2;    // relative E1 drift stop; <= 0 disables.
                                // Ignored in dispersionless mode, where E1 is
                                // genuinely not conserved.
    bool dispersionless = false;
};

enum class StopReason { completed, blowup_cap, drift_exceeded, dt_underflow };

std::string to_string(StopReason r);

/// Time-stepping record: full fields at save times, W = sup_x u u_x at every
/// step, (E0, E1) per save.
struct Trajectory {
    std::vector<double> times;               // save times
    std::vector<PeriodicField> fields;       // saved fields
    std::vector<double> step_times;          // every accepted step
    std::vector<double> w_series;            // W at every accepted step
    std::vector<std::array<double, 2>> invariant_series;  // (E0, E1) per save
    std::vector<double> max_u_series;        // max|u| per save
    StopReason stop_reason = StopReason::completed;

    double final_e0_drift = 0.0;  // relative, vs the initial save
    double final_e1_drift = 0.0;
};

/// Right-hand side: 1/2 u^2 u_x with spectral derivative and physical-space
/// products (optionally dealiased), plus the mean-zero antiderivative.
/// Result is projected to mean zero. Requires f mean-zero.
PeriodicField rhs(const PeriodicField& f, const SimConfig& cfg);

/// RK4 stepping with dt = cfl * dx / max(1/2 max|u|^2, eps), zero mode
/// re-projected each step. Stops at t_end, the W cap, E1 drift, or dt
/// underflow. Requires u0 mean-zero.
Trajectory simulate(const PeriodicField& u0, const SimConfig& cfg);

/// max over grid nodes of u u_x (spectral derivative), refined by a local
/// quadratic fit around the best node.
double sup_uux(const PeriodicField& f);

}  // namespace spe

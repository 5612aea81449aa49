#include "spe/pde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spe/errors.hpp"
#include "spe/quadrature.hpp"
#include "spe/spectral.hpp"

namespace spe {

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::completed: return "completed";
        case StopReason::blowup_cap: return "blowup_cap";
        case StopReason::drift_exceeded: return "drift_exceeded";
        case StopReason::dt_underflow: return "dt_underflow";
    }
    return "unknown";
}

namespace {

// RHS on raw samples; assumes the zero mode of u is already negligible.
std::vector<double> rhs_samples(const std::vector<double>& u, double L, bool dealias,
                                bool dispersionless) {
    const std::size_t n = u.size();
    const double base = 2.0 * M_PI / L;

    auto c = fft::rfft(u);
    auto dc = c;
    for (std::size_t k = 0; k < dc.size(); ++k)
        dc[k] *= std::complex<double>(0.0, base * static_cast<double>(k));
    dc[n / 2] = 0.0;
    const std::vector<double> ux = fft::irfft(dc, n);

    std::vector<double> nl(n);
    for (std::size_t j = 0; j < n; ++j) nl[j] = 0.5 * u[j] * u[j] * ux[j];

    auto nc = fft::rfft(nl);
    if (dealias) dealias_two_thirds(nc, n);
    nc[0] = 0.0;  // result stays mean-zero

    if (!dispersionless) {
        for (std::size_t k = 1; k < nc.size(); ++k)
            nc[k] += c[k] / std::complex<double>(0.0, base * static_cast<double>(k));
        nc[n / 2] = std::complex<double>(nc[n / 2].real(), 0.0);
    }
    return fft::irfft(nc, n);
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double sup_uux_from(const std::vector<double>& u, const std::vector<double>& ux) {
    const std::size_t n = u.size();
    std::size_t best = 0;
    double wbest = u[0] * ux[0];
    for (std::size_t j = 1; j < n; ++j) {
        const double w = u[j] * ux[j];
        if (w > wbest) {
            wbest = w;
            best = j;
        }
    }
    const double ym = u[(best + n - 1) % n] * ux[(best + n - 1) % n];
    const double yp = u[(best + 1) % n] * ux[(best + 1) % n];
    return parabolic_peak_value(ym, wbest, yp);
}

}  // namespace

PeriodicField rhs(const PeriodicField& f, const SimConfig& cfg) {
    if (!f.is_mean_zero())
        throw ZeroMassViolation("rhs: field has nonzero mean");
    return PeriodicField(f.length(),
                         rhs_samples(f.samples(), f.length(), cfg.dealias, cfg.dispersionless));
}

double sup_uux(const PeriodicField& f) {
    const PeriodicField ux = spectral_derivative(f, 1);
    return sup_uux_from(f.samples(), ux.samples());
}

Trajectory simulate(const PeriodicField& u0, const SimConfig& cfg) {
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw InvalidArgument("simulate: need 0 < cfl <= 1");
    if (!(cfg.w_max > 0.0)) throw InvalidArgument("simulate: need w_max > 0");
    if (u0.size() != cfg.n || u0.length() != cfg.L)
        throw InvalidArgument("simulate: u0 does not match the configured grid");
    if (!u0.is_mean_zero())
        throw ZeroMassViolation("simulate: initial data has nonzero mean");

    const std::size_t n = cfg.n;
    const double L = cfg.L;
    const double dx = L / static_cast<double>(n);
    // The antiderivative term has spectral radius L/(2 pi); keep RK4 inside
    // its imaginary-axis stability interval.
    const double dt_dispersive = cfg.cfl * 2.8 * 2.0 * M_PI / L;
    const bool drift_stop = cfg.drift_tol > 0.0 && !cfg.dispersionless;

    Trajectory traj;
    std::vector<double> u = u0.samples();

    auto derivative_of = [&](const std::vector<double>& s) {
        auto c = fft::rfft(s);
        const double base = 2.0 * M_PI / L;
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] *= std::complex<double>(0.0, base * static_cast<double>(k));
        c[n / 2] = 0.0;
        return fft::irfft(c, n);
    };
    auto circle_e0 = [&](const std::vector<double>& s) {
        double acc = 0.0;
        for (double v : s) acc += v * v;
        return acc / static_cast<double>(n) * L;
    };
    auto circle_e1 = [&](const std::vector<double>& ux) {
        double acc = 0.0;
        for (double v : ux) acc += std::sqrt(1.0 + v * v);
        return acc / static_cast<double>(n) * L;
    };

    std::vector<double> ux = derivative_of(u);
    const double e0_ref = circle_e0(u);
    const double e1_ref = circle_e1(ux);

    auto save = [&](double t) {
        traj.times.push_back(t);
        traj.fields.emplace_back(L, u);
        traj.invariant_series.push_back({circle_e0(u), circle_e1(ux)});
        traj.max_u_series.push_back(max_abs(u));
    };

    double t = 0.0;
    traj.step_times.push_back(0.0);
    traj.w_series.push_back(sup_uux_from(u, ux));
    save(0.0);

    std::size_t step = 0;
    traj.stop_reason = StopReason::completed;
    while (t < cfg.t_end - 1e-14 * std::max(1.0, cfg.t_end)) {
        const double speed = std::max(0.5 * max_abs(u) * max_abs(u), 1e-8);
        double dt = std::min({cfg.cfl * dx / speed, dt_dispersive, cfg.t_end - t});
        if (dt < 1e-13 * std::max(1.0, t)) {
            traj.stop_reason = StopReason::dt_underflow;
            break;
        }

        const std::vector<double> k1 = rhs_samples(u, L, cfg.dealias, cfg.dispersionless);
        std::vector<double> tmp(n);
        for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + 0.5 * dt * k1[j];
        const std::vector<double> k2 = rhs_samples(tmp, L, cfg.dealias, cfg.dispersionless);
        for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + 0.5 * dt * k2[j];
        const std::vector<double> k3 = rhs_samples(tmp, L, cfg.dealias, cfg.dispersionless);
        for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + dt * k3[j];
        const std::vector<double> k4 = rhs_samples(tmp, L, cfg.dealias, cfg.dispersionless);
        for (std::size_t j = 0; j < n; ++j)
            u[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

        // re-project the zero mode
        const double mean = std::accumulate(u.begin(), u.end(), 0.0) / static_cast<double>(n);
        for (double& v : u) v -= mean;

        t += dt;
        ++step;
        ux = derivative_of(u);

        const double w = sup_uux_from(u, ux);
        traj.step_times.push_back(t);
        traj.w_series.push_back(w);

        const bool due_save = step % cfg.save_every == 0;
        if (w > cfg.w_max) {
            traj.stop_reason = StopReason::blowup_cap;
            save(t);
            break;
        }
        if (drift_stop && std::abs(circle_e1(ux) - e1_ref) / e1_ref > cfg.drift_tol) {
            traj.stop_reason = StopReason::drift_exceeded;
            save(t);
            break;
        }
        if (due_save || t >= cfg.t_end - 1e-14 * std::max(1.0, cfg.t_end)) save(t);
    }

    traj.final_e0_drift = std::abs(traj.invariant_series.back()[0] - e0_ref) / std::max(e0_ref, 1e-300);
    traj.final_e1_drift = std::abs(traj.invariant_series.back()[1] - e1_ref) / std::max(e1_ref, 1e-300);
    return traj;
}

}  // namespace spe

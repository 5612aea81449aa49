#include "spe/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "spe/criteria.hpp"
#include "spe/errors.hpp"
#include "spe/exact.hpp"

namespace spe {

namespace {

// Bounded worker pool over an index range; results land in preallocated
// slots, so the merge order is the parameter order.
template <class F>
void parallel_for(std::size_t count, F&& body) {
    const unsigned nw =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
    if (nw == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

BlowupFit fit_blowup(std::span<const double> times, std::span<const double> w, double w_min,
                     double tail_frac, std::size_t min_samples) {
    const std::size_t n = times.size();
    if (n != w.size() || n < min_samples)
        throw NotBreaking("fit_blowup: series too short");

    const double w_last = w.back();
    const double thr = std::max(w_min, tail_frac * w_last);

    // tail = everything after the last sample at or below the threshold
    std::size_t start = n;
    for (std::size_t i = n; i-- > 0;) {
        if (w[i] <= thr) {
            start = i + 1;
            break;
        }
        if (i == 0) start = 0;
    }
    if (start >= n || n - start < min_samples)
        throw NotBreaking("fit_blowup: no qualifying tail above the threshold");
    for (std::size_t i = start + 1; i < n; ++i)
        if (w[i] <= w[i - 1] * (1.0 - 1e-9))
            throw NotBreaking("fit_blowup: tail is not monotonically increasing");

    double st = 0, sy = 0, stt = 0, sty = 0;
    const auto cnt = static_cast<double>(n - start);
    for (std::size_t i = start; i < n; ++i) {
        const double t = times[i], y = 1.0 / w[i];
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double slope = (cnt * sty - st * sy) / (cnt * stt - st * st);
    const double icept = (sy - slope * st) / cnt;
    if (!(slope < 0.0)) throw NotBreaking("fit_blowup: W^-1 is not decreasing");

    BlowupFit fit;
    fit.a = icept;
    fit.b = slope;
    fit.c = -1.0 / slope;
    fit.t_break = -icept / slope;
    fit.window_lo = times[start];
    fit.window_hi = times[n - 1];
    fit.count = n - start;
    double ss = 0.0;
    for (std::size_t i = start; i < n; ++i) {
        const double r = icept + slope * times[i] - 1.0 / w[i];
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / cnt);
    if (!(fit.t_break > times[n - 1]))
        throw NotBreaking("fit_blowup: extrapolated time does not lie past the data");
    return fit;
}

std::vector<CosineScanRow> scan_cosine(std::span<const double> a_values, const SimConfig& cfg) {
    std::vector<CosineScanRow> rows(a_values.size());
    parallel_for(a_values.size(), [&](std::size_t i) {
        const double a = a_values[i];
        CosineScanRow row;
        row.a = a;
        row.t0 = 1.0 / (M_PI * a * a);
        try {
            const auto closed = cosine_closed_invariants(a);
            InvariantSet inv;
            inv.e0 = closed.e0;
            inv.e1 = closed.e1;
            inv.domain = Domain::circle;
            const auto report = evaluate_breaking_criterion(cosine_profile_sampled(a),
                                                            breaking_bounds_periodic(inv));
            row.breaking_predicted = report.breaking_predicted;

            const auto u0 =
                PeriodicField::sample(cfg.L, cfg.n, [a](double x) { return cosine_profile(a, x); });
            const Trajectory traj = simulate(u0, cfg);
            const BlowupFit fit = fit_blowup(traj.step_times, traj.w_series);
            row.t_break = fit.t_break;
            row.c = fit.c;
            row.fit_ok = true;
        } catch (const std::exception& e) {
            row.t_break = std::numeric_limits<double>::quiet_NaN();
            row.c = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
        }
        rows[i] = std::move(row);
    });
    return rows;
}

std::vector<GaussianScanRow> scan_gaussian(std::span<const double> a_grid,
                                           std::span<const double> b_grid) {
    std::vector<GaussianScanRow> rows(a_grid.size() * b_grid.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const double a = a_grid[i % a_grid.size()];
        const double b = b_grid[i / a_grid.size()];
        GaussianScanRow row;
        row.a = a;
        row.b = b;
        try {
            const InvariantSet inv = gaussian_line_invariants(a, b);
            row.wellposed = wellposedness_margin(inv) < 1.0;
            const auto report = evaluate_breaking_criterion(gaussian_line_profile(a, b),
                                                            breaking_bounds_line(inv));
            row.breaking = report.breaking_predicted;
        } catch (const CriterionInapplicable& e) {
            row.breaking = false;
            row.error = e.what();
        }
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace spe

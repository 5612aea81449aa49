#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spe/pde.hpp"

namespace spe {

/// Inverse-linear blow-up fit: W^-1 ~ A + B t over the tail window, so
/// W ~ C / (T - t) with C = -1/B and T = -A/B.
struct BlowupFit {
    double a = 0.0;          // intercept of W^-1
    double b = 0.0;          // slope of W^-1 (negative on genuine blow-up)
    double c = 0.0;          // -1/B
    double t_break = 0.0;    // -A/B
    double window_lo = 0.0;  // first and last fitted times
    double window_hi = 0.0;
    double rms_residual = 0.0;
    std::size_t count = 0;
};

/// Ordinary least squares of W^-1 against t over the tail where
/// W > max(w_min, tail_frac * W_last), requiring a monotone tail of at
/// least min_samples points. Throws NotBreaking when no such tail exists.
BlowupFit fit_blowup(std::span<const double> times, std::span<const double> w,
                     double w_min = 10.0, double tail_frac = 0.05,
                     std::size_t min_samples = 20);

struct CosineScanRow {
    double a = 0.0;
    double t_break = 0.0;  // NaN when the fit failed
    double c = 0.0;
    double t0 = 0.0;       // dispersionless reference 1/(pi a^2)
    bool breaking_predicted = false;
    bool fit_ok = false;
    std::string error;
};

/// One simulate+fit per amplitude, plus the circle criterion verdict and the
/// dispersionless reference time. Rows are computed concurrently and merged
/// in parameter order; per-row failures are recorded and the scan continues.
std::vector<CosineScanRow> scan_cosine(std::span<const double> a_values, const SimConfig& cfg);

struct GaussianScanRow {
    double a = 0.0;
    double b = 0.0;
    bool wellposed = false;
    bool breaking = false;
    std::string error;
};

/// Certificate map over the (a, b) grid: wellposed via 2 sqrt(2 E1 E2) < 1,
/// breaking via the line criterion. The two flags are never both set.
std::vector<GaussianScanRow> scan_gaussian(std::span<const double> a_grid,
                                           std::span<const double> b_grid);

}  // namespace spe

#include "spe/invariants.hpp"

#include <cmath>
#include <vector>

#include "spe/errors.hpp"
#include "spe/quadrature.hpp"
#include "spe/spectral.hpp"

namespace spe {

namespace {

double pow52(double s) { return s * s * std::sqrt(s); }

// 4th-order central differences on a decaying line grid; out-of-range
// samples are zero.
std::vector<double> fd_derivative(const std::vector<double>& y, double h) {
    const auto n = static_cast<std::ptrdiff_t>(y.size());
    auto at = [&](std::ptrdiff_t j) { return (j < 0 || j >= n) ? 0.0 : y[j]; };
    std::vector<double> d(y.size());
    for (std::ptrdiff_t j = 0; j < n; ++j)
        d[j] = (at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2)) / (12.0 * h);
    return d;
}

}  // namespace

InvariantSet compute_invariants(const PeriodicField& f) {
    const std::size_t n = f.size();
    const PeriodicField ux = spectral_derivative(f, 1);
    const PeriodicField uxx = spectral_derivative(f, 2);
    const PeriodicField g = antiderivative_periodic(f);

    std::vector<double> i0(n), i1(n), i2(n), im1(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = f[j], p = ux[j], pp = uxx[j];
        const double s = 1.0 + p * p;
        i0[j] = u * u;
        i1[j] = std::sqrt(s);
        i2[j] = pp * pp / pow52(s);
        im1[j] = g[j] * g[j] - u * u * u * u / 12.0;
    }
    auto integ = [&](const std::vector<double>& y) {
        return quadrature(PeriodicField(f.length(), y));
    };
    return InvariantSet{integ(im1), integ(i0), integ(i1), integ(i2), Domain::circle};
}

InvariantSet compute_invariants(const LineField& f) {
    const std::size_t n = f.size();
    const double h = f.dx();
    const std::vector<double> ux = fd_derivative(f.samples(), h);
    const std::vector<double> uxx = fd_derivative(ux, h);
    const LineField g = antiderivative_line(f);

    std::vector<double> i0(n), i1(n), i2(n), im1(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double u = f[j], p = ux[j], pp = uxx[j];
        const double s = 1.0 + p * p;
        i0[j] = u * u;
        i1[j] = std::sqrt(s) - 1.0;
        i2[j] = pp * pp / pow52(s);
        im1[j] = g[j] * g[j] - u * u * u * u / 12.0;
    }
    auto integ = [&](const std::vector<double>& y) { return simpson_samples(y, h); };
    return InvariantSet{integ(im1), integ(i0), integ(i1), integ(i2), Domain::line};
}

PeriodicField scaling_transform(const PeriodicField& f, double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("scaling_transform: alpha must be positive");
    std::vector<double> s = f.samples();
    for (double& v : s) v *= alpha;
    return PeriodicField(alpha * f.length(), std::move(s));
}

LineField scaling_transform(const LineField& f, double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("scaling_transform: alpha must be positive");
    std::vector<double> s = f.samples();
    for (double& v : s) v *= alpha;
    return LineField(alpha * f.half_width(), std::move(s), alpha * f.decay_tol());
}

}  // namespace spe

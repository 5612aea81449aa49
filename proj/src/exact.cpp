#include "spe/exact.hpp"

#include <algorithm>
#include <cmath>

#include "spe/quadrature.hpp"

namespace spe {

PulseParams::PulseParams(double modulus) : m(modulus), n(0.0) {
    if (!(modulus > 0.0 && modulus < 1.0))
        throw InvalidArgument("PulseParams: modulus must lie in (0,1)");
    n = std::sqrt((1.0 - modulus) * (1.0 + modulus));
}

PulsePoint<double> pulse_parametric(const PulseParams& p, double y, double t) {
    return pulse_eval<double>(p, y, t);
}

double pulse_x_jacobian(const PulseParams& p, double y, double t) {
    const double phi = p.m * (y + t), psi = p.n * (y - t);
    const double s = std::sin(psi), ch = std::cosh(phi);
    const double den = p.m * p.m * s * s + p.n * p.n * ch * ch;
    return 1.0 - 8.0 * p.m * p.m * p.n * p.n * s * s * ch * ch / (den * den);
}

double pulse_x_jacobian_cosform(const PulseParams& p, double y, double t) {
    const double phi = p.m * (y + t), psi = p.n * (y - t);
    return std::cos(4.0 * std::atan(p.m * std::sin(psi) / (p.n * std::cosh(phi))));
}

namespace {

// |X(y,t) - y| is bounded by 4m/n, so a fixed bracket radius is safe.
double invert_pulse_x(const PulseParams& p, double t, double x) {
    const double radius = 4.0 * p.m / p.n + 1.0;
    double lo = x - radius, hi = x + radius;
    double y = x;
    for (int it = 0; it < 200; ++it) {
        const double f = pulse_eval<double>(p, y, t).x - x;
        if (f > 0.0)
            hi = y;
        else
            lo = y;
        const double step = f / pulse_x_jacobian(p, y, t);
        double ynext = y - step;
        if (!(ynext > lo && ynext < hi)) ynext = 0.5 * (lo + hi);  // bisect fallback
        if (std::abs(ynext - y) < 1e-13 * std::max(1.0, std::abs(y))) return ynext;
        y = ynext;
    }
    return y;
}

}  // namespace

std::vector<double> pulse_sample(const PulseParams& p, double t, std::span<const double> xs) {
    if (!p.invertible())
        throw NotInvertible("pulse_sample: X is not invertible for m >= sin(pi/8)");
    std::vector<double> us(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double y = invert_pulse_x(p, t, xs[i]);
        us[i] = pulse_eval<double>(p, y, t).u;
    }
    return us;
}

SampledProfile pulse_profile(const PulseParams& p, double t, std::span<const double> xs) {
    if (!p.invertible())
        throw NotInvertible("pulse_profile: X is not invertible for m >= sin(pi/8)");
    SampledProfile prof;
    prof.x.assign(xs.begin(), xs.end());
    prof.u.resize(xs.size());
    prof.ux.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double y = invert_pulse_x(p, t, xs[i]);
        const auto jets = pulse_eval<Jet>(p, Jet(y, 1.0), Jet(t));
        prof.u[i] = jets.u.f;
        prof.ux[i] = jets.u.d / jets.x.d;
    }
    return prof;
}

double pulse_sampling_half_width(const PulseParams& p, double t, double tol) {
    // Tail amplitude ~ (8m/n) exp(-|phi|) with phi = m (y + t).
    return std::abs(t) + (std::log(8.0 * p.m / p.n) - std::log(tol)) / p.m + 2.0;
}

InvariantSet pulse_line_invariants(const PulseParams& p, double t, std::size_t n_points) {
    const double Y = pulse_sampling_half_width(p, t, 1e-12);
    if (n_points % 2 == 0) ++n_points;
    const double h = 2.0 * Y / static_cast<double>(n_points - 1);

    std::vector<double> i0(n_points), i1(n_points), i2(n_points), im1(n_points);
    // G = dU/dt at fixed y equals the decaying antiderivative at x = X(y,t).
    for (std::size_t j = 0; j < n_points; ++j) {
        const double y = -Y + h * static_cast<double>(j);
        const auto jy = pulse_eval<Jet>(p, Jet(y, 1.0), Jet(t));
        const auto jt = pulse_eval<Jet>(p, Jet(y), Jet(t, 1.0));
        const double u = jy.u.f;
        const double xj = jy.x.d;
        const double ux = jy.u.d / xj;
        const double uxx = (jy.u.dd * xj - jy.u.d * jy.x.dd) / (xj * xj * xj);
        const double g = jt.u.d;
        const double s = 1.0 + ux * ux;
        // all integrands carry the x-measure weight X_y
        i0[j] = u * u * xj;
        i1[j] = (std::sqrt(s) - 1.0) * xj;
        i2[j] = uxx * uxx / (s * s * std::sqrt(s)) * xj;
        im1[j] = (g * g - u * u * u * u / 12.0) * xj;
    }
    return InvariantSet{simpson_samples(im1, h), simpson_samples(i0, h), simpson_samples(i1, h),
                        simpson_samples(i2, h), Domain::line};
}

BreakingBounds pulse_sup_bounds(const PulseParams& p) {
    // (y,t) -> (phi,psi) is a bijection, so scan the (phi,psi) plane; U decays
    // like exp(-|phi|) and is 2 pi periodic in psi.
    const double m = p.m, n = p.n;
    const double P = 30.0;
    const std::size_t nphi = 3001, npsi = 1201;
    double sup_u = 0.0, sup_g = 0.0;
    for (std::size_t i = 0; i < nphi; ++i) {
        const double phi = -P + 2.0 * P * static_cast<double>(i) / static_cast<double>(nphi - 1);
        const double sh = std::sinh(phi), ch = std::cosh(phi);
        for (std::size_t j = 0; j < npsi; ++j) {
            const double psi = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(npsi - 1);
            const double s = std::sin(psi), c = std::cos(psi);
            const double den = m * m * s * s + n * n * ch * ch;
            const double num = m * s * sh + n * c * ch;
            const double u = 4.0 * m * n * num / den;
            const double num_phi = m * s * ch + n * c * sh;
            const double num_psi = m * c * sh - n * s * ch;
            const double den_phi = 2.0 * n * n * ch * sh;
            const double den_psi = 2.0 * m * m * s * c;
            const double u_phi = 4.0 * m * n * (num_phi * den - num * den_phi) / (den * den);
            const double u_psi = 4.0 * m * n * (num_psi * den - num * den_psi) / (den * den);
            const double g = u_phi * m - u_psi * n;  // dU/dt at fixed y
            sup_u = std::max(sup_u, std::abs(u));
            sup_g = std::max(sup_g, std::abs(g));
        }
    }
    return BreakingBounds{sup_g, sup_u};
}

double gaussian_profile(double a, double b, double x) {
    return a * (1.0 - 2.0 * b * x * x) * std::exp(-b * x * x);
}

double gaussian_derivative(double a, double b, double x) {
    return -2.0 * a * b * x * (3.0 - 2.0 * b * x * x) * std::exp(-b * x * x);
}

double gaussian_second_derivative(double a, double b, double x) {
    const double bx2 = b * x * x;
    return -2.0 * a * b * (3.0 - 12.0 * bx2 + 4.0 * bx2 * bx2) * std::exp(-bx2);
}

double gaussian_antiderivative(double a, double b, double x) {
    return a * x * std::exp(-b * x * x);
}

GaussianClosedInvariants gaussian_closed_invariants(double a, double b) {
    if (!(a > 0.0 && b > 0.0))
        throw InvalidArgument("gaussian_closed_invariants: need a, b > 0");
    const double e_minus1 =
        a * a * std::sqrt(M_PI) * (256.0 * std::sqrt(2.0) - 51.0 * a * a * b) /
        (2048.0 * std::sqrt(b * b * b));
    const double e0 = 3.0 * a * a * std::sqrt(2.0 * M_PI) / (8.0 * std::sqrt(b));
    return {e_minus1, e0};
}

double gaussian_half_width(double b) { return 6.5 / std::sqrt(b); }

InvariantSet gaussian_line_invariants(double a, double b, std::size_t n_points) {
    const auto closed = gaussian_closed_invariants(a, b);
    const double X = gaussian_half_width(b);
    const double e1 = simpson(
        [&](double x) {
            const double p = gaussian_derivative(a, b, x);
            return std::sqrt(1.0 + p * p) - 1.0;
        },
        -X, X, n_points);
    const double e2 = simpson(
        [&](double x) {
            const double p = gaussian_derivative(a, b, x);
            const double pp = gaussian_second_derivative(a, b, x);
            const double s = 1.0 + p * p;
            return pp * pp / (s * s * std::sqrt(s));
        },
        -X, X, n_points);
    return InvariantSet{closed.e_minus1, closed.e0, e1, e2, Domain::line};
}

SampledProfile gaussian_line_profile(double a, double b, std::size_t n) {
    const double X = gaussian_half_width(b);
    SampledProfile prof;
    prof.x.resize(n);
    prof.u.resize(n);
    prof.ux.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = -X + 2.0 * X * static_cast<double>(j) / static_cast<double>(n - 1);
        prof.x[j] = x;
        prof.u[j] = gaussian_profile(a, b, x);
        prof.ux[j] = gaussian_derivative(a, b, x);
    }
    return prof;
}

double cosine_profile(double a, double x) { return a * std::cos(2.0 * M_PI * x); }

double cosine_derivative(double a, double x) { return -2.0 * M_PI * a * std::sin(2.0 * M_PI * x); }

CosineClosedInvariants cosine_closed_invariants(double a) {
    if (!(a > 0.0)) throw InvalidArgument("cosine_closed_invariants: need a > 0");
    // Periodic trapezoid converges geometrically for this analytic integrand.
    const std::size_t n = 1 << 17;
    const double k = 2.0 * M_PI * a;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = std::sin(2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
        acc += std::sqrt(1.0 + k * k * s * s);
    }
    return {0.5 * a * a, acc / static_cast<double>(n)};
}

SampledProfile cosine_profile_sampled(double a, std::size_t n) {
    SampledProfile prof;
    prof.x.resize(n);
    prof.u.resize(n);
    prof.ux.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(n);
        prof.x[j] = x;
        prof.u[j] = cosine_profile(a, x);
        prof.ux[j] = cosine_derivative(a, x);
    }
    return prof;
}

}  // namespace spe

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "spe/bounds.hpp"
#include "spe/errors.hpp"
#include "spe/field.hpp"
#include "spe/invariants.hpp"

namespace spe {

/// Scalar with first and second derivative carried along (a second-order
/// dual number). Gives machine-precision chain-rule derivatives of the
/// closed-form solutions without finite differencing.
struct Jet {
    double f = 0.0;
    double d = 0.0;
    double dd = 0.0;

    Jet() = default;
    Jet(double value) : f(value) {}  // NOLINT: implicit widening is the point
    Jet(double value, double deriv, double second = 0.0) : f(value), d(deriv), dd(second) {}
};

inline Jet operator+(const Jet& a, const Jet& b) { return {a.f + b.f, a.d + b.d, a.dd + b.dd}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.f - b.f, a.d - b.d, a.dd - b.dd}; }
inline Jet operator-(const Jet& a) { return {-a.f, -a.d, -a.dd}; }
inline Jet operator*(const Jet& a, const Jet& b) {
    return {a.f * b.f, a.d * b.f + a.f * b.d, a.dd * b.f + 2.0 * a.d * b.d + a.f * b.dd};
}
inline Jet operator/(const Jet& a, const Jet& b) {
    const double f = a.f / b.f;
    const double d = (a.d - f * b.d) / b.f;
    const double dd = (a.dd - 2.0 * d * b.d - f * b.dd) / b.f;
    return {f, d, dd};
}
inline Jet sin(const Jet& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return {s, c * a.d, -s * a.d * a.d + c * a.dd};
}
inline Jet cos(const Jet& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return {c, -s * a.d, -c * a.d * a.d - s * a.dd};
}
inline Jet sinh(const Jet& a) {
    const double s = std::sinh(a.f), c = std::cosh(a.f);
    return {s, c * a.d, s * a.d * a.d + c * a.dd};
}
inline Jet cosh(const Jet& a) {
    const double s = std::sinh(a.f), c = std::cosh(a.f);
    return {c, s * a.d, c * a.d * a.d + s * a.dd};
}

/// Modulus of the modulated pulse; n is derived, m^2 + n^2 = 1.
/// X(., t) is invertible in y exactly when m < critical_modulus().
struct PulseParams {
    double m;
    double n;

    explicit PulseParams(double modulus);
    static double critical_modulus() { return std::sin(M_PI / 8.0); }
    bool invertible() const { return m < critical_modulus(); }
};

/// U(y,t), X(y,t) evaluated with any scalar carrying type.
template <class T>
struct PulsePoint {
    T u;
    T x;
};

template <class T>
PulsePoint<T> pulse_eval(const PulseParams& p, const T& y, const T& t) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    const double m = p.m, n = p.n;
    const T phi = (y + t) * m;
    const T psi = (y - t) * n;
    const T s = sin(psi), c = cos(psi);
    const T sh = sinh(phi), ch = cosh(phi);
    const T den = s * s * (m * m) + ch * ch * (n * n);
    const T u = (s * sh * m + c * ch * n) * (4.0 * m * n) / den;
    const T x = y + (sin(psi * 2.0) * m - sinh(phi * 2.0) * n) * (2.0 * m * n) / den;
    return {u, x};
}

/// Plain evaluation of the parametric pulse.
PulsePoint<double> pulse_parametric(const PulseParams& p, double y, double t);

/// dX/dy in its rational form and in the cos(4 arctan ...) form. The two
/// agree to round-off; both are kept for cross-validation.
double pulse_x_jacobian(const PulseParams& p, double y, double t);
double pulse_x_jacobian_cosform(const PulseParams& p, double y, double t);

/// Solve X(y,t) = x for each requested x (bracketed Newton; X is monotone
/// for m < critical_modulus) and return U there.
std::vector<double> pulse_sample(const PulseParams& p, double t, std::span<const double> xs);

/// u, u_x at the requested x's via the chain rule with exact partials.
SampledProfile pulse_profile(const PulseParams& p, double t, std::span<const double> xs);

/// Sampling half-width such that |U| < tol at |y| = Y for the given t.
double pulse_sampling_half_width(const PulseParams& p, double t, double tol = 1e-10);

/// Line invariants of the pulse at time t by quadrature in y with exact
/// chain-rule derivatives.
InvariantSet pulse_line_invariants(const PulseParams& p, double t = 0.0,
                                   std::size_t n_points = 400001);

/// Supremum-based bounds sup_{y,t}|U| and sup_{y,t}|dU/dt|, scanned over
/// the (phi, psi) plane, on which both are genuinely two-variable functions.
BreakingBounds pulse_sup_bounds(const PulseParams& p);

// ---- decaying two-hump family u0(x) = a (1 - 2 b x^2) exp(-b x^2) ----

double gaussian_profile(double a, double b, double x);
double gaussian_derivative(double a, double b, double x);
double gaussian_second_derivative(double a, double b, double x);
/// The decaying antiderivative a x exp(-b x^2).
double gaussian_antiderivative(double a, double b, double x);

struct GaussianClosedInvariants {
    double e_minus1;
    double e0;
};
/// E-1 and E0 in closed form.
GaussianClosedInvariants gaussian_closed_invariants(double a, double b);

/// Full line invariants: closed forms for E-1 and E0, Simpson quadrature
/// with analytic derivatives for E1 and E2.
InvariantSet gaussian_line_invariants(double a, double b, std::size_t n_points = 200001);

double gaussian_half_width(double b);
SampledProfile gaussian_line_profile(double a, double b, std::size_t n = 20001);

// ---- harmonic family u0(x) = a cos(2 pi x) on the unit circle ----

double cosine_profile(double a, double x);
double cosine_derivative(double a, double x);

struct CosineClosedInvariants {
    double e0;
    double e1;
};
/// E0 = a^2/2 exactly; E1 by high-resolution quadrature (the AGM elliptic
/// evaluation is the cross-check, see tests).
CosineClosedInvariants cosine_closed_invariants(double a);

SampledProfile cosine_profile_sampled(double a, std::size_t n = 20001);

}  // namespace spe

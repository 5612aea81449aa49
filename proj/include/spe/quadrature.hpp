#pragma once

#include <functional>
#include <span>

#include "spe/field.hpp"

namespace spe {

/// Trapezoid rule on the periodic grid (spectrally accurate for smooth
/// periodic integrands): mean(samples) * L.
double quadrature(const PeriodicField& f);

/// Composite Simpson on the line grid.
double quadrature(const LineField& f);

/// Composite Simpson of f over [a, b] with n subintervals (n made even).
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n);

/// Composite Simpson over equispaced samples with spacing h.
double simpson_samples(std::span<const double> y, double h);

/// Cumulative integral from -X_max via composite trapezoid. Requires the
/// total mass to vanish within tolerance so the result decays at +X_max.
LineField antiderivative_line(const LineField& f, double mass_rel_tol = 1e-8);

/// Maximize unimodal f on [a, b] by golden-section search; returns argmax.
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double xtol = 1e-10);

/// Bisection for f(x) = 0 given f(a) and f(b) of opposite sign.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double xtol = 1e-12);

/// Peak estimate from a parabola through three equispaced samples
/// (ym, y0, yp) centered on the middle one; falls back to y0 when flat.
double parabolic_peak_value(double ym, double y0, double yp);

}  // namespace spe

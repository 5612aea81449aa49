#include "spe/quadrature.hpp"

#include <cmath>
#include <numeric>

#include "spe/errors.hpp"

namespace spe {

double quadrature(const PeriodicField& f) { return f.mean() * f.length(); }

double simpson_samples(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    // Even sample count: Simpson on the first n-4 intervals, 3/8 rule on the
    // last three.
    if (n % 2 == 0) {
        double head = 0.0;
        const std::size_t m = n - 3;  // samples 0..m-1 span an even interval count
        for (std::size_t j = 0; j + 2 < m; j += 2)
            head += y[j] + 4.0 * y[j + 1] + y[j + 2];
        head *= h / 3.0;
        const double tail = 3.0 * h / 8.0 *
                            (y[n - 4] + 3.0 * y[n - 3] + 3.0 * y[n - 2] + y[n - 1]);
        return head + tail;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j + 2 < n; j += 2) acc += y[j] + 4.0 * y[j + 1] + y[j + 2];
    return acc * h / 3.0;
}

double quadrature(const LineField& f) { return simpson_samples(f.samples(), f.dx()); }

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double acc = f(a) + f(b);
    for (std::size_t j = 1; j < n; ++j)
        acc += (j % 2 == 0 ? 2.0 : 4.0) * f(a + h * static_cast<double>(j));
    return acc * h / 3.0;
}

LineField antiderivative_line(const LineField& f, double mass_rel_tol) {
    const std::size_t n = f.size();
    const double h = f.dx();
    double abs_mass = 0.0;
    for (double v : f.samples()) abs_mass += std::abs(v) * h;
    const double mass = quadrature(f);
    if (std::abs(mass) > mass_rel_tol * std::max(1.0, abs_mass))
        throw ZeroMassViolation("antiderivative_line: total mass does not vanish");

    std::vector<double> g(n, 0.0);
    for (std::size_t j = 1; j < n; ++j)
        g[j] = g[j - 1] + 0.5 * h * (f[j - 1] + f[j]);
    // The cumulative sum inherits the trapezoid-vs-Simpson mass discrepancy
    // at the right end; it is bounded by the decay tolerance for valid input.
    return LineField(f.half_width(), std::move(g),
                     std::max(f.decay_tol(), std::abs(g.back()) * 2.0 + 1e-300));
}

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

double bisect_root(const std::function<double(double)>& f, double a, double b, double xtol) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw NoCrossing("bisect_root: same sign at both endpoints");
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double parabolic_peak_value(double ym, double y0, double yp) {
    const double den = ym - 2.0 * y0 + yp;
    if (den >= 0.0) return y0;
    const double delta = 0.5 * (ym - yp) / den;
    return y0 - 0.25 * (ym - yp) * delta;
}

}  // namespace spe

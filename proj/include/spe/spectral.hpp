#pragma once

#include <complex>
#include <span>
#include <vector>

#include "spe/field.hpp"

namespace spe {

namespace fft {

/// Real-to-complex DFT, unnormalized, n/2+1 output bins. Thread-safe.
std::vector<std::complex<double>> rfft(std::span<const double> x);

/// Inverse of rfft, normalized by 1/n.
std::vector<double> irfft(std::span<const std::complex<double>> c, std::size_t n);

}  // namespace fft

/// order-th derivative via Fourier multipliers (i 2 pi k / L)^order.
/// The Nyquist mode of odd derivatives is zeroed.
PeriodicField spectral_derivative(const PeriodicField& f, int order);

/// The unique mean-zero antiderivative: multipliers 1/(i 2 pi k / L), zero
/// mode set to 0. Requires f mean-zero within tolerance.
PeriodicField antiderivative_periodic(const PeriodicField& f, double mass_tol = 1e-10);

/// Trigonometric interpolation at arbitrary x, with periodic wrap-around.
/// Agrees with the stored samples at grid nodes up to round-off.
double interpolate(const PeriodicField& f, double x);

/// Same interpolation with the Fourier coefficients computed once.
class TrigInterpolant {
  public:
    explicit TrigInterpolant(const PeriodicField& f);
    double operator()(double x) const;

  private:
    double length_;
    std::size_t n_;
    std::vector<std::complex<double>> coef_;
};

/// Zero all modes with |k| > n/3 (2/3 dealiasing rule), in place.
void dealias_two_thirds(std::vector<std::complex<double>>& c, std::size_t n);

}  // namespace spe

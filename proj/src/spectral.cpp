#include "spe/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "spe/errors.hpp"

namespace spe {

namespace fft {
namespace {

// Plans are cached per transform size. Plan creation is not thread-safe in
// FFTW, execution with the new-array interface is; FFTW_UNALIGNED lets the
// plans run on arbitrary heap buffers.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

PlanPair& plans_for(std::size_t n) {
    static std::map<std::size_t, PlanPair> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> re(n);
    std::vector<std::complex<double>> cx(n / 2 + 1);
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_1d(static_cast<int>(n), re.data(),
                                 reinterpret_cast<fftw_complex*>(cx.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inv = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                 reinterpret_cast<fftw_complex*>(cx.data()), re.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
    const std::size_t n = x.size();
    PlanPair& p = plans_for(n);
    std::vector<double> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_execute_dft_r2c(p.fwd, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<double> irfft(std::span<const std::complex<double>> c, std::size_t n) {
    PlanPair& p = plans_for(n);
    // c2r destroys its input; work on a copy.
    std::vector<std::complex<double>> in(c.begin(), c.end());
    std::vector<double> out(n);
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= inv_n;
    return out;
}

}  // namespace fft

PeriodicField spectral_derivative(const PeriodicField& f, int order) {
    if (order <= 0) throw InvalidArgument("spectral_derivative: order must be positive");
    const std::size_t n = f.size();
    auto c = fft::rfft(f.samples());
    const double base = 2.0 * M_PI / f.length();
    for (std::size_t k = 0; k < c.size(); ++k) {
        std::complex<double> mult = std::pow(std::complex<double>(0.0, base * static_cast<double>(k)),
                                             order);
        c[k] *= mult;
    }
    if (order % 2 != 0) c[n / 2] = 0.0;
    return PeriodicField(f.length(), fft::irfft(c, n));
}

PeriodicField antiderivative_periodic(const PeriodicField& f, double mass_tol) {
    if (!f.is_mean_zero(mass_tol))
        throw ZeroMassViolation("antiderivative_periodic: field has nonzero mean");
    const std::size_t n = f.size();
    auto c = fft::rfft(f.samples());
    const double base = 2.0 * M_PI / f.length();
    c[0] = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k)
        c[k] /= std::complex<double>(0.0, base * static_cast<double>(k));
    c[n / 2] = 0.0;
    return PeriodicField(f.length(), fft::irfft(c, n));
}

TrigInterpolant::TrigInterpolant(const PeriodicField& f)
    : length_(f.length()), n_(f.size()), coef_(fft::rfft(f.samples())) {}

double TrigInterpolant::operator()(double x) const {
    double xr = std::fmod(x, length_);
    if (xr < 0.0) xr += length_;
    const double base = 2.0 * M_PI / length_;
    double acc = coef_[0].real();
    for (std::size_t k = 1; k < n_ / 2; ++k) {
        const double th = base * static_cast<double>(k) * xr;
        acc += 2.0 * (coef_[k].real() * std::cos(th) - coef_[k].imag() * std::sin(th));
    }
    acc += coef_[n_ / 2].real() * std::cos(base * static_cast<double>(n_ / 2) * xr);
    return acc / static_cast<double>(n_);
}

double interpolate(const PeriodicField& f, double x) { return TrigInterpolant(f)(x); }

void dealias_two_thirds(std::vector<std::complex<double>>& c, std::size_t n) {
    const std::size_t cut = n / 3;
    for (std::size_t k = cut + 1; k < c.size(); ++k) c[k] = 0.0;
}

}  // namespace spe

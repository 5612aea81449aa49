#include "spe/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spe/errors.hpp"

namespace spe {

PeriodicField::PeriodicField(double length, std::vector<double> samples)
    : length_(length), samples_(std::move(samples)) {
    if (!(length > 0.0)) throw InvalidArgument("PeriodicField: length must be positive");
    const std::size_t n = samples_.size();
    if (n < 8 || n % 2 != 0)
        throw InvalidArgument("PeriodicField: need n >= 8 and n even");
}

PeriodicField PeriodicField::zeros(double length, std::size_t n) {
    return PeriodicField(length, std::vector<double>(n, 0.0));
}

PeriodicField PeriodicField::sample(double length, std::size_t n,
                                    const std::function<double(double)>& f) {
    std::vector<double> s(n);
    const double h = length / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = f(h * static_cast<double>(j));
    return PeriodicField(length, std::move(s));
}

double PeriodicField::mean() const {
    double acc = std::accumulate(samples_.begin(), samples_.end(), 0.0);
    return acc / static_cast<double>(samples_.size());
}

double PeriodicField::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

bool PeriodicField::is_mean_zero(double tol) const {
    return std::abs(mean()) <= tol * std::max(1.0, max_abs());
}

PeriodicField& PeriodicField::project_mean_zero() {
    const double m = mean();
    for (double& v : samples_) v -= m;
    return *this;
}

LineField::LineField(double half_width, std::vector<double> samples, double decay_tol)
    : half_width_(half_width), decay_tol_(decay_tol), samples_(std::move(samples)) {
    if (!(half_width > 0.0)) throw InvalidArgument("LineField: half_width must be positive");
    if (samples_.size() < 3) throw InvalidArgument("LineField: need at least 3 samples");
    if (std::abs(samples_.front()) > decay_tol_ || std::abs(samples_.back()) > decay_tol_)
        throw InvalidArgument("LineField: boundary samples exceed decay tolerance");
}

LineField LineField::sample(double half_width, std::size_t n,
                            const std::function<double(double)>& f, double decay_tol) {
    std::vector<double> s(n);
    const double h = 2.0 * half_width / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) s[j] = f(-half_width + h * static_cast<double>(j));
    return LineField(half_width, std::move(s), decay_tol);
}

double LineField::max_abs() const {
    double m = 0.0;
    for (double v : samples_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace spe

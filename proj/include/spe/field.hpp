#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace spe {

/// Uniformly sampled real function on a circle of length L.
/// Samples live at nodes x_j = j L / n, j = 0..n-1.
class PeriodicField {
  public:
    PeriodicField(double length, std::vector<double> samples);

    static PeriodicField zeros(double length, std::size_t n);
    static PeriodicField sample(double length, std::size_t n,
                                const std::function<double(double)>& f);

    double length() const { return length_; }
    std::size_t size() const { return samples_.size(); }
    double dx() const { return length_ / static_cast<double>(samples_.size()); }
    double node(std::size_t j) const { return dx() * static_cast<double>(j); }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }
    double operator[](std::size_t j) const { return samples_[j]; }

    double mean() const;
    double max_abs() const;

    /// |mean| <= tol * max(1, max|samples|)
    bool is_mean_zero(double tol = 1e-12) const;
    /// Subtract the mean in place.
    PeriodicField& project_mean_zero();

  private:
    double length_;
    std::vector<double> samples_;
};

/// A profile and its slope at common nodes, the input to the pointwise
/// breaking diagnostics.
struct SampledProfile {
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> ux;
};

/// Real function on a truncated line [-X_max, X_max], sampled at n uniform
/// nodes including both endpoints. Boundary samples must sit below decay_tol
/// for the truncation to be meaningful.
class LineField {
  public:
    LineField(double half_width, std::vector<double> samples, double decay_tol = 1e-8);

    static LineField sample(double half_width, std::size_t n,
                            const std::function<double(double)>& f,
                            double decay_tol = 1e-8);

    double half_width() const { return half_width_; }
    double decay_tol() const { return decay_tol_; }
    std::size_t size() const { return samples_.size(); }
    double dx() const { return 2.0 * half_width_ / static_cast<double>(samples_.size() - 1); }
    double node(std::size_t j) const { return -half_width_ + dx() * static_cast<double>(j); }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }
    double operator[](std::size_t j) const { return samples_[j]; }

    double max_abs() const;

  private:
    double half_width_;
    double decay_tol_;
    std::vector<double> samples_;
};

}  // namespace spe

#include "spe/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spe/errors.hpp"
#include "spe/quadrature.hpp"

namespace spe {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Quadratic Lagrange interpolation through the three nodes nearest to x.
double lagrange3(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t j,
                 double x) {
    const double x0 = xs[j - 1], x1 = xs[j], x2 = xs[j + 1];
    const double y0 = ys[j - 1], y1 = ys[j], y2 = ys[j + 1];
    return y0 * (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2)) +
           y1 * (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2)) +
           y2 * (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
}

}  // namespace

BreakingBounds breaking_bounds_line(const InvariantSet& inv) {
    if (inv.domain != Domain::line)
        throw InvalidArgument("breaking_bounds_line: invariants must be line-type");
    const double e0 = inv.e0, e1 = inv.e1;
    const double f1 = std::sqrt((e1 * e1 + std::sqrt(8.0 * e0 * e1 + e1 * e1 * e1 * e1)) / 2.0);
    const double rad = e0 + inv.e_minus1 + e0 * f1 * f1 / 12.0;
    if (rad < 0.0)
        throw CriterionInapplicable("breaking_bounds_line: negative radicand in F0");
    return BreakingBounds{std::sqrt(rad / 2.0), f1};
}

BreakingBounds breaking_bounds_periodic(const InvariantSet& inv) {
    if (inv.domain != Domain::circle)
        throw InvalidArgument("breaking_bounds_periodic: invariants must be circle-type");
    return BreakingBounds{std::sqrt(inv.e0), inv.e1};
}

CriterionReport evaluate_breaking_criterion(const SampledProfile& u0,
                                            const BreakingBounds& bounds) {
    const std::size_t n = u0.x.size();
    if (n < 3 || u0.u.size() != n || u0.ux.size() != n)
        throw InvalidArgument("evaluate_breaking_criterion: malformed profile");

    bool all_zero = true;
    for (std::size_t j = 0; j < n && all_zero; ++j)
        if (u0.u[j] != 0.0 || u0.ux[j] != 0.0) all_zero = false;
    if (all_zero) throw DegenerateProfile("evaluate_breaking_criterion: zero profile");

    CriterionReport rep{kNegInf, kNegInf, true, true, false,
                        std::numeric_limits<double>::quiet_NaN()};
    if (!(bounds.f0 > 0.0) || !(bounds.f1 > 0.0)) return rep;  // criterion presupposes nonzero data

    const double f0 = bounds.f0, f1 = bounds.f1;
    const double slope_thr = std::cbrt(f1 * f1 / (4.0 * f0));

    // Branch values at a point; -inf outside the owning set.
    auto branch1 = [&](double u, double ux) {
        if (!(u * ux > 0.0) || std::abs(ux) > slope_thr) return kNegInf;
        return std::abs(u) * ux * ux - f1;
    };
    auto branch2 = [&](double u, double ux) {
        if (!(u * ux > 0.0) || std::abs(ux) <= slope_thr) return kNegInf;
        const double rad = 2.0 * f0 * std::abs(ux) * std::abs(ux) * std::abs(ux) - 0.5 * f1 * f1;
        return std::abs(u) * ux * ux - f1 - std::sqrt(std::max(rad, 0.0));
    };

    std::size_t best1 = 0, best2 = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double v1 = branch1(u0.u[j], u0.ux[j]);
        const double v2 = branch2(u0.u[j], u0.ux[j]);
        if (v1 > rep.f1_score) {
            rep.f1_score = v1;
            best1 = j;
            rep.i1_empty = false;
        } else if (v1 > kNegInf) {
            rep.i1_empty = false;
        }
        if (v2 > rep.f2_score) {
            rep.f2_score = v2;
            best2 = j;
            rep.i2_empty = false;
        } else if (v2 > kNegInf) {
            rep.i2_empty = false;
        }
    }

    // Golden-section refinement between the neighbours of the best node.
    auto refine = [&](std::size_t j, const auto& branch, double& score, double& arg) {
        arg = u0.x[j];
        if (j == 0 || j + 1 >= n) return;
        auto obj = [&](double x) {
            return branch(lagrange3(u0.x, u0.u, j, x), lagrange3(u0.x, u0.ux, j, x));
        };
        const double xr = golden_section_max(obj, u0.x[j - 1], u0.x[j + 1], 1e-12);
        const double vr = obj(xr);
        if (vr > score) {
            score = vr;
            arg = xr;
        }
    };

    double arg1 = std::numeric_limits<double>::quiet_NaN();
    double arg2 = std::numeric_limits<double>::quiet_NaN();
    if (!rep.i1_empty) refine(best1, branch1, rep.f1_score, arg1);
    if (!rep.i2_empty) refine(best2, branch2, rep.f2_score, arg2);

    rep.breaking_predicted = rep.f1_score > 0.0 || rep.f2_score > 0.0;
    rep.argmax_x = rep.f1_score >= rep.f2_score ? arg1 : arg2;
    return rep;
}

double wellposedness_margin(const InvariantSet& inv) {
    if (inv.domain != Domain::line)
        throw InvalidArgument("wellposedness_margin: invariants must be line-type");
    return 2.0 * std::sqrt(2.0 * inv.e1 * inv.e2);
}

double threshold_scan(const std::function<bool(double)>& breaking_at, double lo, double hi,
                      double tol) {
    if (!(lo < hi) || !(tol > 0.0)) throw InvalidArgument("threshold_scan: bad interval");
    const bool at_lo = breaking_at(lo);
    const bool at_hi = breaking_at(hi);
    if (at_lo == at_hi)
        throw NoCrossing("threshold_scan: verdict does not change across the interval");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (breaking_at(mid) == at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace spe

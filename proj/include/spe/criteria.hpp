#pragma once

#include <functional>

#include "spe/bounds.hpp"
#include "spe/field.hpp"
#include "spe/invariants.hpp"

namespace spe {

/// Pointwise breaking diagnostics: f1/f2 are suprema of the two criterion
/// branches over the candidate sets I1 (shallow slopes) and I2 (steep
/// slopes); scores are -inf when the corresponding set is empty.
struct CriterionReport {
    double f1_score;
    double f2_score;
    bool i1_empty;
    bool i2_empty;
    bool breaking_predicted;
    double argmax_x;
};

/// Line bounds from the conserved quantities:
///   F1 = sqrt((E1^2 + sqrt(8 E0 E1 + E1^4)) / 2)
///   F0 = sqrt((E0 + E-1 + E0 F1^2 / 12) / 2)
/// Throws CriterionInapplicable when the F0 radicand is negative (E-1 may
/// be negative).
BreakingBounds breaking_bounds_line(const InvariantSet& inv);

/// Circle bounds: F0 = sqrt(E0), F1 = E1 (circle convention, no "-1").
BreakingBounds breaking_bounds_periodic(const InvariantSet& inv);

/// Partition the points with u0 u0' > 0 by slope against (F1^2/4F0)^(1/3),
/// compute the two branch suprema (node scan plus golden-section refinement
/// around the best node), and report whether breaking is predicted.
CriterionReport evaluate_breaking_criterion(const SampledProfile& u0, const BreakingBounds& bounds);

/// 2 sqrt(2 E1 E2); a value < 1 certifies global well-posedness.
double wellposedness_margin(const InvariantSet& inv);

/// Bisect a monotone breaking verdict over [lo, hi] down to width tol.
/// Throws NoCrossing when both endpoints agree.
double threshold_scan(const std::function<bool(double)>& breaking_at, double lo, double hi,
                      double tol);

}  // namespace spe

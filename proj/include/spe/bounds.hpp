#pragma once

namespace spe {

/// A-priori sup-norm bounds: f1 bounds sup|u|, f0 bounds sup|d_x^-1 u|.
/// They parameterize every breaking criterion and comparison system.
struct BreakingBounds {
    double f0 = 0.0;
    double f1 = 0.0;
};

}  // namespace spe

#pragma once

#include "spe/field.hpp"

namespace spe {

enum class Domain { line, circle };

/// The four conserved quantities of the flow.
///
/// e0 = int u^2, e2 = int u_xx^2 / (1+u_x^2)^(5/2),
/// e_minus1 = int [ (d_x^-1 u)^2 - u^4/12 ].
/// e1 is domain-keyed: int (sqrt(1+u_x^2) - 1) on the line,
/// int sqrt(1+u_x^2) on the circle.
struct InvariantSet {
    double e_minus1 = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    Domain domain = Domain::line;
};

/// Circle invariants with spectral derivatives and the mean-zero
/// antiderivative. Requires f mean-zero.
InvariantSet compute_invariants(const PeriodicField& f);

/// Line invariants with 4th-order central differences (samples beyond the
/// boundary are taken as zero, valid under the decay assumption) and
/// cumulative integration from -X_max for the antiderivative.
InvariantSet compute_invariants(const LineField& f);

/// x -> alpha x, u -> alpha u: grid length and samples both scale by alpha.
PeriodicField scaling_transform(const PeriodicField& f, double alpha);
LineField scaling_transform(const LineField& f, double alpha);

}  // namespace spe

#pragma once

namespace spe {

/// Complete elliptic integrals of the first and second kind with modulus
/// k in [0, 1), evaluated by arithmetic-geometric-mean iteration.
double elliptic_K(double k);
double elliptic_E(double k);

/// int_0^{pi/2} sqrt(1 + k^2 sin^2 t) dt, the second-kind integral with
/// imaginary modulus ik, via E(ik) = sqrt(1+k^2) E(k / sqrt(1+k^2)).
double elliptic_E_imag(double k);

}  // namespace spe

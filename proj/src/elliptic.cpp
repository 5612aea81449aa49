#include "spe/elliptic.hpp"

#include <cmath>

#include "spe/errors.hpp"

namespace spe {

namespace {

struct AgmResult {
    double agm;
    double c_sum;  // sum over iterations of 2^(j-1) c_j^2, including j = 0
};

AgmResult agm_with_csum(double k) {
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double c = k;
    double csum = 0.5 * c * c;
    double pow2 = 1.0;
    while (std::abs(c) > 1e-17 * a) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0;
        csum += 0.5 * pow2 * c * c;
    }
    return {a, csum};
}

}  // namespace

double elliptic_K(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("elliptic_K: need 0 <= k < 1");
    return M_PI / (2.0 * agm_with_csum(k).agm);
}

double elliptic_E(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("elliptic_E: need 0 <= k < 1");
    const AgmResult r = agm_with_csum(k);
    return M_PI / (2.0 * r.agm) * (1.0 - r.c_sum);
}

double elliptic_E_imag(double k) {
    if (!(k >= 0.0)) throw InvalidArgument("elliptic_E_imag: need k >= 0");
    const double s = std::sqrt(1.0 + k * k);
    return s * elliptic_E(k / s);
}

}  // namespace spe

#include "qno/oscillator.hpp"

#include <cassert>
#include <cmath>

namespace qno {

double osc_energy(int j, const SystemParams& p) {
    assert(j >= 0);
    return p.omega * j + 1.5 * p.alpha * j * (j + 1.0);
}

OscStateCoeffs osc_state_coeffs(int j, const SystemParams& p) {
    assert(j >= 0);
    OscStateCoeffs c;
    c.j = j;
    const double x = p.alpha / p.omega;
    const double dj = j;
    if (j >= 4)
        c.a_m4 = std::sqrt((dj - 3.0) * (dj - 2.0) * (dj - 1.0) * dj) * x / 16.0;
    if (j >= 2)
        c.a_m2 = (dj - 0.5) * std::sqrt((dj - 1.0) * dj) * x / 2.0;
    c.a_p2 = -(dj + 1.5) * std::sqrt((dj + 1.0) * (dj + 2.0)) * x / 2.0;
    c.a_p4 = -std::sqrt((dj + 1.0) * (dj + 2.0) * (dj + 3.0) * (dj + 4.0)) * x / 16.0;
    return c;
}

double perturbation_error(int j, int order, const SystemParams& p) {
    if (j < 1)
        throw Error(errc::ground_level_undefined,
                    "perturbation_error is undefined at j = 0 (zero unperturbed energy)");
    assert(order == 1 || order == 2);
    const double e0 = p.omega * j;
    if (order == 1)
        return 1.5 * p.alpha * j * (j + 1.0) / e0;
    const double dj = j;
    const double e2 = p.alpha * p.alpha *
                      (-34.0 * dj * dj * dj - 51.0 * dj * dj - 59.0 * dj - 21.0) /
                      (8.0 * p.omega);
    return std::abs(e2) / e0;
}

double ladder_n1(int j, const SystemParams& p) {
    assert(j >= 0);
    return std::sqrt(j + 1.0) * (1.0 - 1.5 * (p.alpha / p.omega) * (j + 1.0));
}

double ladder_n3(int j, const SystemParams& p) {
    if (j < 3)
        return 0.0;
    const double dj = j;
    return (p.alpha / (4.0 * p.omega)) * std::sqrt(dj * (dj - 1.0) * (dj - 2.0));
}

double ladder_element(int l, int m, const SystemParams& p) {
    assert(l >= 0 && m >= 0);
    const int lo = std::min(l, m);
    const int hi = std::max(l, m);
    switch (hi - lo) {
    case 1:
        return ladder_n1(lo, p);
    case 3:
        return ladder_n3(hi, p);
    default:
        // |l-m| = 5 cancels identically at first order; even gaps vanish by
        // parity.
        return 0.0;
    }
}

std::vector<double> thermal_weights(const SystemParams& p, int j_max) {
    assert(j_max >= 0);
    std::vector<double> w(j_max + 1);
    double z = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        w[j] = std::exp(-p.beta * osc_energy(j, p));
        z += w[j];
    }
    for (double& x : w)
        x /= z;
    return w;
}

} // namespace qno

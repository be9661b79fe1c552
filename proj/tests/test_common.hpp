// test_common.hpp — shared fixtures for the unit suites

#pragma once

#include "qno/params.hpp"

namespace qt {

// Unbiased qubit at the linear resonance: Omega = delta_b = delta0 = 1,
// g = 0.18, alpha = 0.02 (the workhorse parameter set of the reference
// curves).
inline qno::SystemParams resonant_nonlinear() {
    qno::SystemParams p;
    p.epsilon = 0.0;
    p.delta0 = 1.0;
    p.omega = 1.0;
    p.alpha = 0.02;
    p.g = 0.18;
    p.kappa = 0.0154;
    p.beta = 10.0;
    return qno::validate_params(p);
}

// Same point with the damping switched off.
inline qno::SystemParams resonant_nonlinear_closed() {
    qno::SystemParams p = resonant_nonlinear();
    p.kappa = 0.0;
    return qno::validate_params(p);
}

// Biased qubit of the relaxation-rate scan: epsilon = 0.5, delta_b = 1.118.
inline qno::SystemParams biased() {
    qno::SystemParams p;
    p.epsilon = 0.5;
    p.delta0 = 1.0;
    p.omega = 1.0;
    p.alpha = 0.02;
    p.g = 0.18;
    p.kappa = 0.0154;
    p.beta = 10.0;
    return qno::validate_params(p);
}

// Elevated temperature variant (beta = 3).
inline qno::SystemParams warm() {
    qno::SystemParams p = resonant_nonlinear();
    p.beta = 3.0;
    return qno::validate_params(p);
}

} // namespace qt

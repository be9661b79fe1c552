// params.hpp — Physical parameters of the qubit + nonlinear-oscillator + bath model
//
// Conventions: hbar = k_B = 1 throughout; every frequency-like quantity is
// expressed in one common base unit chosen by the caller (the CLI records
// which symbol that unit corresponds to).

#pragma once

#include <string>
#include <vector>

#include "qno/errors.hpp"

namespace qno {

struct SystemParams {
    double epsilon = 0.0;  // qubit bias
    double delta0 = 1.0;   // qubit tunneling amplitude
    double omega = 1.0;    // linear oscillator frequency
    double alpha = 0.0;    // quartic nonlinearity (hard: alpha >= 0)
    double g = 0.0;        // qubit-oscillator coupling
    double kappa = 0.0;    // dimensionless Ohmic damping
    double beta = 10.0;    // inverse temperature

    // Derived by validate(); zero-initialized until then.
    double delta_b = 0.0;  // qubit splitting sqrt(epsilon^2 + delta0^2)
    double theta = 0.0;    // mixing angle, tan(theta) = -delta0/epsilon, [-pi/2, pi/2)

    bool validated = false;
};

// Checks invariants, fills the derived fields, and collects soft warnings
// (perturbative-regime checks that degrade accuracy without invalidating the
// run). Throws qno::Error on hard violations.
SystemParams validate_params(const SystemParams& raw,
                             std::vector<std::string>* warnings = nullptr);

// Throws errc::resonant_denominator if delta_b is within tol*omega of
// 2*omega or 3*omega, where several closed-form coefficients have poles.
void require_off_resonant_denominators(const SystemParams& p, double tol = 1e-9);

} // namespace qno

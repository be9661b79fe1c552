// oscillator.hpp — First-order perturbation theory for the isolated quartic oscillator
//
// The oscillator Hamiltonian is Omega*B^dag*B + (alpha/4)(B + B^dag)^4 with a
// hard nonlinearity, treated to first order in alpha.  Levels are labelled j.

#pragma once

#include <vector>

#include "qno/params.hpp"

namespace qno {

// First-order admixture amplitudes of |j-4>, |j-2>, |j+2>, |j+4> in the
// perturbed state |j>.  Coefficients whose target level would be negative
// are identically zero.
struct OscStateCoeffs {
    int j = 0;
    double a_m4 = 0.0;
    double a_m2 = 0.0;
    double a_p2 = 0.0;
    double a_p4 = 0.0;
};

// E_j = Omega*j + (3/2)*alpha*j*(j+1)
double osc_energy(int j, const SystemParams& p);

OscStateCoeffs osc_state_coeffs(int j, const SystemParams& p);

// Relative truncation-error estimator |E_j^(order)| / E_j^(0), order 1 or 2.
// Undefined at j = 0 where E_j^(0) vanishes (throws ground_level_undefined).
double perturbation_error(int j, int order, const SystemParams& p);

// <l|(B + B^dag)|m> in the perturbed-oscillator basis, to first order in
// alpha.  Nonzero only for |l-m| = 1 or 3; the |l-m| = 5 amplitudes cancel
// identically and even |l-m| vanish by parity.
double ladder_element(int l, int m, const SystemParams& p);

// n1(j) = sqrt(j+1)[1 - (3 alpha / 2 Omega)(j+1)]: the |l-m| = 1 amplitude.
double ladder_n1(int j, const SystemParams& p);

// n3(j) = (alpha / 4 Omega) sqrt(j(j-1)(j-2)): the |l-m| = 3 amplitude,
// evaluated at the higher of the two levels.
double ladder_n3(int j, const SystemParams& p);

// Boltzmann weights exp(-beta*E_j)/Z with Z summed over j = 0..j_max.
std::vector<double> thermal_weights(const SystemParams& p, int j_max);

} // namespace qno

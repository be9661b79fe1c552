// observables.hpp — Position matrix, initial state, and population-difference weights

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qno/params.hpp"
#include "qno/vanvleck.hpp"

namespace qno {

// Scalar amplitudes entering the dressed position operator
// y~ = exp(iS) (B+B^dag) exp(-iS).  "lo" terms survive at alpha = 0; every
// "no" term is first order in alpha.  Level-dependent ones are methods.
struct LCoefficients {
    double lo0 = 0.0;      // with-in-state shift, odd in the bias
    double lo1 = 0.0;      // g^2 correction to the Delta j = 1 amplitude
    double lo0p = 0.0;     // qubit flip, Delta j = 0
    double lo1p = 0.0;     // qubit flip g->e, Delta j = 1
    double lo1m = 0.0;     // qubit flip e->g, Delta j = 1
    double no = 0.0;       // -3*alpha/(2*omega), g-independent
    double no0p = 0.0;
    double no2 = 0.0;
    double no2p = 0.0;
    double no2m = 0.0;
    double no1p = 0.0;
    double no1m = 0.0;
    double no3 = 0.0;
    double no3p = 0.0;
    double no3m = 0.0;
    // level-dependent families
    double no0(int j) const { return no0_a + no0_b * (2 * j + 1); }
    double no1g(int j) const { return no1g_a + no1g_b * j; }
    double no1e(int j) const { return no1e_a + no1e_b * j; }

    double no0_a = 0.0, no0_b = 0.0;
    double no1g_a = 0.0, no1g_b = 0.0;
    double no1e_a = 0.0, no1e_b = 0.0;
};

// Throws errc::resonant_denominator near delta_b = 2*omega or 3*omega.
LCoefficients l_coefficients(const SystemParams& p);

// y_nm = <n|(B+B^dag)|m> over the doublet-labelled eigenbasis, dimension
// 2*j_max+1 (ground + doublets 0..j_max-1... dimension is n_states of the
// spectrum restricted to `dim`).  Entries beyond the closed-form bandwidth
// (|n-m| > 9) are zero; the matrix is exactly symmetric.
Eigen::MatrixXd position_matrix(const SystemParams& p, int j_max);

// Same matrix restricted to the leading dim x dim block.
Eigen::MatrixXd position_matrix(const SystemParams& p, int j_max, int dim);

using ComplexMatrix = Eigen::MatrixXcd;

// rho(0) for the qubit prepared in |R> and the oscillator Boltzmann
// distributed, truncated at oscillator level j_cut and renormalized to unit
// trace over the retained `dim` eigenstates.
ComplexMatrix initial_density(const SystemParams& p, const EnergySpectrum& spec,
                              int dim, int j_cut);

// Weights mapping density-matrix entries to the population difference:
// P(t) = sum_n diag[n] rho_nn(t) + sum_{n>m} offdiag(n,m) Re rho_nm(t).
struct WeightTable {
    Eigen::VectorXd diag;      // w_nn
    Eigen::MatrixXd offdiag;   // w_nm, used for n > m (stored symmetric)
    double p0 = 0.0;           // sum_n w_nn rho_nn(0) for the default initial state

    double population_difference(const ComplexMatrix& rho) const;
};

WeightTable weight_table(const SystemParams& p, const EnergySpectrum& spec, int dim);

// Long-time population difference under a Boltzmann distribution over the
// retained `dim` eigenstates.
double p_infinity(const SystemParams& p, const EnergySpectrum& spec,
                  const WeightTable& w, int dim);

} // namespace qno

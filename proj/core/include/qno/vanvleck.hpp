// vanvleck.hpp — Effective Hamiltonian of the coupled qubit-oscillator system
//
// Second order in the coupling g, first order in the nonlinearity alpha.
// The transformation generator S is expanded as S = S1 + S2; the effective
// Hamiltonian is block-diagonal over the quasi-degenerate doublets
// {|j e>, |(j+1) g>} and diagonalized per 2x2 block with mixing angle eta_j.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>
#include <vector>

#include "qno/basis.hpp"
#include "qno/params.hpp"

namespace qno {

// Per-doublet data of the 2x2 effective block.
struct EffectiveBlock {
    int j = 0;
    double delta_of_j = 0.0;  // off-diagonal coupling Delta(j)
    double w1_j = 0.0, w1_j1 = 0.0;   // W1(j, Omega), W1(j+1, Omega)
    double w0_j = 0.0, w0_j2 = 0.0;   // W0(j, Omega), W0(j+2, Omega)
    double detuning = 0.0;    // delta_j
    double eta = 0.0;         // mixing angle in [0, pi]
};

// Spectrum of the coupled system in the doublet labelling.
struct EnergySpectrum {
    SystemParams params;
    int j_max = 0;                   // highest retained doublet index
    std::vector<double> energies;    // E_n, n = 0..2*j_max+2
    std::vector<double> eta;         // eta_j, j = 0..j_max
    // Column n is |n> expressed in the product basis |j g/e>; empty until
    // vanvleck_states() fills it.  Rows span oscillator levels 0..osc_levels-1.
    Eigen::MatrixXd states;
    int osc_levels = 0;

    int n_states() const { return static_cast<int>(energies.size()); }
};

struct TransitionFrequency {
    int n = 0, m = 0;   // n > m
    double omega = 0.0; // E_n - E_m
};

// Second-order energy shifts W0(j, Omega_eval), W1(j, Omega_eval).  The
// evaluation frequency is separate from p.omega because the resonance
// condition evaluates these shifts at delta_b instead.
double w_shift_w0(int j, const SystemParams& p, double omega_eval);
double w_shift_w1(int j, const SystemParams& p, double omega_eval);
std::pair<double, double> w_shifts(int j, const SystemParams& p); // (W0, W1) at p.omega

// Delta(j) = -(g*delta0/delta_b) * n1(j)
double coupling_delta(int j, const SystemParams& p);

// (delta_j, eta_j); eta_j is the upper-half-plane angle of (delta_j, 2|Delta(j)|),
// exactly pi/2 at delta_j = 0.
std::pair<double, double> detuning_and_angle(int j, const SystemParams& p);

EffectiveBlock effective_block(int j, const SystemParams& p);

// Energies only (states matrix left empty).
EnergySpectrum eigenenergies(const SystemParams& p, int j_max);

// Minimal doublet gap at the doublet-j resonance:
// sqrt(j+1) * g * (delta0/delta_b) * [2 - 3*alpha*(j+1)/omega].
double rabi_splitting(int j, const SystemParams& p);

// Oscillator frequency Omega*(j) at which doublet j is resonant, including
// the coupling-induced shift of the bare condition Omega = delta_b - 3*alpha*(j+1).
double bloch_siegert_resonance(int j, const SystemParams& p);

// Sparse anti-symmetric matrices iS1, iS2 over the product basis
// (dimension 2*osc_levels).  All listed elements are real.
struct VanVleckGenerator {
    Eigen::MatrixXd s1;
    Eigen::MatrixXd s2;
    int osc_levels = 0;
};

VanVleckGenerator generator_elements(const SystemParams& p, int j_max);

// Full spectrum with eigenvectors: columns are
// [1 - iS1 - iS2 + (iS1)^2/2] |n>_eff, renormalized to unit norm.
// Throws errc::truncation_leak if any state keeps > 1e-3 of its norm on the
// two highest retained oscillator levels.
EnergySpectrum vanvleck_states(const SystemParams& p, int j_max);

// All pairs n > m with omega_nm = E_n - E_m.
std::vector<TransitionFrequency> transition_frequencies(const EnergySpectrum& spec);

// Closed-form transition frequencies omega_10, omega_20, omega_31, omega_41,
// omega_32, omega_42 for the resonant unbiased case Omega = delta_b = delta0,
// expanded through O(alpha*g^2).  Returned in that order.
std::array<double, 6> resonant_transition_expansion(const SystemParams& p);

} // namespace qno

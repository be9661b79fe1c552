// approx.hpp — Analytic approximation schemes for the dissipative dynamics
//
// Four schemes on top of the secular-decoupled master equation:
//   FSA  — populations and coherences decouple; each coherence decays with
//          Gamma_nm = -pi*L_nm,nm.
//   LTA  — FSA populations with exponentially suppressed upward rates
//          dropped; closed-form five-level solutions.
//   SEA  — long-time relaxation through the smallest decay eigenvalue
//          Gamma_r of the three-level rate matrix.
//   PSA  — FSA plus the slowly rotating cross terms coupling the coherence
//          pairs (01)/(02), (13)/(23), (14)/(24).

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "qno/observables.hpp"
#include "qno/redfield.hpp"
#include "qno/spectra.hpp"

namespace qno {

// The eight independent five-level population rates, their detailed-balance
// partners, and the closed-form dephasing/cross coefficients.
struct RateSet {
    // population rates L_jj,kk (j < k): downward transfer k -> j
    double r01 = 0.0, r02 = 0.0, r12 = 0.0, r13 = 0.0, r14 = 0.0;
    double r23 = 0.0, r24 = 0.0, r34 = 0.0;
    // detailed-balance partners L_kk,jj (upward)
    double u01 = 0.0, u02 = 0.0, u12 = 0.0, u13 = 0.0, u14 = 0.0;
    double u23 = 0.0, u24 = 0.0, u34 = 0.0;
    // dephasing coefficients L_nm,nm for the ten five-level pairs, indexed
    // [n][m] with n < m
    Eigen::MatrixXd dephasing;
    // cross terms for the three coupled coherence pairs
    double c01_02 = 0.0, c02_01 = 0.0;
    double c13_23 = 0.0, c23_13 = 0.0;
    double c14_24 = 0.0, c24_14 = 0.0;

    double down(int j, int k) const;  // L_jj,kk, j < k
    double up(int j, int k) const;    // L_kk,jj, j < k
};

RateSet rate_set(const SystemParams& p, const EnergySpectrum& spec,
                 const Eigen::MatrixXd& y);

// Gamma_nm = -pi*L_nm,nm for the ten pairs (n < m <= 4), as a symmetric matrix.
Eigen::MatrixXd fsa_dephasing(const RateSet& rates);

// Closed-form five-level populations sigma_nn(t) of the low-temperature rate
// matrix.  Throws errc::degenerate_rate_denominator when a rate denominator
// falls below 1e-12 in magnitude.
std::array<double, 5> lta_populations(const std::array<double, 5>& sigma0,
                                      const RateSet& rates, double t);

// The 5x5 low-temperature rate matrix itself (for cross-checks).
Eigen::MatrixXd lta_matrix(const RateSet& rates);

struct SeaRates {
    double gamma_r = 0.0;   // smallest nonzero decay rate
    double second = 0.0;    // second eigenvalue, for resonance plots
    Eigen::Matrix3d matrix; // the three-level rate matrix (unscaled by pi)
};

SeaRates sea_rate(const RateSet& rates);

// Population rate matrix over `dim` levels built from the full tensor
// (used at elevated temperature where more levels matter); returns the
// smallest/second smallest nonzero decay rates of -pi*L restricted to it.
SeaRates sea_rate_extended(const RedfieldTensor& tensor, int dim);

// P(t) = (p0 - p_inf) exp(-Gamma_r t) + p_inf
//        + sum_{n>m} p_nm(0) exp(-Gamma_nm t) cos(omega_nm t)
TimeSeries sea_pt(const EnergySpectrum& spec, const WeightTable& w,
                  const ComplexMatrix& rho0, const RateSet& rates, double gamma_r,
                  double p_inf, double sample_dt, int n_samples);

// Analytic one-sided cosine transform of sea_pt: Lorentzians at the
// transition frequencies plus a reported (not rasterized) delta(omega) weight.
SpectrumSeries sea_fourier(const EnergySpectrum& spec, const WeightTable& w,
                           const ComplexMatrix& rho0, const RateSet& rates,
                           double gamma_r, double p_inf,
                           const std::vector<double>& omega_grid);

// Two-mode solution of one coupled coherence pair.
struct PsaPair {
    int n = 0, m = 0, j = 0, k = 0;  // indices of (nm) and (jk)
    std::complex<double> lambda_plus, lambda_minus;
    std::complex<double> r;          // discriminant root
    std::complex<double> c_plus, c_minus, v_plus, v_minus;
    bool decoupled = false;          // both cross terms vanish

    std::complex<double> rho_nm(double t) const;
    std::complex<double> rho_jk(double t) const;
};

// Solves the pair system for (nm)/(jk) given initial coherences.  Throws
// errc::zero_discriminant when |R| < 1e-14.
PsaPair psa_pair(int n, int m, int j, int k, const EnergySpectrum& spec,
                 const RateSet& rates, std::complex<double> rho_nm0,
                 std::complex<double> rho_jk0);

// The six PSA coherences (01), (02), (13), (23), (14), (24).
std::array<PsaPair, 3> psa_offdiagonal(const ComplexMatrix& rho0,
                                       const EnergySpectrum& spec,
                                       const RateSet& rates);

struct LtaOptions {
    // Populations: closed forms require the low-temperature structure;
    // below this beta*omega the PSA falls back to integrating the full
    // five-level population system numerically.
    double closed_form_beta_min = 5.0;
};

// P(t) under the low-temperature approximation: LTA populations plus FSA
// coherences.
TimeSeries lta_pt(const EnergySpectrum& spec, const WeightTable& w,
                  const ComplexMatrix& rho0, const RateSet& rates,
                  double sample_dt, int n_samples);

// P(t) under the partial secular approximation: LTA (or numerically
// integrated) populations plus PSA/FSA coherences.
TimeSeries psa_pt(const SystemParams& p, const EnergySpectrum& spec,
                  const WeightTable& w, const ComplexMatrix& rho0,
                  const RateSet& rates, double sample_dt, int n_samples,
                  const LtaOptions& opts = {});

} // namespace qno

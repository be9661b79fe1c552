// redfield.hpp — Ohmic bath kernel, Bloch-Redfield tensor, and the master-equation integrator

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qno/observables.hpp"
#include "qno/params.hpp"
#include "qno/vanvleck.hpp"

namespace qno {

struct BathKernel {
    double kappa = 0.0;
    double beta = 1.0;

    // N(w) = [coth(beta*w/2) - 1]/2; series near w = 0 so that
    // spectral_density(w)*occupation(w) -> kappa/beta smoothly.
    double occupation(double w) const;
    // G(w) = kappa*w for all real w.
    double spectral_density(double w) const { return kappa * w; }
    // G(w)*N(w), smooth through w = 0 with value kappa/beta.
    double rate_kernel(double w) const;
};

// Rank-4 real tensor L[n][m][k][l] stored as a (D*D) x (D*D) matrix mapping
// vec(rho) (row-major n*D+m) to the dissipative part of vec(rho_dot)/pi.
struct RedfieldTensor {
    int dim = 0;
    Eigen::MatrixXd flat;        // (dim^2) x (dim^2)
    std::vector<double> omega;   // omega_nm flattened row-major

    double operator()(int n, int m, int k, int l) const {
        return flat(n * dim + m, k * dim + l);
    }
};

RedfieldTensor redfield_tensor(const SystemParams& p, const EnergySpectrum& spec,
                               const Eigen::MatrixXd& y, int dim);

struct IntegratorOptions {
    double dt = 0.005;            // base step (units of 1/omega)
    bool enforce_hermiticity = true;
    bool probe_error = true;      // step-halving local-error estimate
    double probe_tol = 1e-6;      // allowed local estimate per probe
    double dt_min = 1e-5;
};

struct Trajectory {
    double t0 = 0.0;
    double dt = 0.0;              // sample spacing
    std::vector<ComplexMatrix> rho;
    double max_trace_error = 0.0;
    double max_hermiticity_drift = 0.0;
};

// Fixed-step RK4 integration of
//   rho_dot_nm = -i*omega_nm*rho_nm + pi * sum_kl L_nm,kl rho_kl
// sampled on the uniform grid t = t0 + k*sample_dt, k = 0..n_samples-1.
// Throws errc::step_size_too_large when the local-error probe exceeds
// the tolerance at the minimum step.
Trajectory integrate_master(const ComplexMatrix& rho0, const EnergySpectrum& spec,
                            const RedfieldTensor& tensor, double sample_dt,
                            int n_samples, const IntegratorOptions& opts = {});

struct TimeSeries {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> values;
    std::string provenance;       // numeric | SEA | LTA | PSA | nondissipative

    double t(int i) const { return t0 + dt * i; }
    int size() const { return static_cast<int>(values.size()); }
};

TimeSeries population_difference(const Trajectory& traj, const WeightTable& w);

// Closed-form undamped dynamics P(t) = p0 + sum_{n>m} p_nm(0) cos(omega_nm t).
TimeSeries nondissipative_pt(const EnergySpectrum& spec, const WeightTable& w,
                             const ComplexMatrix& rho0, double sample_dt, int n_samples,
                             int dim);

} // namespace qno

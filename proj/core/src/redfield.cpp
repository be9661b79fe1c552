#include "qno/redfield.hpp"

#include <cassert>
#include <cmath>

namespace qno {

double BathKernel::occupation(double w) const {
    const double x = beta * w;
    if (std::abs(x) < 1e-6)
        return 1.0 / x - 0.5 + x / 12.0;
    return 0.5 * (1.0 / std::tanh(x / 2.0) - 1.0);
}

double BathKernel::rate_kernel(double w) const {
    const double x = beta * w;
    if (std::abs(x) < 1e-6)
        return kappa / beta - kappa * w / 2.0 + kappa * w * x / 12.0;
    return kappa * w * occupation(w);
}

RedfieldTensor redfield_tensor(const SystemParams& p, const EnergySpectrum& spec,
                               const Eigen::MatrixXd& y, int dim) {
    assert(dim <= spec.n_states());
    assert(y.rows() >= dim && y.cols() >= dim);

    const BathKernel bath{p.kappa, p.beta};

    Eigen::MatrixXd kmat(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m)
            kmat(n, m) = bath.rate_kernel(spec.energies[n] - spec.energies[m]);

    // a(n, k) = sum_j K(omega_jk) y_nj y_jk
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int k = 0; k < dim; ++k) {
            double acc = 0.0;
            for (int j = 0; j < dim; ++j)
                acc += kmat(j, k) * y(n, j) * y(j, k);
            a(n, k) = acc;
        }

    RedfieldTensor t;
    t.dim = dim;
    t.flat.resize(dim * dim, dim * dim);
    t.omega.resize(dim * dim);
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) {
            t.omega[n * dim + m] = spec.energies[n] - spec.energies[m];
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    double val = (kmat(n, k) + kmat(m, l)) * y(n, k) * y(l, m);
                    if (m == l)
                        val -= a(n, k);
                    if (n == k)
                        val -= a(m, l);
                    t.flat(n * dim + m, k * dim + l) = val;
                }
        }
    return t;
}

namespace {

struct Rhs {
    const Eigen::MatrixXd& lf;            // flattened tensor
    const Eigen::VectorXd& omega;         // omega_nm flattened
    // d(re + i im)/dt = -i*omega*(re + i*im) + pi*Lf*(re + i*im)
    void operator()(const Eigen::VectorXd& re, const Eigen::VectorXd& im,
                    Eigen::VectorXd& dre, Eigen::VectorXd& dim_) const {
        dre = omega.cwiseProduct(im) + M_PI * (lf * re);
        dim_ = -omega.cwiseProduct(re) + M_PI * (lf * im);
    }
};

struct Stepper {
    explicit Stepper(Rhs r) : rhs(r) {}
    Rhs rhs;
    Eigen::VectorXd k1r, k1i, k2r, k2i, k3r, k3i, k4r, k4i, tr, ti;

    void step(Eigen::VectorXd& re, Eigen::VectorXd& im, double h) {
        rhs(re, im, k1r, k1i);
        tr = re + 0.5 * h * k1r;
        ti = im + 0.5 * h * k1i;
        rhs(tr, ti, k2r, k2i);
        tr = re + 0.5 * h * k2r;
        ti = im + 0.5 * h * k2i;
        rhs(tr, ti, k3r, k3i);
        tr = re + h * k3r;
        ti = im + h * k3i;
        rhs(tr, ti, k4r, k4i);
        re += (h / 6.0) * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
        im += (h / 6.0) * (k1i + 2.0 * k2i + 2.0 * k3i + k4i);
    }
};

void mirror_hermitian(Eigen::VectorXd& re, Eigen::VectorXd& im, int dim) {
    for (int n = 0; n < dim; ++n) {
        im(n * dim + n) = 0.0;
        for (int m = 0; m < n; ++m) {
            const double sr = 0.5 * (re(n * dim + m) + re(m * dim + n));
            const double si = 0.5 * (im(n * dim + m) - im(m * dim + n));
            re(n * dim + m) = sr;
            re(m * dim + n) = sr;
            im(n * dim + m) = si;
            im(m * dim + n) = -si;
        }
    }
}

double hermiticity_drift(const Eigen::VectorXd& re, const Eigen::VectorXd& im, int dim) {
    double drift = 0.0;
    for (int n = 0; n < dim; ++n) {
        drift = std::max(drift, std::abs(im(n * dim + n)));
        for (int m = 0; m < n; ++m) {
            drift = std::max(drift, std::abs(re(n * dim + m) - re(m * dim + n)));
            drift = std::max(drift, std::abs(im(n * dim + m) + im(m * dim + n)));
        }
    }
    return drift;
}

} // namespace

Trajectory integrate_master(const ComplexMatrix& rho0, const EnergySpectrum& spec,
                            const RedfieldTensor& tensor, double sample_dt,
                            int n_samples, const IntegratorOptions& opts) {
    const int dim = tensor.dim;
    assert(rho0.rows() == dim && rho0.cols() == dim);
    assert(sample_dt > 0.0 && n_samples >= 1);
    (void)spec;

    const int substeps = std::max(1, static_cast<int>(std::ceil(sample_dt / opts.dt)));
    const double h = sample_dt / substeps;

    Eigen::VectorXd omega =
        Eigen::Map<const Eigen::VectorXd>(tensor.omega.data(), dim * dim);
    Stepper stepper{Rhs{tensor.flat, omega}};

    Eigen::VectorXd re(dim * dim), im(dim * dim);
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) {
            re(n * dim + m) = rho0(n, m).real();
            im(n * dim + m) = rho0(n, m).imag();
        }

    Trajectory traj;
    traj.t0 = 0.0;
    traj.dt = sample_dt;
    traj.rho.reserve(n_samples);

    double trace0 = 0.0;
    for (int n = 0; n < dim; ++n)
        trace0 += re(n * dim + n);

    auto snapshot = [&]() {
        ComplexMatrix rho(dim, dim);
        for (int n = 0; n < dim; ++n)
            for (int m = 0; m < dim; ++m)
                rho(n, m) = {re(n * dim + m), im(n * dim + m)};
        traj.rho.push_back(std::move(rho));
        double tr = 0.0;
        for (int n = 0; n < dim; ++n)
            tr += re(n * dim + n);
        traj.max_trace_error = std::max(traj.max_trace_error, std::abs(tr - trace0));
        traj.max_hermiticity_drift =
            std::max(traj.max_hermiticity_drift, hermiticity_drift(re, im, dim));
    };

    snapshot();

    long step_index = 0;
    for (int s = 1; s < n_samples; ++s) {
        for (int k = 0; k < substeps; ++k, ++step_index) {
            if (opts.probe_error && step_index % 1000 == 0) {
                // Step-halving local-error estimate from the current state.
                Eigen::VectorXd re_f = re, im_f = im, re_h = re, im_h = im;
                Stepper probe{Rhs{tensor.flat, omega}};
                probe.step(re_f, im_f, h);
                probe.step(re_h, im_h, h / 2.0);
                probe.step(re_h, im_h, h / 2.0);
                const double est = std::sqrt((re_f - re_h).squaredNorm() +
                                             (im_f - im_h).squaredNorm());
                if (est > opts.probe_tol)
                    throw Error(errc::step_size_too_large,
                                "local error estimate " + std::to_string(est) +
                                    " exceeds tolerance at step " + std::to_string(h) +
                                    (h <= opts.dt_min ? " (minimum step reached)"
                                                      : "; reduce dt"));
            }
            stepper.step(re, im, h);
            if (opts.enforce_hermiticity) {
                traj.max_hermiticity_drift =
                    std::max(traj.max_hermiticity_drift, hermiticity_drift(re, im, dim));
                mirror_hermitian(re, im, dim);
            }
        }
        snapshot();
    }
    return traj;
}

TimeSeries population_difference(const Trajectory& traj, const WeightTable& w) {
    TimeSeries s;
    s.t0 = traj.t0;
    s.dt = traj.dt;
    s.provenance = "numeric";
    s.values.reserve(traj.rho.size());
    for (const auto& rho : traj.rho)
        s.values.push_back(w.population_difference(rho));
    return s;
}

TimeSeries nondissipative_pt(const EnergySpectrum& spec, const WeightTable& w,
                             const ComplexMatrix& rho0, double sample_dt, int n_samples,
                             int dim) {
    assert(dim <= spec.n_states() && rho0.rows() >= dim);
    double p0 = 0.0;
    for (int n = 0; n < dim; ++n)
        p0 += w.diag(n) * rho0(n, n).real();

    TimeSeries s;
    s.t0 = 0.0;
    s.dt = sample_dt;
    s.provenance = "nondissipative";
    s.values.assign(n_samples, p0);
    for (int n = 1; n < dim; ++n)
        for (int m = 0; m < n; ++m) {
            const double amp = w.offdiag(n, m) * rho0(n, m).real();
            if (amp == 0.0)
                continue;
            const double om = spec.energies[n] - spec.energies[m];
            for (int i = 0; i < n_samples; ++i)
                s.values[i] += amp * std::cos(om * (sample_dt * i));
        }
    return s;
}

} // namespace qno

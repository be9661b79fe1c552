#include "qno/approx.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cassert>
#include <cmath>

namespace qno {

namespace {

int pair_slot(int j, int k) {
    // (0,1)(0,2)(1,2)(1,3)(1,4)(2,3)(2,4)(3,4) -> 0..7
    static const int table[5][5] = {{-1, 0, 1, -1, -1},
                                    {0, -1, 2, 3, 4},
                                    {1, 2, -1, 5, 6},
                                    {-1, 3, 5, -1, 7},
                                    {-1, 4, 6, 7, -1}};
    assert(j >= 0 && j < 5 && k >= 0 && k < 5 && j != k);
    return table[j][k];
}

} // namespace

double RateSet::down(int j, int k) const {
    const double v[8] = {r01, r02, r12, r13, r14, r23, r24, r34};
    const int slot = pair_slot(j, k);
    assert(slot >= 0);
    return v[slot];
}

double RateSet::up(int j, int k) const {
    const double v[8] = {u01, u02, u12, u13, u14, u23, u24, u34};
    const int slot = pair_slot(j, k);
    assert(slot >= 0);
    return v[slot];
}

RateSet rate_set(const SystemParams& p, const EnergySpectrum& spec,
                 const Eigen::MatrixXd& y) {
    assert(spec.n_states() >= 5 && y.rows() >= 5);
    const BathKernel bath{p.kappa, p.beta};
    auto om = [&](int n, int m) { return spec.energies[n] - spec.energies[m]; };
    auto kern = [&](int n, int m) { return bath.rate_kernel(om(n, m)); };

    RateSet r;
    auto down = [&](int j, int k) { return 2.0 * kern(j, k) * y(j, k) * y(j, k); };
    auto up = [&](int j, int k) {
        // detailed-balance partner: L_kk,jj = L_jj,kk + 2*G(omega_jk)*y_jk^2
        return down(j, k) + 2.0 * p.kappa * om(j, k) * y(j, k) * y(j, k);
    };
    r.r01 = down(0, 1); r.u01 = up(0, 1);
    r.r02 = down(0, 2); r.u02 = up(0, 2);
    r.r12 = down(1, 2); r.u12 = up(1, 2);
    r.r13 = down(1, 3); r.u13 = up(1, 3);
    r.r14 = down(1, 4); r.u14 = up(1, 4);
    r.r23 = down(2, 3); r.u23 = up(2, 3);
    r.r24 = down(2, 4); r.u24 = up(2, 4);
    r.r34 = down(3, 4); r.u34 = up(3, 4);

    const double k0 = p.kappa / p.beta;
    auto pure = [&](int n, int m) {
        return 2.0 * k0 * y(n, n) * y(m, m) - k0 * y(n, n) * y(n, n) -
               k0 * y(m, m) * y(m, m);
    };

    r.dephasing = Eigen::MatrixXd::Zero(5, 5);
    auto set_deph = [&](int n, int m, double v) {
        r.dephasing(n, m) = v;
        r.dephasing(m, n) = v;
    };
    set_deph(0, 1, pure(0, 1) - 0.5 * r.r01);
    set_deph(0, 2, pure(0, 2) - 0.5 * r.r02);
    set_deph(0, 3, pure(0, 3) - 0.5 * r.r13 - 0.5 * r.r23);
    set_deph(0, 4, pure(0, 4) - 0.5 * r.r14 - 0.5 * r.r24);
    set_deph(1, 2, pure(1, 2) - 0.5 * r.r01 - 0.5 * r.r02);
    set_deph(1, 3, pure(1, 3) - 0.5 * r.r01 - 0.5 * r.r13 - 0.5 * r.r23);
    set_deph(1, 4, pure(1, 4) - 0.5 * r.r01 - 0.5 * r.r14 - 0.5 * r.r24);
    set_deph(2, 3, pure(2, 3) - 0.5 * r.r02 - 0.5 * r.r13 - 0.5 * r.r23);
    set_deph(2, 4, pure(2, 4) - 0.5 * r.r02 - 0.5 * r.r14 - 0.5 * r.r24);
    set_deph(3, 4, pure(3, 4) - 0.5 * r.r13 - 0.5 * r.r23 - 0.5 * r.r14 - 0.5 * r.r24);

    r.c01_02 = k0 * (y(0, 0) * y(1, 2) - y(1, 2) * y(2, 2)) -
               kern(0, 2) * y(0, 1) * y(0, 2) - kern(1, 2) * y(1, 1) * y(1, 2) -
               kern(3, 2) * y(1, 3) * y(2, 3) - kern(4, 2) * y(1, 4) * y(2, 4);
    r.c02_01 = k0 * (y(0, 0) * y(1, 2) - y(1, 2) * y(1, 1)) -
               kern(0, 1) * y(0, 1) * y(0, 2) - kern(2, 1) * y(2, 2) * y(1, 2) -
               kern(3, 1) * y(1, 3) * y(2, 3) - kern(4, 1) * y(1, 4) * y(2, 4);
    r.c13_23 = k0 * (y(3, 3) * y(1, 2) - y(1, 2) * y(2, 2)) -
               kern(1, 2) * (y(1, 1) * y(1, 2) - y(1, 2) * y(3, 3)) -
               kern(0, 2) * y(0, 1) * y(0, 2) - kern(3, 2) * y(1, 3) * y(2, 3) -
               kern(4, 2) * y(1, 4) * y(2, 4);
    r.c23_13 = k0 * (y(3, 3) * y(1, 2) - y(1, 2) * y(1, 1)) -
               kern(2, 1) * (y(2, 2) * y(1, 2) - y(1, 2) * y(3, 3)) -
               kern(0, 1) * y(0, 1) * y(0, 2) - kern(3, 1) * y(1, 3) * y(2, 3) -
               kern(4, 1) * y(1, 4) * y(2, 4);
    r.c14_24 = k0 * (y(4, 4) * y(1, 2) - y(1, 2) * y(2, 2)) -
               kern(1, 2) * (y(1, 1) * y(1, 2) - y(1, 2) * y(4, 4)) -
               kern(0, 2) * y(0, 1) * y(0, 2) - kern(3, 2) * y(1, 3) * y(2, 3) -
               kern(4, 2) * y(1, 4) * y(2, 4);
    r.c24_14 = k0 * (y(4, 4) * y(1, 2) - y(1, 2) * y(1, 1)) -
               kern(2, 1) * (y(2, 2) * y(1, 2) - y(1, 2) * y(4, 4)) -
               kern(0, 1) * y(0, 1) * y(0, 2) - kern(3, 1) * y(1, 3) * y(2, 3) -
               kern(4, 1) * y(1, 4) * y(2, 4);
    return r;
}

Eigen::MatrixXd fsa_dephasing(const RateSet& rates) {
    return -M_PI * rates.dephasing;
}

Eigen::MatrixXd lta_matrix(const RateSet& r) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    m(0, 1) = r.r01;
    m(0, 2) = r.r02;
    m(1, 1) = -r.r01;
    m(1, 3) = r.r13;
    m(1, 4) = r.r14;
    m(2, 2) = -r.r02;
    m(2, 3) = r.r23;
    m(2, 4) = r.r24;
    m(3, 3) = -r.r13 - r.r23;
    m(4, 4) = -r.r14 - r.r24;
    return m;
}

std::array<double, 5> lta_populations(const std::array<double, 5>& s0,
                                      const RateSet& r, double t) {
    const double a1 = r.r01, a2 = r.r02;
    const double b3 = r.r13 + r.r23;
    const double b4 = r.r14 + r.r24;

    const double d3_1 = -a1 + b3, d4_1 = -a1 + b4;
    const double d3_2 = -a2 + b3, d4_2 = -a2 + b4;
    for (double d : {d3_1, d4_1, d3_2, d4_2})
        if (std::abs(d) < 1e-12)
            throw Error(errc::degenerate_rate_denominator,
                        "coincident relaxation rates; closed forms are singular");

    const double e1 = std::exp(-M_PI * a1 * t);
    const double e2 = std::exp(-M_PI * a2 * t);
    const double e3 = std::exp(-M_PI * b3 * t);
    const double e4 = std::exp(-M_PI * b4 * t);

    std::array<double, 5> s;
    s[3] = e3 * s0[3];
    s[4] = e4 * s0[4];

    const double a13 = -r.r13 * s0[3] / d3_1;  // forcing of sigma_11 by level 3
    const double b14 = -r.r14 * s0[4] / d4_1;
    s[1] = (s0[1] - a13 - b14) * e1 + a13 * e3 + b14 * e4;

    const double a23 = -r.r23 * s0[3] / d3_2;
    const double b24 = -r.r24 * s0[4] / d4_2;
    s[2] = (s0[2] - a23 - b24) * e2 + a23 * e3 + b24 * e4;

    const double total = s0[0] + s0[1] + s0[2] + s0[3] + s0[4];
    s[0] = total - s[1] - s[2] - s[3] - s[4];
    return s;
}

SeaRates sea_rate(const RateSet& r) {
    SeaRates out;
    out.matrix << -r.u01 - r.u02, r.r01, r.r02,
                   r.u01, -r.r01 - r.u12, r.r12,
                   r.u02, r.u12, -r.r02 - r.r12;

    const double sum = r.r01 + r.r02 + r.u01 + r.r12 + r.u02 + r.u12;
    const double prod = r.r01 * r.r02 + r.u01 * r.r02 + r.r01 * r.r12 +
                        r.u01 * r.r12 + r.r01 * r.u02 + r.r12 * r.u02 +
                        r.u12 * r.r02 + r.u01 * r.u12 + r.u02 * r.u12;
    const double disc = std::sqrt(std::max(0.0, sum * sum - 4.0 * prod));
    out.gamma_r = -(M_PI / 2.0) * (-sum + disc);
    out.second = -(M_PI / 2.0) * (-sum - disc);
    return out;
}

SeaRates sea_rate_extended(const RedfieldTensor& tensor, int dim) {
    assert(dim <= tensor.dim);
    Eigen::MatrixXd pop(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int k = 0; k < dim; ++k)
            pop(n, k) = tensor(n, n, k, k);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(pop);
    std::vector<double> decay;
    for (int i = 0; i < dim; ++i)
        decay.push_back(-M_PI * solver.eigenvalues()[i].real());
    std::sort(decay.begin(), decay.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });

    SeaRates out;
    const double scale = std::abs(decay.back());
    std::size_t i = 0;
    while (i < decay.size() && std::abs(decay[i]) < 1e-12 * std::max(scale, 1e-300))
        ++i;
    out.gamma_r = i < decay.size() ? decay[i] : 0.0;
    out.second = i + 1 < decay.size() ? decay[i + 1] : 0.0;
    out.matrix.setZero();
    return out;
}

namespace {

struct CoherenceTerm {
    int n, m;
    double amplitude;  // p_nm(0)
    double gamma;      // FSA decay
    double omega;      // transition frequency
};

std::vector<CoherenceTerm> fsa_terms(const EnergySpectrum& spec, const WeightTable& w,
                                     const ComplexMatrix& rho0, const RateSet& rates) {
    std::vector<CoherenceTerm> terms;
    for (int n = 1; n < 5; ++n)
        for (int m = 0; m < n; ++m)
            terms.push_back({n, m, w.offdiag(n, m) * rho0(n, m).real(),
                             -M_PI * rates.dephasing(n, m),
                             spec.energies[n] - spec.energies[m]});
    return terms;
}

} // namespace

TimeSeries sea_pt(const EnergySpectrum& spec, const WeightTable& w,
                  const ComplexMatrix& rho0, const RateSet& rates, double gamma_r,
                  double p_inf, double sample_dt, int n_samples) {
    double p0 = 0.0;
    for (int n = 0; n < rho0.rows(); ++n)
        p0 += w.diag(n) * rho0(n, n).real();

    auto terms = fsa_terms(spec, w, rho0, rates);

    TimeSeries s;
    s.dt = sample_dt;
    s.provenance = "SEA";
    s.values.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = sample_dt * i;
        double v = (p0 - p_inf) * std::exp(-gamma_r * t) + p_inf;
        for (const auto& c : terms)
            v += c.amplitude * std::exp(-c.gamma * t) * std::cos(c.omega * t);
        s.values[i] = v;
    }
    return s;
}

SpectrumSeries sea_fourier(const EnergySpectrum& spec, const WeightTable& w,
                           const ComplexMatrix& rho0, const RateSet& rates,
                           double gamma_r, double p_inf,
                           const std::vector<double>& omega_grid) {
    double p0 = 0.0;
    for (int n = 0; n < rho0.rows(); ++n)
        p0 += w.diag(n) * rho0(n, n).real();
    auto terms = fsa_terms(spec, w, rho0, rates);

    SpectrumSeries f;
    f.omega = omega_grid;
    f.provenance = "SEA";
    f.delta_weight = 2.0 * M_PI * p_inf;
    f.values.resize(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        const double om = omega_grid[i];
        double v = 0.0;
        if (gamma_r > 0.0)
            v += 2.0 * (p0 - p_inf) * gamma_r / (om * om + gamma_r * gamma_r);
        for (const auto& c : terms) {
            if (c.gamma <= 0.0)
                continue;
            v += c.amplitude * c.gamma *
                 (1.0 / (c.gamma * c.gamma + (c.omega + om) * (c.omega + om)) +
                  1.0 / (c.gamma * c.gamma + (c.omega - om) * (c.omega - om)));
        }
        f.values[i] = v;
    }
    return f;
}

std::complex<double> PsaPair::rho_nm(double t) const {
    if (decoupled)
        return c_plus * std::exp(lambda_plus * t);
    return c_plus * v_plus * std::exp(lambda_plus * t) +
           c_minus * v_minus * std::exp(lambda_minus * t);
}

std::complex<double> PsaPair::rho_jk(double t) const {
    if (decoupled)
        return c_minus * std::exp(lambda_minus * t);
    return c_plus * std::exp(lambda_plus * t) + c_minus * std::exp(lambda_minus * t);
}

PsaPair psa_pair(int n, int m, int j, int k, const EnergySpectrum& spec,
                 const RateSet& rates, std::complex<double> rho_nm0,
                 std::complex<double> rho_jk0) {
    using cd = std::complex<double>;
    const cd i_unit(0.0, 1.0);

    auto cross = [&](int a1, int b1, int a2, int b2) -> double {
        if (a1 == 0 && b1 == 1 && a2 == 0 && b2 == 2) return rates.c01_02;
        if (a1 == 0 && b1 == 2 && a2 == 0 && b2 == 1) return rates.c02_01;
        if (a1 == 1 && b1 == 3 && a2 == 2 && b2 == 3) return rates.c13_23;
        if (a1 == 2 && b1 == 3 && a2 == 1 && b2 == 3) return rates.c23_13;
        if (a1 == 1 && b1 == 4 && a2 == 2 && b2 == 4) return rates.c14_24;
        if (a1 == 2 && b1 == 4 && a2 == 1 && b2 == 4) return rates.c24_14;
        assert(false && "not a coupled coherence pair");
        return 0.0;
    };

    const double l_nm = rates.dephasing(n, m);
    const double l_jk = rates.dephasing(j, k);
    const double c_nm_jk = cross(n, m, j, k);
    const double c_jk_nm = cross(j, k, n, m);
    const double w_nm = spec.energies[n] - spec.energies[m];
    const double w_jk = spec.energies[j] - spec.energies[k];

    PsaPair pair;
    pair.n = n;
    pair.m = m;
    pair.j = j;
    pair.k = k;

    const cd x = M_PI * (l_nm - l_jk) - i_unit * (w_nm - w_jk);
    const cd r = std::sqrt(x * x + 4.0 * M_PI * M_PI * c_nm_jk * c_jk_nm);
    pair.r = r;
    const cd common = 0.5 * (M_PI * (l_nm + l_jk) - i_unit * (w_nm + w_jk));
    pair.lambda_plus = common + 0.5 * r;
    pair.lambda_minus = common - 0.5 * r;

    if (std::abs(c_jk_nm) < 1e-300 && std::abs(c_nm_jk) < 1e-300) {
        // Decoupled pair: plain secular decay of each coherence.
        pair.lambda_plus = M_PI * l_nm - i_unit * w_nm;
        pair.lambda_minus = M_PI * l_jk - i_unit * w_jk;
        pair.c_plus = rho_nm0;
        pair.c_minus = rho_jk0;
        pair.v_plus = 1.0;
        pair.v_minus = 1.0;
        pair.decoupled = true;
        return pair;
    }
    if (std::abs(r) < 1e-14)
        throw Error(errc::zero_discriminant,
                    "coherence pair (" + std::to_string(n) + std::to_string(m) + ")/(" +
                        std::to_string(j) + std::to_string(k) +
                        ") sits at an exceptional point");

    pair.c_plus = (2.0 * M_PI * c_jk_nm * rho_nm0 - rho_jk0 * (x - r)) / (2.0 * r);
    pair.c_minus = -(2.0 * M_PI * c_jk_nm * rho_nm0 - rho_jk0 * (x + r)) / (2.0 * r);
    pair.v_plus = (x + r) / (2.0 * M_PI * c_jk_nm);
    pair.v_minus = (x - r) / (2.0 * M_PI * c_jk_nm);
    return pair;
}

std::array<PsaPair, 3> psa_offdiagonal(const ComplexMatrix& rho0,
                                       const EnergySpectrum& spec,
                                       const RateSet& rates) {
    return {psa_pair(0, 1, 0, 2, spec, rates, rho0(0, 1), rho0(0, 2)),
            psa_pair(1, 3, 2, 3, spec, rates, rho0(1, 3), rho0(2, 3)),
            psa_pair(1, 4, 2, 4, spec, rates, rho0(1, 4), rho0(2, 4))};
}

TimeSeries lta_pt(const EnergySpectrum& spec, const WeightTable& w,
                  const ComplexMatrix& rho0, const RateSet& rates,
                  double sample_dt, int n_samples) {
    std::array<double, 5> s0;
    for (int n = 0; n < 5; ++n)
        s0[n] = rho0(n, n).real();
    auto terms = fsa_terms(spec, w, rho0, rates);

    TimeSeries s;
    s.dt = sample_dt;
    s.provenance = "LTA";
    s.values.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = sample_dt * i;
        auto pops = lta_populations(s0, rates, t);
        double v = 0.0;
        for (int n = 0; n < 5; ++n)
            v += w.diag(n) * pops[n];
        for (const auto& c : terms)
            v += c.amplitude * std::exp(-c.gamma * t) * std::cos(c.omega * t);
        s.values[i] = v;
    }
    return s;
}

namespace {

// Five-level secular population matrix with every retained rate (upward ones
// included); columns sum to zero by construction.
Eigen::MatrixXd secular_population_matrix(const RateSet& r) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(5, 5);
    for (int n = 0; n < 5; ++n)
        for (int k = 0; k < 5; ++k) {
            if (n == k)
                continue;
            // L_nn,kk: transfer k -> n.  The (0,3) and (0,4) routes are
            // dropped as higher order in g.
            if ((n == 0 && k >= 3) || (k == 0 && n >= 3))
                continue;
            m(n, k) = n < k ? r.down(n, k) : r.up(k, n);
        }
    for (int k = 0; k < 5; ++k)
        m(k, k) = -m.col(k).sum();
    return m;
}

} // namespace

TimeSeries psa_pt(const SystemParams& p, const EnergySpectrum& spec,
                  const WeightTable& w, const ComplexMatrix& rho0,
                  const RateSet& rates, double sample_dt, int n_samples,
                  const LtaOptions& opts) {
    std::array<double, 5> s0;
    for (int n = 0; n < 5; ++n)
        s0[n] = rho0(n, n).real();

    const bool closed_form = p.beta * p.omega >= opts.closed_form_beta_min;

    // Populations beyond the closed-form regime: eigendecompose the full
    // five-level secular system.
    Eigen::MatrixXcd vecs;
    Eigen::VectorXcd vals;
    Eigen::VectorXcd coeffs;
    if (!closed_form) {
        Eigen::MatrixXd m = secular_population_matrix(rates);
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
        vecs = solver.eigenvectors();
        vals = solver.eigenvalues();
        Eigen::VectorXcd s0v(5);
        for (int n = 0; n < 5; ++n)
            s0v(n) = s0[n];
        coeffs = vecs.partialPivLu().solve(s0v);
    }

    auto pair01 = psa_pair(0, 1, 0, 2, spec, rates, rho0(0, 1), rho0(0, 2));
    auto pair13 = psa_pair(1, 3, 2, 3, spec, rates, rho0(1, 3), rho0(2, 3));
    auto pair14 = psa_pair(1, 4, 2, 4, spec, rates, rho0(1, 4), rho0(2, 4));

    // Remaining coherences stay secular.
    const std::pair<int, int> rest[] = {{2, 1}, {3, 0}, {4, 0}, {4, 3}};
    std::vector<CoherenceTerm> fsa;
    for (auto [n, m] : rest)
        fsa.push_back({n, m, w.offdiag(n, m) * rho0(n, m).real(),
                       -M_PI * rates.dephasing(n, m),
                       spec.energies[n] - spec.energies[m]});

    TimeSeries s;
    s.dt = sample_dt;
    s.provenance = "PSA";
    s.values.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double t = sample_dt * i;
        double v = 0.0;
        if (closed_form) {
            auto pops = lta_populations(s0, rates, t);
            for (int n = 0; n < 5; ++n)
                v += w.diag(n) * pops[n];
        } else {
            Eigen::VectorXcd st = Eigen::VectorXcd::Zero(5);
            for (int mode = 0; mode < 5; ++mode)
                st += coeffs(mode) * vecs.col(mode) *
                      std::exp(M_PI * vals(mode) * t);
            for (int n = 0; n < 5; ++n)
                v += w.diag(n) * st(n).real();
        }
        // PSA pairs: rho_nm(t) for (01),(02),(13),(23),(14),(24).  Note the
        // stored pair holds (nm) and (jk); weights address (n>m).
        v += w.offdiag(1, 0) * pair01.rho_nm(t).real();
        v += w.offdiag(2, 0) * pair01.rho_jk(t).real();
        v += w.offdiag(3, 1) * pair13.rho_nm(t).real();
        v += w.offdiag(3, 2) * pair13.rho_jk(t).real();
        v += w.offdiag(4, 1) * pair14.rho_nm(t).real();
        v += w.offdiag(4, 2) * pair14.rho_jk(t).real();
        for (const auto& c : fsa)
            v += c.amplitude * std::exp(-c.gamma * t) * std::cos(c.omega * t);
        s.values[i] = v;
    }
    return s;
}

} // namespace qno

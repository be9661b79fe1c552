#include "qno/brute_force.hpp"

#include <Eigen/Eigenvalues>
#include <cassert>
#include <cmath>

#include "qno/oscillator.hpp"

namespace qno {

namespace {

Eigen::MatrixXd bare_ladder(int n) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int l = 0; l + 1 < n; ++l) {
        x(l, l + 1) = std::sqrt(l + 1.0);
        x(l + 1, l) = std::sqrt(l + 1.0);
    }
    return x;
}

Eigen::MatrixXd perturbed_ladder(int n, const SystemParams& p) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
            x(l, m) = ladder_element(l, m, p);
    return x;
}

} // namespace

BruteForceResult brute_force_spectrum(const SystemParams& p, int n_trunc,
                                      QuarticMode mode) {
    assert(p.validated);
    assert(n_trunc >= 12);
    const int dim = 2 * n_trunc;

    Eigen::MatrixXd osc;
    Eigen::MatrixXd x;
    if (mode == QuarticMode::exact) {
        x = bare_ladder(n_trunc);
        Eigen::MatrixXd x2 = x * x;
        osc = (p.alpha / 4.0) * x2 * x2;
        for (int l = 0; l < n_trunc; ++l)
            osc(l, l) += p.omega * l;
    } else {
        x = perturbed_ladder(n_trunc, p);
        osc = Eigen::MatrixXd::Zero(n_trunc, n_trunc);
        for (int l = 0; l < n_trunc; ++l)
            osc(l, l) = osc_energy(l, p);
    }

    // Basis index 2*l + (excited ? 1 : 0); sigma_z = diag(+1, -1) on (g, e).
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double cz = p.g * p.epsilon / p.delta_b;
    const double cx = -p.g * p.delta0 / p.delta_b;
    for (int l = 0; l < n_trunc; ++l) {
        for (int m = 0; m < n_trunc; ++m) {
            const double xv = x(l, m);
            h(2 * l, 2 * m) += osc(l, m) + cz * xv;
            h(2 * l + 1, 2 * m + 1) += osc(l, m) - cz * xv;
            h(2 * l, 2 * m + 1) += cx * xv;
            h(2 * l + 1, 2 * m) += cx * xv;
        }
        h(2 * l, 2 * l) += -p.delta_b / 2.0;
        h(2 * l + 1, 2 * l + 1) += +p.delta_b / 2.0;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);

    BruteForceResult r;
    r.params = p;
    r.mode = mode;
    r.n_trunc = n_trunc;
    r.energies = solver.eigenvalues();
    r.states = solver.eigenvectors();

    Eigen::MatrixXd x_full = Eigen::MatrixXd::Zero(dim, dim);
    for (int l = 0; l < n_trunc; ++l)
        for (int m = 0; m < n_trunc; ++m) {
            x_full(2 * l, 2 * m) = x(l, m);
            x_full(2 * l + 1, 2 * m + 1) = x(l, m);
        }
    r.position = r.states.transpose() * x_full * r.states;
    return r;
}

BruteForceResult converged_brute_force(const SystemParams& p, int n_trunc, int levels,
                                       double tol, QuarticMode mode) {
    BruteForceResult prev = brute_force_spectrum(p, n_trunc, mode);
    for (int round = 0; round < 3; ++round) {
        BruteForceResult next = brute_force_spectrum(p, 2 * prev.n_trunc, mode);
        double shift = 0.0;
        for (int k = 0; k < levels; ++k)
            shift = std::max(shift, std::abs(next.energies[k] - prev.energies[k]));
        if (shift < tol)
            return next;
        prev = std::move(next);
    }
    return prev;
}

MatchedSpectrum match_labels(const BruteForceResult& oracle, const EnergySpectrum& vv) {
    assert(vv.states.size() > 0 && "vanvleck_states() must fill the eigenvectors");
    const int n_states = vv.n_states();
    const int dim_oracle = static_cast<int>(oracle.states.rows());

    // Express the doublet-labelled states in the oracle basis.  In exact mode
    // that is the linear-oscillator basis, reached through the first-order
    // state expansion; in first_order mode the bases coincide.
    Eigen::MatrixXd vv_in_oracle = Eigen::MatrixXd::Zero(dim_oracle, n_states);
    if (oracle.mode == QuarticMode::exact) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(oracle.n_trunc, vv.osc_levels);
        for (int j = 0; j < vv.osc_levels; ++j) {
            OscStateCoeffs c = osc_state_coeffs(j, vv.params);
            auto put = [&](int row, double v) {
                if (row >= 0 && row < oracle.n_trunc)
                    t(row, j) += v;
            };
            put(j, 1.0);
            put(j - 4, c.a_m4);
            put(j - 2, c.a_m2);
            put(j + 2, c.a_p2);
            put(j + 4, c.a_p4);
        }
        for (int j = 0; j < vv.osc_levels; ++j)
            for (int l = 0; l < oracle.n_trunc; ++l) {
                if (t(l, j) == 0.0)
                    continue;
                vv_in_oracle.row(2 * l) += t(l, j) * vv.states.row(2 * j);
                vv_in_oracle.row(2 * l + 1) += t(l, j) * vv.states.row(2 * j + 1);
            }
    } else {
        const int rows = std::min(dim_oracle, static_cast<int>(vv.states.rows()));
        vv_in_oracle.topRows(rows) = vv.states.topRows(rows);
    }

    Eigen::MatrixXd overlap = oracle.states.transpose() * vv_in_oracle;

    MatchedSpectrum m;
    m.oracle_index.assign(n_states, -1);
    m.energies.assign(n_states, 0.0);
    m.overlap2.assign(n_states, 0.0);
    std::vector<bool> taken(oracle.energies.size(), false);
    std::vector<double> sign(n_states, 1.0);

    for (int n = 0; n < n_states; ++n) {
        int best = -1;
        double best_o = -1.0, second_o = -1.0;
        for (int k = 0; k < overlap.rows(); ++k) {
            if (taken[k])
                continue;
            const double o = std::abs(overlap(k, n));
            if (o > best_o) {
                second_o = best_o;
                best_o = o;
                best = k;
            } else if (o > second_o) {
                second_o = o;
            }
        }
        if (best_o - second_o < 1e-6)
            throw Error(errc::degenerate_match_ambiguity,
                        "state " + std::to_string(n) + ": oracle overlaps " +
                            std::to_string(best_o) + " and " + std::to_string(second_o) +
                            " are indistinguishable");
        taken[best] = true;
        m.oracle_index[n] = best;
        m.energies[n] = oracle.energies[best];
        m.overlap2[n] = best_o * best_o;
        sign[n] = overlap(best, n) < 0.0 ? -1.0 : 1.0;
    }

    // Sign-align the oracle columns with the doublet-labelled states so the
    // position matrix is entry-wise comparable.
    m.position.resize(n_states, n_states);
    for (int n = 0; n < n_states; ++n)
        for (int k = 0; k < n_states; ++k)
            m.position(n, k) =
                sign[n] * sign[k] * oracle.position(m.oracle_index[n], m.oracle_index[k]);
    return m;
}

} // namespace qno

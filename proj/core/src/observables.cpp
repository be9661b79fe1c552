#include "qno/observables.hpp"

#include <cassert>
#include <cmath>

#include "qno/oscillator.hpp"

namespace qno {

LCoefficients l_coefficients(const SystemParams& sp) {
    assert(sp.validated);
    require_off_resonant_denominators(sp);

    const double e = sp.epsilon, d0 = sp.delta0, db = sp.delta_b;
    const double o = sp.omega, a = sp.alpha, g = sp.g;
    const double g2 = g * g;

    LCoefficients L;
    L.lo0 = g * e / (db * o);
    L.lo1 = g2 * d0 * d0 * (2.0 * db + 3.0 * o) / (2.0 * o * db * db * (o + db) * (o + db));
    L.lo0p = g * d0 / (db * (o + db));
    L.lo1p = 4.0 * g2 * e * d0 / (db * db * (db * db + 3.0 * o * db + 2.0 * o * o));
    L.lo1m = -4.0 * g2 * e * d0 / (db * db * o * (db - 2.0 * o));

    L.no = -1.5 * a / o;
    L.no0_a = 0.0;
    L.no0_b = -6.0 * a * g * e / (db * o * o);
    L.no0p = -3.0 * a * g * d0 * (db + 2.0 * o) / (db * o * (db + o) * (db + o));
    L.no2p = 0.75 * a * g * d0 * (db * db + 6.0 * db * o + 13.0 * o * o) /
             (o * (db + o) * (db + o) * (db * db + 3.0 * db * o));
    L.no2m = -3.0 * a * g * d0 / (db * (db - 3.0 * o) * (db + o));
    L.no2 = -4.0 * a * g * e / (db * o * o);

    // The Delta j = 1 families are linear in the level index; store value at
    // j = 0 and the slope.
    auto no1g = [&](double j) {
        return -6.0 * e * e * a * g2 / (db * db * o * o * o) -
               3.0 * a * g2 * d0 * d0 *
                   (14.0 * (j + 1.0) * db * db * db - o * o * db * (88.0 + 92.0 * j) -
                    (3.0 + 5.0 * j) * o * db * db - (89.0 * j + 87.0) * o * o * o) /
                   (4.0 * o * o * db * db * (o + db) * (o + db) * (o + db) * (db - 3.0 * o));
    };
    auto no1e = [&](double j) {
        return -6.0 * e * e * a * g2 / (db * db * o * o * o) -
               3.0 * a * g2 * d0 * d0 *
                   (-14.0 * (j + 1.0) * db * db * db + (5.0 * j + 7.0) * db * db * o +
                    o * o * db * (92.0 * j + 96.0) + o * o * o * (89.0 * j + 91.0)) /
                   (4.0 * db * db * o * o * (db - 3.0 * o) * (db + o) * (db + o) * (db + o));
    };
    L.no1g_a = no1g(0.0);
    L.no1g_b = no1g(1.0) - no1g(0.0);
    L.no1e_a = no1e(0.0);
    L.no1e_b = no1e(1.0) - no1e(0.0);

    L.no1p = -2.0 * a * g2 * d0 * e *
             (4.0 * std::pow(db, 4) + 29.0 * o * std::pow(db, 3) +
              51.0 * o * o * db * db - 80.0 * db * std::pow(o, 3) - 124.0 * std::pow(o, 4)) /
             (o * o * (db - 2.0 * o) *
              std::pow(db * db * db + 3.0 * db * db * o + 2.0 * db * o * o, 2));
    L.no1m = 6.0 * a * g2 * e * d0 *
             (9.0 * std::pow(db, 3) + db * db * o - 56.0 * o * o * db -
              36.0 * std::pow(db, 3)) /
             (o * o * (db * db + 3.0 * o * db + 2.0 * o * o) *
              std::pow(db * db - 2.0 * db * o, 2));
    L.no3 = a * g2 * d0 * d0 *
            (14.0 * std::pow(db, 3) + 25.0 * db * db * o - 130.0 * o * o * db -
             261.0 * std::pow(o, 3)) /
            (8.0 * db * db * o * o * (db + o) * (db + o) * (db * db - 9.0 * o * o));
    L.no3p = a * g2 * d0 * e *
             (std::pow(db, 3) + 3.0 * o * db * db + 74.0 * o * o * db +
              216.0 * std::pow(o, 3)) /
             (3.0 * db * db * o * (db + 2.0 * o) * (db + 2.0 * o) *
              (std::pow(db, 3) + 8.0 * db * db * o + 19.0 * o * o * db +
               12.0 * std::pow(o, 3)));
    L.no3m = -a * g2 * d0 * e *
             (24.0 * std::pow(db, 3) - 239.0 * o * db * db + 814.0 * o * o * db -
              936.0 * std::pow(o, 3)) /
             (3.0 * db * db * o * o * (db - 2.0 * o) * (db - 2.0 * o) *
              (db * db - 7.0 * db * o + 12.0 * o * o));
    return L;
}

namespace {

// Matrix of the dressed position operator over the product basis |j g/e>,
// assembled from the per-block amplitudes; exactly symmetric.
Eigen::MatrixXd dressed_position_product(const LCoefficients& L, int levels) {
    const int dim = 2 * levels;
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(dim, dim);
    auto ig = [](int j) { return basis::prod_index(j, false); };
    auto ie = [](int j) { return basis::prod_index(j, true); };
    auto set = [&](int a, int b, double v) {
        y(a, b) = v;
        y(b, a) = v;
    };

    for (int j = 0; j < levels; ++j) {
        const double within = 2.0 * (L.lo0 + L.no0(j));
        y(ig(j), ig(j)) = -within;
        y(ie(j), ie(j)) = +within;
        set(ig(j), ie(j), L.lo0p + L.no0p * (2.0 * j + 1.0));
    }
    for (int j = 0; j + 1 < levels; ++j) {
        const double s = std::sqrt(j + 1.0);
        set(ig(j), ig(j + 1), s * (1.0 + (j + 1.0) * L.no + L.lo1 + L.no1g(j)));
        set(ie(j), ie(j + 1), s * (1.0 + (j + 1.0) * L.no - L.lo1 + L.no1e(j)));
        set(ig(j), ie(j + 1), s * (L.lo1p + (j + 1.0) * L.no1p));
        set(ie(j), ig(j + 1), s * (L.lo1m + (j + 1.0) * L.no1m));
    }
    for (int j = 0; j + 2 < levels; ++j) {
        const double s = std::sqrt((j + 1.0) * (j + 2.0));
        set(ig(j), ig(j + 2), s * L.no2);
        set(ie(j), ie(j + 2), -s * L.no2);
        set(ig(j), ie(j + 2), s * L.no2p);
        set(ie(j), ig(j + 2), s * L.no2m);
    }
    for (int j = 0; j + 3 < levels; ++j) {
        const double s = std::sqrt((j + 1.0) * (j + 2.0) * (j + 3.0));
        // the g-independent part is the bare three-quantum amplitude
        // alpha/(4 omega) = -no/6
        set(ig(j), ig(j + 3), s * (L.no3 - L.no / 6.0));
        set(ie(j), ie(j + 3), s * (-L.no3 - L.no / 6.0));
        set(ig(j), ie(j + 3), s * L.no3p);
        set(ie(j), ig(j + 3), s * L.no3m);
    }
    return y;
}

} // namespace

Eigen::MatrixXd position_matrix(const SystemParams& p, int j_max) {
    assert(p.validated);
    assert(j_max >= 4);
    const LCoefficients L = l_coefficients(p);

    // Doublet j reaches oscillator level j+1.
    const int levels = j_max + 2;
    Eigen::MatrixXd y_prod = dressed_position_product(L, levels);

    const int n_states = basis::state_count(j_max);
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(2 * levels, n_states);
    rot(basis::prod_index(0, false), 0) = 1.0;
    for (int j = 0; j <= j_max; ++j) {
        const double eta = detuning_and_angle(j, p).second;
        const double c = std::cos(eta / 2.0), s = std::sin(eta / 2.0);
        rot(basis::prod_index(j + 1, false), basis::doublet_lower(j)) = c;
        rot(basis::prod_index(j, true), basis::doublet_lower(j)) = s;
        rot(basis::prod_index(j + 1, false), basis::doublet_upper(j)) = -s;
        rot(basis::prod_index(j, true), basis::doublet_upper(j)) = c;
    }

    Eigen::MatrixXd y = rot.transpose() * y_prod * rot;
    // Exact symmetry regardless of rounding in the two matrix products.
    y = ((y + y.transpose()) / 2.0).eval();
    return y;
}

Eigen::MatrixXd position_matrix(const SystemParams& p, int j_max, int dim) {
    Eigen::MatrixXd full = position_matrix(p, j_max);
    assert(dim <= full.rows());
    return full.topLeftCorner(dim, dim);
}

ComplexMatrix initial_density(const SystemParams& p, const EnergySpectrum& spec,
                              int dim, int j_cut) {
    assert(spec.states.size() > 0);
    assert(dim <= spec.n_states());
    assert(j_cut >= 0 && j_cut < spec.osc_levels);

    const double ch = std::cos(p.theta / 2.0);
    const double sh = std::sin(p.theta / 2.0);

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j <= j_cut; ++j) {
        const double w = std::exp(-p.beta * osc_energy(j, p));
        Eigen::VectorXd v(dim);
        for (int n = 0; n < dim; ++n)
            v(n) = ch * spec.states(basis::prod_index(j, false), n) +
                   sh * spec.states(basis::prod_index(j, true), n);
        rho += w * v * v.transpose();
    }
    rho /= rho.trace();
    return rho.cast<std::complex<double>>();
}

double WeightTable::population_difference(const ComplexMatrix& rho) const {
    const int dim = static_cast<int>(rho.rows());
    double p = 0.0;
    for (int n = 0; n < dim; ++n)
        p += diag(n) * rho(n, n).real();
    for (int n = 1; n < dim; ++n)
        for (int m = 0; m < n; ++m)
            p += offdiag(n, m) * rho(n, m).real();
    return p;
}

WeightTable weight_table(const SystemParams& p, const EnergySpectrum& spec, int dim) {
    assert(spec.states.size() > 0);
    assert(dim <= spec.n_states());

    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);

    WeightTable w;
    w.diag = Eigen::VectorXd::Zero(dim);
    w.offdiag = Eigen::MatrixXd::Zero(dim, dim);

    for (int n = 0; n < dim; ++n) {
        double acc = 0.0;
        for (int j = 0; j < spec.osc_levels; ++j) {
            const double jg = spec.states(basis::prod_index(j, false), n);
            const double je = spec.states(basis::prod_index(j, true), n);
            acc += ct * (jg * jg - je * je) + 2.0 * st * jg * je;
        }
        w.diag(n) = acc;
    }
    for (int n = 1; n < dim; ++n) {
        for (int m = 0; m < n; ++m) {
            double acc = 0.0;
            for (int j = 0; j < spec.osc_levels; ++j) {
                const double jg_n = spec.states(basis::prod_index(j, false), n);
                const double je_n = spec.states(basis::prod_index(j, true), n);
                const double jg_m = spec.states(basis::prod_index(j, false), m);
                const double je_m = spec.states(basis::prod_index(j, true), m);
                acc += ct * (jg_n * jg_m - je_n * je_m) + st * (je_n * jg_m + je_m * jg_n);
            }
            w.offdiag(n, m) = 2.0 * acc;
            w.offdiag(m, n) = 2.0 * acc;
        }
    }
    return w;
}

double p_infinity(const SystemParams& p, const EnergySpectrum& spec,
                  const WeightTable& w, int dim) {
    assert(dim <= spec.n_states());
    double z = 0.0;
    for (int n = 0; n < dim; ++n)
        z += std::exp(-p.beta * (spec.energies[n] - spec.energies[0]));
    double acc = 0.0;
    for (int n = 0; n < dim; ++n)
        acc += w.diag(n) * std::exp(-p.beta * (spec.energies[n] - spec.energies[0])) / z;
    return acc;
}

} // namespace qno

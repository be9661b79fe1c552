#include "qno/vanvleck.hpp"

#include <cassert>
#include <cmath>

#include "qno/oscillator.hpp"

namespace qno {

namespace {

// Shorthand bundle used by every closed form below.
struct P {
    double e, d0, db, o, a, g;
    explicit P(const SystemParams& p)
        : e(p.epsilon), d0(p.delta0), db(p.delta_b), o(p.omega), a(p.alpha), g(p.g) {}
};

} // namespace

double w_shift_w1(int j, const SystemParams& sp, double omega_eval) {
    P p(sp);
    const double o = omega_eval;
    return -p.g * p.g * p.e * p.e / (p.db * p.db * o) +
           6.0 * p.a * p.g * p.g * (2.0 * j + 1.0) * p.e * p.e / (p.db * p.db * o * o);
}

double w_shift_w0(int j, const SystemParams& sp, double omega_eval) {
    P p(sp);
    const double o = omega_eval;
    const double dj = j;
    return -p.g * p.g * p.d0 * p.d0 * dj / (p.db * p.db * (p.db + o)) *
           (1.0 - 3.0 * p.a * dj * (p.db + 2.0 * o) / (o * (p.db + o)));
}

std::pair<double, double> w_shifts(int j, const SystemParams& p) {
    return {w_shift_w0(j, p, p.omega), w_shift_w1(j, p, p.omega)};
}

double coupling_delta(int j, const SystemParams& p) {
    return -(p.g * p.delta0 / p.delta_b) * ladder_n1(j, p);
}

std::pair<double, double> detuning_and_angle(int j, const SystemParams& p) {
    const double det = p.delta_b - p.omega - 3.0 * p.alpha * (j + 1.0) +
                       w_shift_w1(j, p, p.omega) - w_shift_w1(j + 1, p, p.omega) -
                       w_shift_w0(j, p, p.omega) - w_shift_w0(j + 2, p, p.omega);
    const double eta = std::atan2(2.0 * std::abs(coupling_delta(j, p)), det);
    return {det, eta};
}

EffectiveBlock effective_block(int j, const SystemParams& p) {
    EffectiveBlock b;
    b.j = j;
    b.delta_of_j = coupling_delta(j, p);
    b.w1_j = w_shift_w1(j, p, p.omega);
    b.w1_j1 = w_shift_w1(j + 1, p, p.omega);
    b.w0_j = w_shift_w0(j, p, p.omega);
    b.w0_j2 = w_shift_w0(j + 2, p, p.omega);
    auto [det, eta] = detuning_and_angle(j, p);
    b.detuning = det;
    b.eta = eta;
    return b;
}

EnergySpectrum eigenenergies(const SystemParams& p, int j_max) {
    assert(p.validated);
    assert(j_max >= 0);
    EnergySpectrum s;
    s.params = p;
    s.j_max = j_max;
    s.energies.resize(basis::state_count(j_max));
    s.eta.resize(j_max + 1);

    s.energies[0] =
        -p.delta_b / 2.0 + w_shift_w1(0, p, p.omega) + w_shift_w0(1, p, p.omega);

    for (int j = 0; j <= j_max; ++j) {
        EffectiveBlock b = effective_block(j, p);
        s.eta[j] = b.eta;
        const double mean = (j + 0.5) * p.omega + 1.5 * p.alpha * (j + 1.0) * (j + 1.0) +
                            0.5 * (b.w1_j + b.w1_j1) - 0.5 * b.w0_j + 0.5 * b.w0_j2;
        const double gap =
            0.5 * std::sqrt(b.detuning * b.detuning + 4.0 * b.delta_of_j * b.delta_of_j);
        s.energies[basis::doublet_lower(j)] = mean - gap;
        s.energies[basis::doublet_upper(j)] = mean + gap;
    }
    return s;
}

double rabi_splitting(int j, const SystemParams& p) {
    return std::sqrt(j + 1.0) * p.g * (p.delta0 / p.delta_b) *
           (2.0 - 3.0 * p.alpha * (j + 1.0) / p.omega);
}

double bloch_siegert_resonance(int j, const SystemParams& p) {
    // W shifts evaluated at delta_b, plus the weak alpha*g^2 cross term.
    const double db = p.delta_b;
    return db - 3.0 * p.alpha * (j + 1.0) + w_shift_w1(j, p, db) -
           w_shift_w1(j + 1, p, db) - w_shift_w0(j, p, db) - w_shift_w0(j + 2, p, db) +
           1.5 * p.alpha * p.g * p.g * p.delta0 * p.delta0 * (j + 1.0) * (j + 1.0) /
               (db * db * db * db);
}

namespace {

// Fills iS1 and iS2 for product levels 0..levels-1.  Every listed element is
// real; anti-symmetry supplies the transposed entries.
VanVleckGenerator build_generator(const SystemParams& sp, int levels) {
    P p(sp);
    const int dim = 2 * levels;
    VanVleckGenerator gen;
    gen.osc_levels = levels;
    gen.s1 = Eigen::MatrixXd::Zero(dim, dim);
    gen.s2 = Eigen::MatrixXd::Zero(dim, dim);

    auto set = [](Eigen::MatrixXd& m, int a, int b, double v) {
        m(a, b) = v;
        m(b, a) = -v;
    };
    auto ig = [](int j) { return basis::prod_index(j, false); };
    auto ie = [](int j) { return basis::prod_index(j, true); };

    const double o = p.o, db = p.db, d0 = p.d0, e = p.e, a = p.a, g = p.g;

    for (int j = 0; j + 1 < levels; ++j) {
        const double s = std::sqrt(j + 1.0);
        const double bias = g * e * s / (db * o) * (1.0 - 4.5 * a * (j + 1.0) / o);
        set(gen.s1, ie(j), ie(j + 1), bias);
        set(gen.s1, ig(j), ig(j + 1), -bias);
        set(gen.s1, ig(j), ie(j + 1),
            g * d0 * s / (db * (db + o)) *
                (1.0 - 3.0 * a * (j + 1.0) * (db + 3.0 * o) / (2.0 * o * (db + o))));
    }
    for (int j = 0; j + 3 < levels; ++j) {
        const double n3 = ladder_n3(j + 3, sp);
        set(gen.s1, ie(j), ie(j + 3), (g * e / db) * n3 / (3.0 * o));
        set(gen.s1, ig(j), ig(j + 3), -(g * e / db) * n3 / (3.0 * o));
        set(gen.s1, ig(j), ie(j + 3), (g * d0 / db) * n3 / (db + 3.0 * o));
        set(gen.s1, ie(j), ig(j + 3), (g * d0 / db) * n3 / (3.0 * o - db));
    }

    const double g2 = g * g;
    for (int j = 0; j < levels; ++j) {
        // Delta j = 0 qubit flip
        set(gen.s2, ig(j), ie(j),
            g2 * d0 * e / (db * db * o * (db + o)) *
                (-(2.0 * j + 1.0) / 2.0 +
                 3.0 * a * (2.0 * j * j + 2.0 * j + 1.0) * (2.0 * db + 3.0 * o) /
                     (2.0 * o * (db + o))));
    }
    for (int j = 0; j + 2 < levels; ++j) {
        const double r = std::sqrt((j + 1.0) * (j + 2.0));
        const double tj = 2.0 * j + 3.0;

        set(gen.s2, ie(j), ig(j + 2),
            2.0 * g2 * e * d0 * r / (db * db * o * (2.0 * o - db)) *
                    (1.0 + 3.0 * a * tj * (db - 3.0 * o) / (o * (2.0 * o - db))) +
                g2 * tj * r * a * d0 * e * (db - 5.0 * o) /
                    (12.0 * o * o *
                     (db * db * db * db - 4.0 * o * db * db * db + o * o * db * db +
                      6.0 * o * o * o * db)));

        set(gen.s2, ig(j), ig(j + 2),
            g2 * r / (2.0 * db * db * o) *
                    (3.0 * a * e * e / (2.0 * o * o) +
                     d0 * d0 / (db + o) *
                         (1.0 - 3.0 * a * (tj * db + o * (3.0 * j + 4.0)) /
                                    ((db + o) * o))) +
                g2 * r * a / (8.0 * db * db * o * o) *
                    (2.0 * e * e / o +
                     (tj * db * db + 3.0 * (j - 1.0) * o * db - 3.0 * (j + 6.0) * o * o) *
                         d0 * d0 /
                         ((db - 3.0 * o) * (db * db + 4.0 * o * db + 3.0 * o * o))));

        set(gen.s2, ie(j), ie(j + 2),
            g2 * r / (2.0 * db * db * o) *
                    (-d0 * d0 / (o + db) *
                         (1.0 - 3.0 * a * (db * tj + o * (3.0 * j + 5.0)) /
                                    ((db + o) * o)) +
                     3.0 * a * e * e / (o * o)) +
                g2 * a * r / (8.0 * db * db * o * o) *
                    (-(tj * db * db + 3.0 * (j + 4.0) * db * o - 3.0 * (j - 3.0) * o * o) *
                         d0 * d0 /
                         (db * db * db + db * db * o - 9.0 * o * o * db - 9.0 * o * o * o) +
                     2.0 * e * e / o));

        set(gen.s2, ig(j), ie(j + 2),
            g2 * e * d0 * r / (2.0 * db * db * (2.0 * o + db)) *
                    (-2.0 * db / (o * (o + db)) +
                     3.0 * a * db * tj * (2.0 * db * db + 9.0 * db * o + 8.0 * o * o) /
                         (o * o * (o + db) * (o + db) * (2.0 * o + db))) +
                g2 * tj * r * a * d0 * e * (db + 6.0 * o) /
                    (24.0 * db * db * o * o * (db * db + 5.0 * o * db + 6.0 * o * o)));
    }
    for (int j = 0; j + 4 < levels; ++j) {
        const double r4 =
            std::sqrt((j + 1.0) * (j + 2.0) * (j + 3.0) * (j + 4.0));
        const double v44 =
            g2 * r4 * a * d0 * d0 * (db * db - 3.0 * o * o) /
            (8.0 * db * db * o * o *
             (db * db * db + o * db * db - 9.0 * o * o * db - 9.0 * o * o * o));
        set(gen.s2, ig(j), ig(j + 4), v44);
        set(gen.s2, ie(j), ie(j + 4), -v44);
        set(gen.s2, ig(j), ie(j + 4),
            -g2 * r4 * a * d0 * e * (2.0 * db + 5.0 * o) /
                (6.0 * o * o *
                 (db * db * db * db + 8.0 * o * db * db * db + 19.0 * o * o * db * db +
                  12.0 * o * o * o * db)));
        set(gen.s2, ie(j), ig(j + 4),
            -g2 * r4 * a * d0 * e * (5.0 * db - 12.0 * o) /
                (12.0 * db * db * o * o * (db * db - 7.0 * o * db + 12.0 * o * o)));
    }
    return gen;
}

} // namespace

VanVleckGenerator generator_elements(const SystemParams& p, int j_max) {
    assert(p.validated);
    return build_generator(p, j_max + 1);
}

EnergySpectrum vanvleck_states(const SystemParams& p, int j_max) {
    assert(j_max >= 1);
    EnergySpectrum s = eigenenergies(p, j_max);

    // Headroom: the generator moves the oscillator index by at most 4 and the
    // doublets reach level j_max + 1.
    const int levels = j_max + 6;
    const int dim = 2 * levels;
    VanVleckGenerator gen = build_generator(p, levels);

    Eigen::MatrixXd u = Eigen::MatrixXd::Identity(dim, dim) - gen.s1 - gen.s2 +
                        0.5 * gen.s1 * gen.s1;

    const int n_states = basis::state_count(j_max);
    Eigen::MatrixXd eff = Eigen::MatrixXd::Zero(dim, n_states);
    eff(basis::prod_index(0, false), 0) = 1.0;
    for (int j = 0; j <= j_max; ++j) {
        const double c = std::cos(s.eta[j] / 2.0);
        const double sn = std::sin(s.eta[j] / 2.0);
        eff(basis::prod_index(j + 1, false), basis::doublet_lower(j)) = c;
        eff(basis::prod_index(j, true), basis::doublet_lower(j)) = sn;
        eff(basis::prod_index(j + 1, false), basis::doublet_upper(j)) = -sn;
        eff(basis::prod_index(j, true), basis::doublet_upper(j)) = c;
    }

    Eigen::MatrixXd states = u * eff;
    for (int n = 0; n < n_states; ++n) {
        const double top = states.col(n).tail(4).squaredNorm();
        const double norm2 = states.col(n).squaredNorm();
        if (top / norm2 > 1e-3)
            throw Error(errc::truncation_leak,
                        "eigenstate " + std::to_string(n) +
                            " leaks onto the highest retained oscillator levels; "
                            "increase j_max");
        states.col(n) /= std::sqrt(norm2);
    }

    s.states = std::move(states);
    s.osc_levels = levels;
    return s;
}

std::vector<TransitionFrequency> transition_frequencies(const EnergySpectrum& spec) {
    std::vector<TransitionFrequency> out;
    const int n_states = spec.n_states();
    out.reserve(n_states * (n_states - 1) / 2);
    for (int n = 1; n < n_states; ++n)
        for (int m = 0; m < n; ++m)
            out.push_back({n, m, spec.energies[n] - spec.energies[m]});
    return out;
}

std::array<double, 6> resonant_transition_expansion(const SystemParams& p) {
    const double o = p.omega, g = p.g, a = p.alpha;
    const double s2 = std::sqrt(2.0);
    const double ag = a * g / o;
    const double ag2 = a * g * g / (o * o);
    return {
        o - g + 1.5 * a + 2.25 * ag + 2.25 * ag2,                  // omega_10
        o + g + 1.5 * a - 2.25 * ag + 2.25 * ag2,                  // omega_20
        o + g * (1.0 - s2) + 4.5 * a + 2.25 * ag * (2.0 * s2 - 1.0) + 4.5 * ag2, // omega_31
        o + g * (1.0 + s2) + 4.5 * a - 2.25 * ag * (2.0 * s2 + 1.0) + 4.5 * ag2, // omega_41
        o - g * (1.0 + s2) + 4.5 * a + 2.25 * ag * (2.0 * s2 + 1.0) + 4.5 * ag2, // omega_32
        o - g * (1.0 - s2) + 4.5 * a - 2.25 * ag * (2.0 * s2 - 1.0) + 4.5 * ag2, // omega_42
    };
}

} // namespace qno

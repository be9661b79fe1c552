#include <doctest.h>

#include <cmath>

#include "qno/oscillator.hpp"
#include "test_common.hpp"

using namespace qno;

TEST_CASE("validate_params: derived quantities and failure modes") {
    SystemParams p;
    p.epsilon = 0.0;
    p.delta0 = 1.0;
    p.omega = 1.0;
    p.beta = 10.0;
    auto v = validate_params(p);
    CHECK(v.theta == doctest::Approx(-M_PI / 2).epsilon(1e-14));
    CHECK(v.delta_b == doctest::Approx(1.0));

    p.epsilon = 0.5;
    v = validate_params(p);
    CHECK(v.delta_b == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
    CHECK(v.delta_b == doctest::Approx(1.118).epsilon(1e-3));
    CHECK(std::tan(v.theta) == doctest::Approx(-p.delta0 / p.epsilon).epsilon(1e-12));

    // negative bias lands in (0, pi/2)
    p.epsilon = -0.5;
    v = validate_params(p);
    CHECK(v.theta > 0.0);
    CHECK(v.theta < M_PI / 2);
    CHECK(std::tan(v.theta) == doctest::Approx(-p.delta0 / p.epsilon).epsilon(1e-12));

    SystemParams bad = p;
    bad.omega = 0.0;
    CHECK_THROWS_AS(validate_params(bad), Error);
    bad = p;
    bad.alpha = -0.01;
    CHECK_THROWS_AS(validate_params(bad), Error);
    bad = p;
    bad.kappa = -1.0;
    CHECK_THROWS_AS(validate_params(bad), Error);
    bad = p;
    bad.beta = 0.0;
    CHECK_THROWS_AS(validate_params(bad), Error);
}

TEST_CASE("validate_params: perturbative-regime warnings") {
    SystemParams p = qt::resonant_nonlinear();
    std::vector<std::string> w;
    validate_params(p, &w);
    CHECK(w.empty());

    p.alpha = 0.06;
    validate_params(p, &w);
    CHECK(w.size() == 1);
    p.g = 0.4;
    w.clear();
    validate_params(p, &w);
    CHECK(w.size() == 2);
}

TEST_CASE("osc_energy: first-order levels") {
    SystemParams p = qt::resonant_nonlinear();
    CHECK(osc_energy(0, p) == 0.0);
    CHECK(osc_energy(1, p) == doctest::Approx(1.06).epsilon(1e-14));
    SystemParams lin = p;
    lin.alpha = 0.0;
    lin = validate_params(lin);
    CHECK(osc_energy(2, lin) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("osc_state_coeffs: boundary and magnitude") {
    SystemParams p = qt::resonant_nonlinear();
    auto c0 = osc_state_coeffs(0, p);
    CHECK(c0.a_m2 == 0.0);
    CHECK(c0.a_m4 == 0.0);
    CHECK(c0.a_p2 == doctest::Approx(-1.5 * std::sqrt(2.0) * 0.02 / 2.0).epsilon(1e-14));
    CHECK(c0.a_p2 == doctest::Approx(-0.021213).epsilon(1e-4));

    SystemParams lin = p;
    lin.alpha = 0.0;
    lin = validate_params(lin);
    for (int j = 0; j < 8; ++j) {
        auto c = osc_state_coeffs(j, lin);
        CHECK(c.a_m4 == 0.0);
        CHECK(c.a_m2 == 0.0);
        CHECK(c.a_p2 == 0.0);
        CHECK(c.a_p4 == 0.0);
    }
}

namespace {

// <j|k> assembled from the admixture coefficients.
double perturbed_overlap(int j, int k, const SystemParams& p) {
    auto cj = osc_state_coeffs(j, p);
    auto ck = osc_state_coeffs(k, p);
    const int lj[5] = {j - 4, j - 2, j, j + 2, j + 4};
    const double aj[5] = {cj.a_m4, cj.a_m2, 1.0, cj.a_p2, cj.a_p4};
    const int lk[5] = {k - 4, k - 2, k, k + 2, k + 4};
    const double ak[5] = {ck.a_m4, ck.a_m2, 1.0, ck.a_p2, ck.a_p4};
    double dot = 0.0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (lj[a] >= 0 && lk[b] >= 0 && lj[a] == lk[b])
                dot += aj[a] * ak[b];
    return dot;
}

} // namespace

TEST_CASE("perturbed states stay orthonormal to first order") {
    SystemParams p = qt::resonant_nonlinear();
    const double x = p.alpha / p.omega;

    // The O(alpha) parts cancel identically, so the residual scales as
    // (alpha/Omega)^2 across all levels: quartering under alpha -> alpha/2.
    SystemParams ph = p;
    ph.alpha = p.alpha / 2.0;
    ph = validate_params(ph);
    for (int j = 0; j <= 10; ++j)
        for (int k = j; k <= 10; ++k) {
            const double expect = j == k ? 1.0 : 0.0;
            const double r1 = perturbed_overlap(j, k, p) - expect;
            const double r2 = perturbed_overlap(j, k, ph) - expect;
            if (std::abs(r1) > 1e-14)
                CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(1e-9));
        }

    // On the levels the truncated theory actually populates the residual
    // coefficient stays below 10.
    for (int j = 0; j <= 1; ++j)
        for (int k = j; k <= 1; ++k) {
            const double expect = j == k ? 1.0 : 0.0;
            CHECK(std::abs(perturbed_overlap(j, k, p) - expect) <= 10.0 * x * x);
        }
}

TEST_CASE("perturbation_error reproduces the tabulated estimates") {
    // (level, order, alpha, printed value); printed precision is 2 percent.
    struct Row {
        int j, order;
        double alpha, printed;
    };
    const Row rows[] = {
        {1, 1, 1e-3, 3e-3},     {1, 2, 1e-3, 2.06e-5},  {2, 1, 1e-3, 4.5e-3},
        {2, 2, 1e-3, 3.84e-5},  {3, 1, 1e-3, 6e-3},     {3, 2, 1e-3, 6.56e-5},
        {4, 1, 1e-3, 7.5e-3},   {4, 2, 1e-3, 1.02e-4},  {5, 1, 1e-3, 9e-3},
        {5, 2, 1e-3, 1.46e-4},  {1, 1, 0.01, 0.03},     {1, 2, 0.01, 2.06e-3},
        {2, 1, 0.01, 0.045},    {2, 2, 0.01, 3.8e-3},   {3, 1, 0.01, 0.06},
        {3, 2, 0.01, 6.56e-3},  {4, 1, 0.01, 0.075},    {4, 2, 0.01, 1.02e-2},
        {5, 1, 0.01, 9e-2},     {5, 2, 0.01, 1.46e-2},  {1, 1, 0.02, 0.06},
        {1, 2, 0.02, 8.25e-3},  {2, 1, 0.02, 0.09},     {2, 2, 0.02, 0.015},
        {3, 1, 0.02, 0.12},     {3, 2, 0.02, 0.026},    {4, 1, 0.02, 0.15},
        {4, 2, 0.02, 0.041},    {5, 1, 0.02, 0.18},     {5, 2, 0.02, 0.058},
    };
    SystemParams p = qt::resonant_nonlinear();
    for (const Row& r : rows) {
        p.alpha = r.alpha;
        auto v = validate_params(p);
        CAPTURE(r.j);
        CAPTURE(r.order);
        CAPTURE(r.alpha);
        CHECK(perturbation_error(r.j, r.order, v) ==
              doctest::Approx(r.printed).epsilon(0.02));
    }
    CHECK_THROWS_AS(perturbation_error(0, 1, p), Error);
}

TEST_CASE("ladder_element: selection rules and values") {
    SystemParams p = qt::resonant_nonlinear();
    CHECK(ladder_element(1, 0, p) == doctest::Approx(0.97).epsilon(1e-12));
    CHECK(ladder_element(3, 0, p) ==
          doctest::Approx(0.02 / 4.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(ladder_element(3, 0, p) == doctest::Approx(0.012247).epsilon(1e-4));
    CHECK(ladder_element(5, 0, p) == 0.0);   // the Delta j = 5 amplitudes cancel
    CHECK(ladder_element(2, 2, p) == 0.0);   // parity
    CHECK(ladder_element(4, 2, p) == 0.0);

    // real symmetric operator
    for (int l = 0; l <= 10; ++l)
        for (int m = 0; m <= 10; ++m)
            CHECK(ladder_element(l, m, p) == ladder_element(m, l, p));

    // linear limit
    SystemParams lin = p;
    lin.alpha = 0.0;
    lin = validate_params(lin);
    for (int l = 0; l < 10; ++l) {
        CHECK(ladder_element(l + 1, l, lin) ==
              doctest::Approx(std::sqrt(l + 1.0)).epsilon(1e-14));
        CHECK(ladder_element(l + 3, l, lin) == 0.0);
    }
}

TEST_CASE("thermal_weights: Boltzmann ratios and normalization") {
    SystemParams p = qt::resonant_nonlinear();

    auto w = thermal_weights(p, 5);
    double sum = 0.0;
    for (double x : w)
        sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w[1] / w[0] == doctest::Approx(std::exp(-10.6)).epsilon(1e-12));

    SystemParams lin = p;
    lin.alpha = 0.0;
    lin = validate_params(lin);
    auto wl = thermal_weights(lin, 5);
    CHECK(wl[1] / wl[0] == doctest::Approx(std::exp(-10.0)).epsilon(1e-12));

    SystemParams cold = p;
    cold.beta = 1e6;
    cold = validate_params(cold);
    auto wc = thermal_weights(cold, 5);
    CHECK(wc[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wc[1] < 1e-300);
}

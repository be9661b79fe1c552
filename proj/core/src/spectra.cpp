#include "qno/spectra.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "qno/errors.hpp"
#include "qno/redfield.hpp"

namespace qno {

std::vector<double> linspace(double lo, double hi, int n) {
    assert(n >= 1);
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        v[i] = lo + step * i;
    v[n - 1] = hi;
    return v;
}

SpectrumSeries fourier_numeric(const TimeSeries& series,
                               const std::vector<double>& omega_grid, double window_t,
                               double eta, double min_peak_spacing) {
    assert(series.dt > 0.0);
    if (min_peak_spacing > 0.0 &&
        window_t < 20.0 * (2.0 * M_PI / min_peak_spacing))
        throw Error(errc::window_too_short,
                    "window " + std::to_string(window_t) +
                        " shorter than 20 periods of the finest expected splitting");
    const int n_avail = series.size();
    int n = static_cast<int>(std::floor(window_t / series.dt)) + 1;
    if (n > n_avail)
        n = n_avail;
    if (n < 2)
        throw Error(errc::window_too_short, "series does not cover the window");

    // Damped samples with trapezoidal weights.
    std::vector<double> damped(n);
    for (int i = 0; i < n; ++i) {
        const double t = series.t(i);
        damped[i] = series.values[i] * (eta > 0.0 ? std::exp(-eta * t) : 1.0);
    }

    SpectrumSeries out;
    out.omega = omega_grid;
    out.window_eta = eta;
    out.provenance = series.provenance;
    out.values.resize(omega_grid.size());
    for (std::size_t w = 0; w < omega_grid.size(); ++w) {
        const double om = omega_grid[w];
        double acc = 0.5 * damped[0];  // t = 0, cos = 1
        for (int i = 1; i + 1 < n; ++i)
            acc += damped[i] * std::cos(om * series.t(i));
        acc += 0.5 * damped[n - 1] * std::cos(om * series.t(n - 1));
        out.values[w] = 2.0 * acc * series.dt;
    }
    return out;
}

std::vector<Peak> find_peaks(const SpectrumSeries& spec, double min_prominence) {
    const auto& f = spec.values;
    const auto& om = spec.omega;
    const int n = static_cast<int>(f.size());
    std::vector<Peak> peaks;

    for (int i = 1; i + 1 < n; ++i) {
        if (!(f[i] > f[i - 1] && f[i] >= f[i + 1]))
            continue;

        // Topographic prominence: lowest point separating this maximum from
        // higher terrain on each side (or the series edge).
        double left_min = f[i];
        for (int l = i - 1; l >= 0; --l) {
            left_min = std::min(left_min, f[l]);
            if (f[l] > f[i])
                break;
        }
        double right_min = f[i];
        for (int r = i + 1; r < n; ++r) {
            right_min = std::min(right_min, f[r]);
            if (f[r] > f[i])
                break;
        }
        const double prominence = f[i] - std::max(left_min, right_min);
        if (prominence < min_prominence)
            continue;

        Peak p;
        // Parabolic sub-grid refinement through the three top samples.
        const double denom = f[i - 1] - 2.0 * f[i] + f[i + 1];
        double shift = 0.0;
        if (denom != 0.0)
            shift = 0.5 * (f[i - 1] - f[i + 1]) / denom;
        shift = std::clamp(shift, -0.5, 0.5);
        const double step = i + 1 < n ? om[i + 1] - om[i] : om[i] - om[i - 1];
        p.omega = om[i] + shift * step;
        p.height = f[i] - 0.25 * (f[i - 1] - f[i + 1]) * shift;

        // Full width at half prominence.
        const double half = f[i] - prominence / 2.0;
        double left_x = om[0];
        for (int l = i; l >= 1; --l) {
            if (f[l - 1] <= half) {
                const double frac = (f[l] - half) / (f[l] - f[l - 1]);
                left_x = om[l] + frac * (om[l - 1] - om[l]);
                break;
            }
            left_x = om[l - 1];
        }
        double right_x = om[n - 1];
        for (int r = i; r + 1 < n; ++r) {
            if (f[r + 1] <= half) {
                const double frac = (f[r] - half) / (f[r] - f[r + 1]);
                right_x = om[r] + frac * (om[r + 1] - om[r]);
                break;
            }
            right_x = om[r + 1];
        }
        p.width = right_x - left_x;
        peaks.push_back(p);
    }
    return peaks;
}

} // namespace qno

// spectra.hpp — One-sided cosine transform and peak detection

#pragma once

#include <string>
#include <vector>

namespace qno {

struct TimeSeries;  // redfield.hpp

struct SpectrumSeries {
    std::vector<double> omega;   // ascending grid
    std::vector<double> values;  // F(omega)
    double delta_weight = 0.0;   // weight of a delta(omega) term, kept separate
    double window_eta = 0.0;     // exponential window applied (0 = none)
    std::string provenance;
};

// F(omega) = 2 * integral_0^T cos(omega t) P(t) dt via trapezoidal weights.
// For undamped series an exponential window exp(-eta t) is applied and
// recorded in the result.  min_peak_spacing (when > 0) enables the
// window-length check: window_t must cover 20 periods of the finest expected
// splitting or errc::window_too_short is thrown.
SpectrumSeries fourier_numeric(const TimeSeries& series,
                               const std::vector<double>& omega_grid,
                               double window_t, double eta = 0.0,
                               double min_peak_spacing = 0.0);

struct Peak {
    double omega = 0.0;   // parabolically refined center
    double height = 0.0;
    double width = 0.0;   // full width at half prominence
};

// Local maxima with topographic prominence above min_prominence.
std::vector<Peak> find_peaks(const SpectrumSeries& spec, double min_prominence);

std::vector<double> linspace(double lo, double hi, int n);

} // namespace qno

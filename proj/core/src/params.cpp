#include "qno/params.hpp"

#include <cmath>
#include <sstream>

namespace qno {

SystemParams validate_params(const SystemParams& raw, std::vector<std::string>* warnings) {
    if (!(raw.omega > 0.0))
        throw Error(errc::non_positive_frequency, "omega must be positive");
    if (!(raw.beta > 0.0))
        throw Error(errc::non_positive_frequency, "beta must be positive");
    if (!(raw.delta0 > 0.0))
        throw Error(errc::non_positive_frequency, "delta0 must be positive");
    if (raw.alpha < 0.0)
        throw Error(errc::negative_nonlinearity, "alpha must be >= 0 (hard nonlinearity)");
    if (raw.kappa < 0.0)
        throw Error(errc::negative_damping, "kappa must be >= 0");

    SystemParams p = raw;
    p.delta_b = std::hypot(p.epsilon, p.delta0);

    // tan(theta) = -delta0/epsilon with theta in [-pi/2, pi/2); epsilon = 0
    // maps to -pi/2.
    double theta = std::atan2(-p.delta0, p.epsilon);
    if (theta < -M_PI / 2.0)
        theta += M_PI;
    p.theta = theta;
    p.validated = true;

    if (warnings) {
        auto warn = [&](const std::string& s) { warnings->push_back(s); };
        if (p.alpha / p.omega > 0.05) {
            std::ostringstream os;
            os << "alpha/omega = " << p.alpha / p.omega
               << " exceeds 0.05; first-order oscillator levels degrade";
            warn(os.str());
        }
        if (p.g / p.omega > 0.3) {
            std::ostringstream os;
            os << "g/omega = " << p.g / p.omega
               << " exceeds 0.3; second-order coupling truncation degrades";
            warn(os.str());
        }
    }
    return p;
}

void require_off_resonant_denominators(const SystemParams& p, double tol) {
    const double lim = tol * p.omega;
    if (std::abs(p.delta_b - 2.0 * p.omega) < lim)
        throw Error(errc::resonant_denominator,
                    "delta_b == 2*omega: closed-form coefficients are singular here");
    if (std::abs(p.delta_b - 3.0 * p.omega) < lim)
        throw Error(errc::resonant_denominator,
                    "delta_b == 3*omega: closed-form coefficients are singular here");
}

} // namespace qno

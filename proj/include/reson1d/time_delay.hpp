#ifndef RESON1D_TIME_DELAY_HPP
#define RESON1D_TIME_DELAY_HPP

#include <functional>
#include <vector>

#include "reson1d/core.hpp"
#include "reson1d/models.hpp"

namespace reson1d {

// One sample of the reflection amplitude r(E) = R(E) e^{i theta(E)} together
// with the Wigner delay tau = hbar d(theta)/dE.
struct PhasePoint {
    double E;
    Complex r;
    double R;
    double theta;  // unwrapped along the containing profile
    double tau;
};

struct DelayPeak {
    double epsilon;  // refined peak position
    double height;
};

struct TimeDelayProfile {
    ModelSpec model;
    std::vector<PhasePoint> points;  // strictly increasing in E
    std::vector<DelayPeak> peaks;
};

// tau(E) for an arbitrary amplitude, from the logarithmic derivative
// Im[(dr/dE)/r] with a central difference of relative step 1e-6; equal to
// d(theta)/dE without any phase unwrapping.
double wigner_delay_amplitude(const std::function<Complex(double)>& r, double E);

// tau(E) of a model's closed-form reflection amplitude.
double wigner_delay(const ModelSpec& spec, double E);

// Uniform grid of n_points >= 16 samples on [e_min, e_max]; phases are
// unwrapped sequentially and peaks located as interior 3-point local maxima
// refined by parabolic interpolation on (E, tau).
TimeDelayProfile delay_profile(const ModelSpec& spec, double e_min, double e_max, int n_points);

// Reference single-resonance delay curve (hbar = 1):
//   tau(E) = (gamma0/2) / ((E - E0)^2 + gamma0^2/4),  peak 2/gamma0 at E0.
double breit_wigner_delay(double E, double E0, double gamma0);

}  // namespace reson1d

#endif

#ifndef RESON1D_GAMOW_HPP
#define RESON1D_GAMOW_HPP

#include <vector>

#include "reson1d/core.hpp"
#include "reson1d/models.hpp"
#include "reson1d/pole_finder.hpp"

namespace reson1d {

// Spatial profile of a resonant eigenstate at a complex pole, with the
// catastrophe parameters alpha = Re k, beta = -Im k (envelope grows like
// e^{-beta x} toward x -> -inf while the state decays in time).
struct GamowProfile {
    ModelSpec model;
    Resonance pole;
    std::vector<double> x;
    std::vector<Complex> psi;      // |psi| = 1 at the leftmost node
    std::vector<double> abs_psi;
    double alpha;
    double beta;
};

// Exact piecewise eigenstate at complex momentum k with the incident
// coefficient set to zero (outgoing normalization B = 1).  `side` selects
// the one-sided derivative at a junction: -1 left, +1 right, 0 either
// (smooth point).  No pole-residual validation here; gamow_wavefunction
// performs it.
Complex gamow_value(const ModelSpec& spec, Complex k, double x);
Complex gamow_derivative(const ModelSpec& spec, Complex k, double x, int side = 0);

// Samples the eigenstate on n >= 3 uniform nodes of [x_min, x_max] and
// normalizes to unit modulus at the leftmost node.  Throws PoleMismatchError
// when |D(k)| is not small compared to |D(k + 0.1)|.
GamowProfile gamow_wavefunction(const ModelSpec& spec, const Resonance& pole, double x_min,
                                double x_max, int n);

// Exponential decay law of a resonance (hbar = 1): survival e^{-Gamma t}.
struct DecayLaw {
    double gamma;
    double mean_lifetime;
    explicit DecayLaw(double gamma_n);
    static DecayLaw of(const Resonance& pole);
};

double survival_probability(const DecayLaw& law, double t);

}  // namespace reson1d

#endif

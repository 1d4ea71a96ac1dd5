#ifndef RESON1D_ODE_ORACLE_HPP
#define RESON1D_ODE_ORACLE_HPP

#include <limits>
#include <utility>
#include <vector>

#include "reson1d/core.hpp"
#include "reson1d/models.hpp"

namespace reson1d {

// Controls for the direct-integration reflection computation.  x_left and
// x_right default to NaN, meaning "derive from flat_tol / depth_factor".
struct IntegrationConfig {
    double x_left = std::numeric_limits<double>::quiet_NaN();
    double x_right = std::numeric_limits<double>::quiet_NaN();
    double step = 1e-3;
    double flat_tol = 1e-12;      // require V(x_left)  <  flat_tol * E
    double depth_factor = 1e3;    // require V(x_right) >  depth_factor * E
};

struct SolutionTrace {
    struct Sample {
        double x;
        Complex psi;
        Complex dpsi;
    };
    std::vector<Sample> samples;
    int renormalizations = 0;
};

// Decaying WKB seed deep inside the forbidden region:
//   psi  = q^{-1/2},  psi' = -q psi,   q = sqrt(V - E).
// Overall scale is arbitrary (r = B/A is scale invariant).
std::pair<Complex, Complex> wkb_start(const ModelSpec& spec, double E, double x_right,
                                      double depth_factor = 1e3);

// Brute-force reflection amplitude: integrate psi'' = (V - E) psi leftward
// from the forbidden region with fixed-step RK4 (stable direction: the
// physical solution grows, contamination decays), then decompose into plane
// waves at x_left.  Two-piece potentials are integrated in two legs meeting
// exactly at x = 0 so each leg sees a smooth potential.
//
// Real E only; DeltaWall is rejected (no pointwise potential).
Complex oracle_reflection(const ModelSpec& spec, double E, IntegrationConfig cfg = {},
                          SolutionTrace* trace = nullptr);

// The matching points actually used for a given (spec, E, cfg).
std::pair<double, double> oracle_bounds(const ModelSpec& spec, double E,
                                        const IntegrationConfig& cfg = {});

}  // namespace reson1d

#endif

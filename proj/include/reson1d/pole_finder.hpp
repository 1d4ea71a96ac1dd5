#ifndef RESON1D_POLE_FINDER_HPP
#define RESON1D_POLE_FINDER_HPP

#include <string>
#include <vector>

#include "reson1d/core.hpp"
#include "reson1d/models.hpp"

namespace reson1d {

// One Gamow pole.  energy = k_pole^2 = E_n - i Gamma_n/2 with Gamma_n > 0;
// lifetime = hbar / Gamma_n.
struct Resonance {
    int n = -1;  // 0-based, ordered by increasing E_n within a search result
    Complex k_pole;
    Complex energy;
    double E_n;
    double half_width;  // Gamma_n / 2
    double lifetime;
    int iterations = 0;
};

struct SearchConfig {
    double e_min = 1.0;
    double e_max = 20.0;
    double seed_gamma = 1.0;  // initial guess for Gamma/2 below the peak
    double tol = 1e-12;       // residual tolerance, relative to |D(k + 0.1)|
    int max_iter = 100;
    int max_poles = 64;
    int profile_points = 2000;  // seeding grid resolution
};

// Per-seed outcome of a search, kept for reporting.
struct SeedOutcome {
    double epsilon;  // time-delay peak the seed came from
    bool converged;
    Complex k_result;  // valid when converged
    std::string message;
};

struct PoleSearch {
    std::vector<Resonance> poles;
    std::vector<double> epsilons;  // peak position paired with each pole (NaN if none)
    std::vector<SeedOutcome> seeds;
};

// Newton iteration on D(k) from k_seed, with a central finite-difference
// derivative of relative step 1e-7.  Throws NonConvergenceError after
// cfg.max_iter or on a failed residual check, WrongHalfPlaneError if the
// iterate lands at Im k >= 0 or at non-physical energy.
Resonance refine_pole(const ModelSpec& spec, Complex k_seed, const SearchConfig& cfg = {});

// Seeds at (epsilon_n - i seed_gamma) in energy from the time-delay peaks of
// [e_min, e_max], refines each, deduplicates (|dk| < 1e-6) and sorts by E_n.
// Failed seeds are recorded, not fatal.
PoleSearch find_poles_detailed(const ModelSpec& spec, const SearchConfig& cfg = {});
std::vector<Resonance> find_poles(const ModelSpec& spec, const SearchConfig& cfg = {});

}  // namespace reson1d

#endif

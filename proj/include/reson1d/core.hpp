#ifndef RESON1D_CORE_HPP
#define RESON1D_CORE_HPP

#include <cmath>
#include <complex>

#include "reson1d/errors.hpp"

namespace reson1d {

using Complex = std::complex<double>;

// Natural units used throughout: 2m = 1 and hbar = 1, so k = sqrt(E) and a
// complex momentum k maps to the complex energy k^2.
struct Units {
    static constexpr double two_m = 1.0;
    static constexpr double hbar = 1.0;
};

// Principal square root; for energies in the fourth quadrant this lands the
// momentum in the lower half plane as required for decaying Gamow states.
inline Complex momentum_from_energy(Complex energy) { return std::sqrt(energy); }

inline Complex energy_from_momentum(Complex k) { return k * k; }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Complex require_finite(Complex z, const char* where) {
    if (!is_finite(z)) throw NonConvergenceError(std::string(where) + ": non-finite result");
    return z;
}

}  // namespace reson1d

#endif

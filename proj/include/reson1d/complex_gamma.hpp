#ifndef RESON1D_COMPLEX_GAMMA_HPP
#define RESON1D_COMPLEX_GAMMA_HPP

#include "reson1d/core.hpp"

namespace reson1d {

// Gamma function for complex argument.  Lanczos approximation (g = 607/128,
// 15 terms) for Re z >= 0.5, reflection formula otherwise.  Relative accuracy
// is ~1e-13 or better for |z| <= 50.
//
// Throws GammaPoleError when z is within 1e-14 of a non-positive integer.
Complex complex_gamma(Complex z);

}  // namespace reson1d

#endif

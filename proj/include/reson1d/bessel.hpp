#ifndef RESON1D_BESSEL_HPP
#define RESON1D_BESSEL_HPP

#include "reson1d/core.hpp"

namespace reson1d {

// Value and argument-derivative of a modified cylindrical Bessel function.
struct BesselEval {
    Complex value;
    Complex derivative;  // d/dz
};

// I_nu(z) for complex order nu at real z > 0, from the ascending series
//   I_nu(z) = sum_m (z/2)^(nu+2m) / (m! Gamma(nu+m+1)).
// Derivative via the order recurrence I'_nu = (I_{nu-1} + I_{nu+1}) / 2.
// Supported range: 0 < z <= 50, |nu| <= 20.
BesselEval bessel_i(Complex nu, double z);

// K_nu(z) for complex non-integer order nu at real z > 0.
// For z <= 2 evaluated from the connection formula
//   K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi),
// for larger z from the integral representation
//   K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt
// by adaptive Gauss-Kronrod quadrature, except in the oscillatory regime
// z < (pi/2)|Im nu| + 2 where the real-axis integral cancels catastrophically
// and the connection formula remains well conditioned (see bessel.cpp).
// Derivative via K'_nu = -(K_{nu-1} + K_{nu+1}) / 2, or the differentiated
// integrand on the quadrature path.
//
// Throws OrderTooLargeError when z > 2, |Re nu| >= 1 and z < |Re nu|;
// DomainError for integer orders; NonConvergenceError from the quadrature.
BesselEval bessel_k(Complex nu, double z);

namespace detail {

// Internal evaluation routes, exposed so tests can compare them on overlap
// regions.  No supported-range guards; callers pick a valid regime.
Complex bessel_i_series(Complex nu, double z);
Complex bessel_k_connection(Complex nu, double z);
Complex bessel_k_quadrature(Complex nu, double z);
BesselEval bessel_k_quadrature_eval(Complex nu, double z);

}  // namespace detail

}  // namespace reson1d

#endif

#include "reson1d/complex_gamma.hpp"

#include <cmath>

namespace reson1d {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey's set, also used by
// Numerical Recipes 3rd ed. gammln).
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kLanczosCoef[14] = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   3.39946499848118887e-5,  4.65236289270485756e-5,
    -9.83744753048795646e-5, 1.58088703224912494e-4,  -2.10264441724104883e-4,
    2.17439618115212643e-4,  -1.64318106536763890e-4, 8.44182239838527433e-5,
    -2.61908384015814087e-5, 3.68991826595316234e-6};
constexpr double kLanczosGph = 5.24218750000000000;  // g + 1/2
constexpr double kSqrt2Pi = 2.5066282746310005;

Complex lanczos_gamma(Complex z) {
    // Valid for Re z >= 0.5.  All operations are conjugate-symmetric, so
    // Gamma(conj z) == conj(Gamma(z)) holds to the bit.
    Complex tmp = z + kLanczosGph;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczosC0;
    Complex y = z;
    for (double coef : kLanczosCoef) {
        y += 1.0;
        ser += coef / y;
    }
    return std::exp(tmp) * (kSqrt2Pi * ser / z);
}

}  // namespace

Complex complex_gamma(Complex z) {
    const double rounded = std::round(z.real());
    if (rounded <= 0.0 && std::abs(z - rounded) < 1e-14)
        throw GammaPoleError("complex_gamma: argument at a non-positive integer pole");

    Complex result;
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        const double pi = M_PI;
        result = pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
    } else {
        result = lanczos_gamma(z);
    }
    return require_finite(result, "complex_gamma");
}

}  // namespace reson1d

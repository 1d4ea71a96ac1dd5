#include "reson1d/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "reson1d/complex_gamma.hpp"

namespace reson1d {

namespace detail {

Complex bessel_i_series(Complex nu, double z) {
    // t_0 = (z/2)^nu / Gamma(nu+1);  t_m = t_{m-1} (z/2)^2 / (m (nu+m)).
    const double half = 0.5 * z;
    const double half2 = half * half;
    Complex term = std::exp(nu * std::log(half)) / complex_gamma(nu + 1.0);
    Complex sum = term;
    int small_run = 0;
    for (int m = 1; m <= 200; ++m) {
        term *= half2 / (double(m) * (nu + double(m)));
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small_run >= 2) return sum;
        } else {
            small_run = 0;
        }
    }
    throw NonConvergenceError("bessel_i: series did not converge within 200 terms");
}

Complex bessel_k_connection(Complex nu, double z) {
    // K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi).  For purely imaginary nu
    // the two I values are exact conjugates and the result is exactly real.
    const Complex i_minus = bessel_i_series(-nu, z);
    const Complex i_plus = bessel_i_series(nu, z);
    return (M_PI / 2.0) * (i_minus - i_plus) / std::sin(M_PI * nu);
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                            0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
                            0.2077849550078985, 0.0};
constexpr double kWgk[8] = {0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
                            0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                            0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

struct PairIntegrand {
    // Scaled integrands sharing one evaluation of the exponential factor:
    //   f0(t) = exp(-z (cosh t - 1)) cosh(nu t)          -> e^z K_nu(z)
    //   f1(t) = cosh(t) f0(t)                            -> -e^z K'_nu(z)
    Complex nu;
    double z;
    void eval(double t, Complex& f0, Complex& f1) const {
        const double ct = std::cosh(t);
        const double damp = std::exp(-z * (ct - 1.0));
        f0 = damp * std::cosh(nu * t);
        f1 = ct * f0;
    }
};

struct PanelResult {
    Complex v0, v1;
    double err;
};

PanelResult gk15(const PairIntegrand& f, double a, double b) {
    const double hl = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    Complex k0{}, k1{}, g0{}, g1{};
    for (int j = 0; j < 8; ++j) {
        Complex fa0, fa1, fb0, fb1;
        if (j == 7) {
            f.eval(mid, fa0, fa1);
            fb0 = fb1 = 0.0;  // centre node counted once
        } else {
            f.eval(mid - hl * kXgk[j], fa0, fa1);
            f.eval(mid + hl * kXgk[j], fb0, fb1);
        }
        k0 += kWgk[j] * (fa0 + fb0);
        k1 += kWgk[j] * (fa1 + fb1);
        if (j % 2 == 1) {  // Gauss nodes are the odd-index Kronrod nodes
            g0 += kWg[j / 2] * (fa0 + fb0);
            g1 += kWg[j / 2] * (fa1 + fb1);
        }
    }
    PanelResult r;
    r.v0 = hl * k0;
    r.v1 = hl * k1;
    r.err = hl * std::max(std::abs(k0 - g0), std::abs(k1 - g1));
    return r;
}

// Truncation point:  z (cosh T - 1) - |Re nu| T >= 50 makes the discarded
// tail negligible relative to exp(-z), cosh factor included.
double truncation_point(double z, double re_nu) {
    const double a = std::abs(re_nu);
    double t = 3.0;
    for (int i = 0; i < 60; ++i) t = std::acosh(1.0 + (50.0 + a * t) / z);
    return t;
}

}  // namespace

BesselEval bessel_k_quadrature_eval(Complex nu, double z) {
    const PairIntegrand f{nu, z};
    const double T = truncation_point(z, nu.real());

    // Seed panels fine enough to resolve the cosh(i Im(nu) t) oscillation.
    const double freq = std::max(1.0, std::abs(nu.imag()));
    const int n0 = std::max(1, std::min(256, int(std::ceil(T * freq / 4.0))));

    struct Panel {
        double a, b, tol;
    };
    std::vector<Panel> work;
    const double tol_total = 1e-13;
    for (int j = 0; j < n0; ++j)
        work.push_back({T * j / n0, T * (j + 1) / n0, tol_total / n0});

    Complex v0 = 0.0, v1 = 0.0;
    int evaluations = 0;
    while (!work.empty()) {
        const Panel p = work.back();
        work.pop_back();
        if (++evaluations > 20000)
            throw NonConvergenceError("bessel_k: quadrature did not converge");
        const PanelResult r = gk15(f, p.a, p.b);
        if (r.err <= p.tol || (p.b - p.a) < 1e-14) {
            v0 += r.v0;
            v1 += r.v1;
        } else {
            const double m = 0.5 * (p.a + p.b);
            work.push_back({p.a, m, 0.5 * p.tol});
            work.push_back({m, p.b, 0.5 * p.tol});
        }
    }
    const double scale = std::exp(-z);
    return {scale * v0, -scale * v1};
}

Complex bessel_k_quadrature(Complex nu, double z) { return bessel_k_quadrature_eval(nu, z).value; }

}  // namespace detail

namespace {

bool near_integer(Complex nu) {
    return std::abs(nu - std::round(nu.real())) < 1e-12;
}

}  // namespace

BesselEval bessel_i(Complex nu, double z) {
    if (!(z > 0.0)) throw DomainError("bessel_i: requires z > 0");
    if (z > 50.0) throw DomainError("bessel_i: z > 50 outside supported range");
    if (std::abs(nu) > 20.0) throw DomainError("bessel_i: |nu| > 20 outside supported range");

    const Complex value = detail::bessel_i_series(nu, z);
    // I'_nu = (I_{nu-1} + I_{nu+1})/2 = I_{nu+1} + (nu/z) I_nu by the order
    // recurrence I_{nu-1} - I_{nu+1} = (2 nu / z) I_nu; the latter form stays
    // clear of the Gamma pole at order 0.
    const Complex derivative = detail::bessel_i_series(nu + 1.0, z) + (nu / z) * value;
    return {require_finite(value, "bessel_i"), require_finite(derivative, "bessel_i")};
}

BesselEval bessel_k(Complex nu, double z) {
    if (!(z > 0.0)) throw DomainError("bessel_k: requires z > 0");
    if (near_integer(nu)) throw DomainError("bessel_k: integer orders not supported");
    const double abs_re = std::abs(nu.real());
    if (abs_re >= 1.0 && z < abs_re)
        throw OrderTooLargeError("bessel_k: quadrature representation unreliable for this order");

    BesselEval out;
    if (z > 2.0) {
        // The real-axis integral loses ~exp(pi |Im nu|/2 - z) digits to
        // cancellation once the order dominates the argument; the series
        // route only loses ~exp(z) there, so hand that regime back to the
        // connection formula.
        if (z >= 0.5 * M_PI * std::abs(nu.imag()) + 2.0) {
            out = detail::bessel_k_quadrature_eval(nu, z);
        } else {
            out.value = detail::bessel_k_connection(nu, z);
            out.derivative =
                -0.5 * (detail::bessel_k_connection(nu - 1.0, z) + detail::bessel_k_connection(nu + 1.0, z));
        }
    } else {
        out.value = detail::bessel_k_connection(nu, z);
        out.derivative =
            -0.5 * (detail::bessel_k_connection(nu - 1.0, z) + detail::bessel_k_connection(nu + 1.0, z));
    }
    require_finite(out.value, "bessel_k");
    require_finite(out.derivative, "bessel_k");
    return out;
}

}  // namespace reson1d

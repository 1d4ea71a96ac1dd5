#include "reson1d/gamow.hpp"

#include <cmath>

#include "reson1d/bessel.hpp"
#include "reson1d/complex_gamma.hpp"

namespace reson1d {

namespace {

constexpr Complex kI{0.0, 1.0};

// Outgoing-wave coefficient fixed at B = 1:
//   DeltaWall      psi = e^{-ikx} (x <= -a),  C sin(kx) (x > -a)
//   ExpTwoPiece    psi = (s_c/2)^{ikc} Gamma(1-ikc) I_{-ikc}(s_c e^{x/c}) (x <= 0),
//                        C K_{ikd}(s_d e^{x/d}) (x > 0);  c = 0: e^{-ikx} on the left
// C follows from continuity at the junction; derivative continuity is the
// pole condition itself and is not imposed.
struct PieceEval {
    Complex value;
    Complex derivative;
};

PieceEval delta_left(const ModelSpec&, Complex k, double x) {
    const Complex e = std::exp(-kI * k * x);
    return {e, -kI * k * e};
}

PieceEval delta_right(const ModelSpec& spec, Complex k, double x) {
    // continuity at x = -a: e^{ika} = C sin(-ka)
    const Complex C = -std::exp(kI * k * spec.a) / std::sin(k * spec.a);
    return {C * std::sin(k * x), C * k * std::cos(k * x)};
}

PieceEval exp2_left(const ModelSpec& spec, Complex k, double x) {
    if (spec.c == 0.0) return delta_left(spec, k, x);
    const ScaleParams p = scales(spec);
    const Complex ikc = kI * k * spec.c;
    const Complex pref = std::exp(ikc * std::log(0.5 * p.s_c)) * complex_gamma(1.0 - ikc);
    const double z = p.s_c * std::exp(x / spec.c);
    const Complex val = detail::bessel_i_series(-ikc, z);
    const Complex der = detail::bessel_i_series(-ikc + 1.0, z) + (-ikc / z) * val;
    return {pref * val, pref * der * (z / spec.c)};
}

PieceEval exp2_right(const ModelSpec& spec, Complex k, double x) {
    const ScaleParams p = scales(spec);
    const Complex ikd = kI * k * spec.d;
    const BesselEval at_junction = bessel_k(ikd, p.s_d);
    const Complex C = exp2_left(spec, k, 0.0).value / at_junction.value;
    const double z = p.s_d * std::exp(x / spec.d);
    const BesselEval K = bessel_k(ikd, z);
    return {C * K.value, C * K.derivative * (z / spec.d)};
}

PieceEval evaluate(const ModelSpec& spec, Complex k, double x, int side) {
    switch (spec.kind) {
        case ModelKind::DeltaWall: {
            const double junction = -spec.a;
            if (x < junction || (x == junction && side < 0)) return delta_left(spec, k, x);
            return delta_right(spec, k, x);
        }
        case ModelKind::ExpTwoPiece: {
            if (x < 0.0 || (x == 0.0 && side <= 0)) return exp2_left(spec, k, x);
            return exp2_right(spec, k, x);
        }
        case ModelKind::ExpOnePiece:
            throw DomainError("gamow state: one-piece profile supports no resonances");
    }
    throw std::logic_error("gamow evaluate: bad kind");
}

}  // namespace

Complex gamow_value(const ModelSpec& spec, Complex k, double x) {
    return evaluate(spec, k, x, 0).value;
}

Complex gamow_derivative(const ModelSpec& spec, Complex k, double x, int side) {
    return evaluate(spec, k, x, side).derivative;
}

GamowProfile gamow_wavefunction(const ModelSpec& spec, const Resonance& pole, double x_min,
                                double x_max, int n) {
    if (!(x_min < x_max)) throw DomainError("gamow_wavefunction: requires x_min < x_max");
    if (n < 3) throw DomainError("gamow_wavefunction: requires n >= 3");

    const Complex k = pole.k_pole;
    const double residual = std::abs(pole_denominator(spec, k));
    const double nearby = std::abs(pole_denominator(spec, k + 0.1));
    if (!(residual < 1e-6 * nearby))
        throw PoleMismatchError("gamow_wavefunction: k does not satisfy the pole condition");

    GamowProfile profile;
    profile.model = spec;
    profile.pole = pole;
    profile.alpha = k.real();
    profile.beta = -k.imag();
    profile.x.resize(n);
    profile.psi.resize(n);
    profile.abs_psi.resize(n);
    for (int i = 0; i < n; ++i) {
        profile.x[i] = x_min + (x_max - x_min) * i / (n - 1);
        profile.psi[i] = gamow_value(spec, k, profile.x[i]);
    }
    const double norm = std::abs(profile.psi.front());
    if (!(norm > 0.0)) throw NonConvergenceError("gamow_wavefunction: vanishing leftmost sample");
    for (int i = 0; i < n; ++i) {
        profile.psi[i] /= norm;
        profile.abs_psi[i] = std::abs(profile.psi[i]);
    }
    return profile;
}

DecayLaw::DecayLaw(double gamma_n) : gamma(gamma_n), mean_lifetime(1.0 / gamma_n) {
    if (!(gamma_n > 0.0)) throw DomainError("DecayLaw: requires gamma > 0");
}

DecayLaw DecayLaw::of(const Resonance& pole) { return DecayLaw(2.0 * pole.half_width); }

double survival_probability(const DecayLaw& law, double t) {
    if (!(t >= 0.0)) throw DomainError("survival_probability: requires t >= 0");
    return std::exp(-law.gamma * t);
}

}  // namespace reson1d

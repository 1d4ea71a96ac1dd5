#include "reson1d/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "reson1d/bessel.hpp"
#include "reson1d/complex_gamma.hpp"

namespace reson1d {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Principal-branch power with a real positive base: b^w = exp(w ln b).
Complex real_base_pow(double base, Complex w) { return std::exp(w * std::log(base)); }

void check_denominator(Complex den, const char* where) {
    if (std::abs(den) < 1e-300)
        throw AmplitudePoleError(std::string(where) + ": evaluated at a pole of r");
}

}  // namespace

ModelSpec ModelSpec::delta_wall(double v0, double a) {
    require(v0 >= 0.0 && std::isfinite(v0), "delta_wall: requires v0 >= 0");
    require(a > 0.0 && std::isfinite(a), "delta_wall: requires a > 0");
    return {ModelKind::DeltaWall, v0, a, 0.0, 0.0};
}

ModelSpec ModelSpec::exp_one_piece(double v0, double c) {
    require(v0 > 0.0 && std::isfinite(v0), "exp_one_piece: requires v0 > 0");
    require(c > 0.0 && std::isfinite(c), "exp_one_piece: requires c > 0");
    return {ModelKind::ExpOnePiece, v0, 0.0, c, 0.0};
}

ModelSpec ModelSpec::exp_two_piece(double v0, double c, double d) {
    require(v0 > 0.0 && std::isfinite(v0), "exp_two_piece: requires v0 > 0");
    require(c >= 0.0 && std::isfinite(c), "exp_two_piece: requires c >= 0");
    require(d > 0.0 && std::isfinite(d), "exp_two_piece: requires d > 0");
    return {ModelKind::ExpTwoPiece, v0, 0.0, c, d};
}

const char* ModelSpec::name() const {
    switch (kind) {
        case ModelKind::DeltaWall: return "delta-wall";
        case ModelKind::ExpOnePiece: return "exp1";
        case ModelKind::ExpTwoPiece: return "exp2";
    }
    return "?";
}

ScaleParams scales(const ModelSpec& spec) {
    const double root = std::sqrt(spec.v0);
    ScaleParams p;
    p.s_c = spec.c * root;
    p.s_d = spec.d * root;
    p.zeta = spec.c > 0.0 ? spec.d / spec.c : std::numeric_limits<double>::quiet_NaN();
    return p;
}

double potential_value(const ModelSpec& spec, double x) {
    switch (spec.kind) {
        case ModelKind::DeltaWall:
            throw NotPointwiseError("potential_value: delta barrier has no pointwise value");
        case ModelKind::ExpOnePiece:
            return spec.v0 * std::exp(2.0 * x / spec.c);
        case ModelKind::ExpTwoPiece:
            if (x > 0.0) return spec.v0 * std::exp(2.0 * x / spec.d);
            if (spec.c == 0.0) return 0.0;  // step limit
            return spec.v0 * std::exp(2.0 * x / spec.c);
    }
    throw std::logic_error("potential_value: bad kind");
}

Complex reflection_delta_wall(const ModelSpec& spec, Complex k) {
    require(spec.kind == ModelKind::DeltaWall, "reflection_delta_wall: wrong model kind");
    if (std::abs(k) == 0.0) throw DomainError("reflection_delta_wall: requires k != 0");
    const Complex ka = k * spec.a;
    const Complex s = std::sin(ka);
    const Complex base = spec.v0 * s + k * std::cos(ka);
    const Complex den = base - kI * k * s;
    check_denominator(den, "reflection_delta_wall");
    const Complex r = -std::exp(-2.0 * kI * ka) * (base + kI * k * s) / den;
    return require_finite(r, "reflection_delta_wall");
}

Complex reflection_exp_one_piece(const ModelSpec& spec, Complex k) {
    require(spec.kind == ModelKind::ExpOnePiece, "reflection_exp_one_piece: wrong model kind");
    const ScaleParams p = scales(spec);
    const Complex ikc = kI * k * spec.c;
    const Complex r =
        -real_base_pow(0.5 * p.s_c, -2.0 * ikc) * complex_gamma(1.0 + ikc) / complex_gamma(1.0 - ikc);
    return require_finite(r, "reflection_exp_one_piece");
}

Complex reflection_exp_two_piece(const ModelSpec& spec, Complex k) {
    require(spec.kind == ModelKind::ExpTwoPiece, "reflection_exp_two_piece: wrong model kind");
    const ScaleParams p = scales(spec);
    const Complex ikd = kI * k * spec.d;
    const BesselEval K = bessel_k(ikd, p.s_d);

    if (spec.c == 0.0) {
        // Free region matched to K_{ikd} at x = 0; s_d/d = sqrt(v0).
        const double root = std::sqrt(spec.v0);
        const Complex num = kI * k * K.value - root * K.derivative;
        const Complex den = kI * k * K.value + root * K.derivative;
        check_denominator(den, "reflection_exp_two_piece");
        return require_finite(num / den, "reflection_exp_two_piece");
    }

    const Complex ikc = kI * k * spec.c;
    const BesselEval Ip = bessel_i(ikc, p.s_c);
    const BesselEval Im = bessel_i(-ikc, p.s_c);
    // Matching at x = 0: the chain-rule factors s_c/c and s_d/d both equal
    // sqrt(v0) and cancel, leaving Wronskian-like brackets in I and K.
    const Complex num = Ip.value * K.derivative - Ip.derivative * K.value;
    const Complex den = Im.value * K.derivative - Im.derivative * K.value;
    check_denominator(den, "reflection_exp_two_piece");
    const Complex pref =
        -real_base_pow(0.5 * p.s_c, -2.0 * ikc) * complex_gamma(1.0 + ikc) / complex_gamma(1.0 - ikc);
    return require_finite(pref * num / den, "reflection_exp_two_piece");
}

Complex reflection(const ModelSpec& spec, Complex k) {
    switch (spec.kind) {
        case ModelKind::DeltaWall: return reflection_delta_wall(spec, k);
        case ModelKind::ExpOnePiece: return reflection_exp_one_piece(spec, k);
        case ModelKind::ExpTwoPiece: return reflection_exp_two_piece(spec, k);
    }
    throw std::logic_error("reflection: bad kind");
}

Complex reflection_at_energy(const ModelSpec& spec, double E) {
    if (!(E > 0.0)) throw DomainError("reflection_at_energy: requires E > 0");
    return reflection(spec, Complex(std::sqrt(E), 0.0));
}

Complex pole_denominator(const ModelSpec& spec, Complex k) {
    switch (spec.kind) {
        case ModelKind::DeltaWall: {
            const Complex ka = k * spec.a;
            return spec.v0 * std::sin(ka) + k * std::cos(ka) - kI * k * std::sin(ka);
        }
        case ModelKind::ExpOnePiece:
            // Zero-free: the one-piece profile supports no resonances.
            return complex_gamma(1.0 - kI * k * spec.c);
        case ModelKind::ExpTwoPiece: {
            const ScaleParams p = scales(spec);
            const Complex ikd = kI * k * spec.d;
            const BesselEval K = bessel_k(ikd, p.s_d);
            if (spec.c == 0.0) return kI * k * K.value + std::sqrt(spec.v0) * K.derivative;
            const BesselEval Im = bessel_i(-kI * k * spec.c, p.s_c);
            return Im.value * K.derivative - Im.derivative * K.value;
        }
    }
    throw std::logic_error("pole_denominator: bad kind");
}

}  // namespace reson1d

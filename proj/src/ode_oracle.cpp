#include "reson1d/ode_oracle.hpp"

#include <cmath>
#include <functional>

namespace reson1d {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRenormLimit = 1e100;
constexpr double kRenormScale = 1e-100;

struct State {
    Complex psi;
    Complex dpsi;
};

// One smooth piece of the potential along an integration leg.
using Piece = std::function<double(double)>;

void rk4_leg(const Piece& V, double E, double x0, double x1, double step, State& y,
             SolutionTrace* trace, int* renorms) {
    const int n = std::max(16, int(std::ceil(std::abs(x0 - x1) / step)));
    const double h = (x1 - x0) / n;
    double x = x0;
    auto rhs = [&](double xx, const State& s) -> State {
        return {s.dpsi, (V(xx) - E) * s.psi};
    };
    for (int i = 0; i < n; ++i) {
        const State k1 = rhs(x, y);
        const State k2 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k1.psi, y.dpsi + 0.5 * h * k1.dpsi});
        const State k3 = rhs(x + 0.5 * h, {y.psi + 0.5 * h * k2.psi, y.dpsi + 0.5 * h * k2.dpsi});
        const State k4 = rhs(x + h, {y.psi + h * k3.psi, y.dpsi + h * k3.dpsi});
        y.psi += h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi);
        y.dpsi += h / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi);
        x = x0 + (i + 1) * (x1 - x0) / n;
        if (std::abs(y.psi) > kRenormLimit || std::abs(y.dpsi) > kRenormLimit) {
            y.psi *= kRenormScale;
            y.dpsi *= kRenormScale;
            ++*renorms;
        }
        if (!is_finite(y.psi) || !is_finite(y.dpsi))
            throw NonConvergenceError("oracle_reflection: overflow without renormalization");
        if (trace) trace->samples.push_back({x, y.psi, y.dpsi});
    }
}

double right_scale(const ModelSpec& spec) {
    return spec.kind == ModelKind::ExpTwoPiece ? spec.d : spec.c;
}

}  // namespace

std::pair<double, double> oracle_bounds(const ModelSpec& spec, double E,
                                        const IntegrationConfig& cfg) {
    // Factor-of-two margins keep the derived bounds strictly inside the
    // stated preconditions.
    double xr = cfg.x_right;
    if (std::isnan(xr))
        xr = 0.5 * right_scale(spec) * std::log(2.0 * cfg.depth_factor * E / spec.v0);
    double xl = cfg.x_left;
    if (std::isnan(xl)) {
        if (spec.kind == ModelKind::ExpTwoPiece && spec.c == 0.0)
            xl = -1.0;  // exactly flat for x <= 0
        else
            xl = 0.5 * spec.c * std::log(0.5 * cfg.flat_tol * E / spec.v0);
    }
    return {xl, xr};
}

std::pair<Complex, Complex> wkb_start(const ModelSpec& spec, double E, double x_right,
                                      double depth_factor) {
    const double v = potential_value(spec, x_right);
    if (!(v > depth_factor * E))
        throw RegionNotDeepError("wkb_start: V(x_right) <= depth_factor * E");
    const double q = std::sqrt(v - E);
    const Complex psi = 1.0 / std::sqrt(q);
    return {psi, -q * psi};
}

Complex oracle_reflection(const ModelSpec& spec, double E, IntegrationConfig cfg,
                          SolutionTrace* trace) {
    if (spec.kind == ModelKind::DeltaWall)
        throw DomainError("oracle_reflection: delta barrier has no pointwise potential");
    if (!(E > 0.0)) throw DomainError("oracle_reflection: requires E > 0");

    const auto [xl, xr] = oracle_bounds(spec, E, cfg);
    if (!(xl < 0.0 && 0.0 < xr))
        throw DomainError("oracle_reflection: requires x_left < 0 < x_right");
    if (potential_value(spec, xl) >= cfg.flat_tol * E)
        throw DomainError("oracle_reflection: flat region violated at x_left");

    auto [psi, dpsi] = wkb_start(spec, E, xr, cfg.depth_factor);
    State y{psi, dpsi};
    int renorms = 0;

    if (spec.kind == ModelKind::ExpTwoPiece) {
        // Integrate each smooth piece separately with x = 0 as a shared node;
        // the kink (or step, for c = 0) never lands inside an RK4 stage.
        const Piece vr = [&](double x) { return spec.v0 * std::exp(2.0 * x / spec.d); };
        const Piece vl = spec.c == 0.0
                             ? Piece([](double) { return 0.0; })
                             : Piece([&](double x) { return spec.v0 * std::exp(2.0 * x / spec.c); });
        rk4_leg(vr, E, xr, 0.0, cfg.step, y, trace, &renorms);
        rk4_leg(vl, E, 0.0, xl, cfg.step, y, trace, &renorms);
    } else {
        const Piece v = [&](double x) { return spec.v0 * std::exp(2.0 * x / spec.c); };
        rk4_leg(v, E, xr, xl, cfg.step, y, trace, &renorms);
    }
    if (trace) trace->renormalizations = renorms;

    // psi(x_left) = A e^{ikx} + B e^{-ikx}
    const double k = std::sqrt(E);
    const Complex A = std::exp(-kI * k * xl) * (kI * k * y.psi + y.dpsi) / (2.0 * kI * k);
    const Complex B = std::exp(kI * k * xl) * (kI * k * y.psi - y.dpsi) / (2.0 * kI * k);
    if (std::abs(A) == 0.0) throw NonConvergenceError("oracle_reflection: vanishing incident coefficient");
    return require_finite(B / A, "oracle_reflection");
}

}  // namespace reson1d

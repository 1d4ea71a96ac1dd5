#include "reson1d/pole_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "reson1d/time_delay.hpp"

namespace reson1d {

namespace {

Resonance make_resonance(const ModelSpec& spec, Complex k, int iterations) {
    if (std::abs(k) < 1e-8)
        throw WrongHalfPlaneError("refine_pole: converged to the trivial zero at k = 0");
    if (!(k.imag() < 0.0))
        throw WrongHalfPlaneError("refine_pole: converged with Im k >= 0 (not a decaying state)");
    Resonance res;
    res.k_pole = k;
    res.energy = k * k;
    res.E_n = res.energy.real();
    res.half_width = -res.energy.imag();
    if (!(res.half_width > 0.0) || !(res.E_n > 0.0))
        throw WrongHalfPlaneError("refine_pole: converged pole has non-physical energy");
    res.lifetime = 1.0 / (2.0 * res.half_width);
    res.iterations = iterations;
    (void)spec;
    return res;
}

bool residual_ok(const ModelSpec& spec, Complex k, double tol) {
    const double at_pole = std::abs(pole_denominator(spec, k));
    const double nearby = std::abs(pole_denominator(spec, k + 0.1));
    return at_pole < tol * nearby;
}

}  // namespace

Resonance refine_pole(const ModelSpec& spec, Complex k_seed, const SearchConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw DomainError("refine_pole: requires tol > 0");
    if (cfg.max_iter < 1) throw DomainError("refine_pole: requires max_iter >= 1");
    Complex k = k_seed;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        const double h = 1e-7 * std::max(std::abs(k), 1e-6);
        const Complex d_plus = pole_denominator(spec, k + h);
        const Complex d_minus = pole_denominator(spec, k - h);
        const Complex deriv = (d_plus - d_minus) / (2.0 * h);
        if (std::abs(deriv) == 0.0)
            throw NonConvergenceError("refine_pole: vanishing derivative of D(k)");
        const Complex step = -pole_denominator(spec, k) / deriv;
        k += step;
        if (!is_finite(k)) throw NonConvergenceError("refine_pole: iterate diverged");
        if (std::abs(step) < 1e-12 * std::abs(k) || residual_ok(spec, k, cfg.tol)) {
            if (!residual_ok(spec, k, cfg.tol))
                throw NonConvergenceError("refine_pole: stalled without meeting residual tolerance");
            return make_resonance(spec, k, it);
        }
    }
    throw NonConvergenceError("refine_pole: no convergence within max_iter");
}

PoleSearch find_poles_detailed(const ModelSpec& spec, const SearchConfig& cfg) {
    if (!(0.0 < cfg.e_min && cfg.e_min < cfg.e_max))
        throw DomainError("find_poles: requires 0 < e_min < e_max");

    PoleSearch out;
    // The one-piece profile's denominator Gamma(1 - ikc) is entire and
    // zero-free; there is nothing to search for.
    if (spec.kind == ModelKind::ExpOnePiece) return out;

    const TimeDelayProfile profile = delay_profile(spec, cfg.e_min, cfg.e_max, cfg.profile_points);

    struct Hit {
        Resonance res;
        double epsilon;
    };
    std::vector<Hit> hits;
    // Newton basins here are only ~0.1 wide in k, so a single seed depth is
    // not reliable.  Walk a short ladder per peak: continue from the previous
    // pole's Im k first (the resonance family varies slowly), then try the
    // configured seed_gamma and a few multiples.  A converged pole counts for
    // a peak only if it lands near it; anything else is a different zero of D.
    std::optional<double> im_continuation;
    for (const DelayPeak& peak : profile.peaks) {
        SeedOutcome seed;
        seed.epsilon = peak.epsilon;
        std::vector<Complex> ladder;
        if (im_continuation) ladder.emplace_back(std::sqrt(peak.epsilon), *im_continuation);
        for (double factor : {1.0, 2.0, 4.0, 0.5})
            ladder.push_back(momentum_from_energy(Complex(peak.epsilon, -factor * cfg.seed_gamma)));

        seed.converged = false;
        seed.message = "no ladder seed converged";
        for (const Complex& k_seed : ladder) {
            try {
                const Resonance res = refine_pole(spec, k_seed, cfg);
                if (std::abs(res.E_n - peak.epsilon) > 0.6) {
                    seed.message = "refinement converged away from the seeding peak";
                    continue;
                }
                seed.converged = true;
                seed.k_result = res.k_pole;
                im_continuation = res.k_pole.imag();
                hits.push_back({res, peak.epsilon});
                break;
            } catch (const std::exception& e) {
                seed.message = e.what();
            }
        }
        out.seeds.push_back(seed);
    }

    // Merge duplicates closer than 1e-6 in k.
    std::vector<Hit> unique;
    for (const Hit& h : hits) {
        const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Hit& u) {
            return std::abs(u.res.k_pole - h.res.k_pole) < 1e-6;
        });
        if (!dup) unique.push_back(h);
    }
    std::sort(unique.begin(), unique.end(),
              [](const Hit& a, const Hit& b) { return a.res.E_n < b.res.E_n; });
    if (int(unique.size()) > cfg.max_poles) unique.resize(cfg.max_poles);

    for (int i = 0; i < int(unique.size()); ++i) {
        unique[i].res.n = i;
        out.poles.push_back(unique[i].res);
        out.epsilons.push_back(unique[i].epsilon);
    }
    return out;
}

std::vector<Resonance> find_poles(const ModelSpec& spec, const SearchConfig& cfg) {
    return find_poles_detailed(spec, cfg).poles;
}

}  // namespace reson1d

#include "reson1d/time_delay.hpp"

#include <cmath>

namespace reson1d {

double wigner_delay_amplitude(const std::function<Complex(double)>& r, double E) {
    const double h = 1e-6 * E;
    const Complex drdE = (r(E + h) - r(E - h)) / (2.0 * h);
    return (drdE / r(E)).imag();
}

double wigner_delay(const ModelSpec& spec, double E) {
    if (!(E > 0.0)) throw DomainError("wigner_delay: requires E > 0");
    return wigner_delay_amplitude([&](double e) { return reflection_at_energy(spec, e); }, E);
}

TimeDelayProfile delay_profile(const ModelSpec& spec, double e_min, double e_max, int n_points) {
    if (!(0.0 < e_min && e_min < e_max)) throw DomainError("delay_profile: requires 0 < e_min < e_max");
    if (n_points < 16) throw DomainError("delay_profile: requires n_points >= 16");

    TimeDelayProfile profile;
    profile.model = spec;
    profile.points.resize(n_points);
    const double de = (e_max - e_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        PhasePoint& p = profile.points[i];
        p.E = e_min + i * de;
        p.r = reflection_at_energy(spec, p.E);
        p.R = std::abs(p.r);
        p.theta = std::arg(p.r);
        p.tau = wigner_delay(spec, p.E);
    }

    // Sequential unwrap: shift each phase by the multiple of 2 pi that keeps
    // it closest to its predecessor.
    for (int i = 1; i < n_points; ++i) {
        double& th = profile.points[i].theta;
        th += 2.0 * M_PI * std::round((profile.points[i - 1].theta - th) / (2.0 * M_PI));
    }

    for (int i = 1; i + 1 < n_points; ++i) {
        const double tm = profile.points[i - 1].tau;
        const double t0 = profile.points[i].tau;
        const double tp = profile.points[i + 1].tau;
        if (t0 > tm && t0 > tp) {
            // Vertex of the parabola through the three samples.
            const double curv = tm - 2.0 * t0 + tp;
            const double epsilon = profile.points[i].E + 0.5 * de * (tm - tp) / curv;
            const double height = t0 - (tm - tp) * (tm - tp) / (8.0 * curv);
            profile.peaks.push_back({epsilon, height});
        }
    }
    return profile;
}

double breit_wigner_delay(double E, double E0, double gamma0) {
    if (!(gamma0 > 0.0)) throw DomainError("breit_wigner_delay: requires gamma0 > 0");
    const double x = E - E0;
    return (0.5 * gamma0) / (x * x + 0.25 * gamma0 * gamma0);
}

}  // namespace reson1d

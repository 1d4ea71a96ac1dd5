// reson1d: shape resonances, reflection phases and Wigner time delay for
// exactly solvable one-dimensional rising potentials.
//
// Subcommands: resonances, timedelay, gamow, verify, table1.
// Exit codes: 0 ok, 1 verification/threshold failure, 2 usage error,
//             3 pole search failed for every seed, 4 requested pole missing.

#include <clocale>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "reson1d/bessel.hpp"
#include "reson1d/gamow.hpp"
#include "reson1d/models.hpp"
#include "reson1d/ode_oracle.hpp"
#include "reson1d/pole_finder.hpp"
#include "reson1d/report.hpp"
#include "reson1d/time_delay.hpp"
#include "reson1d/version.hpp"

namespace {

using namespace reson1d;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSearchFail = 3;
constexpr int kExitMissingPole = 4;

struct ModelFlags {
    std::string model;
    double v0 = 0.0;
    double a = 1.0;
    double c = -1.0;
    double d = -1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "Model: delta-wall, exp1 or exp2")->required();
        cmd->add_option("--v0", v0, "Barrier strength / potential scale")->required();
        cmd->add_option("--a", a, "Delta barrier offset (delta-wall)");
        cmd->add_option("--c", c, "Left length scale (exp1, exp2; exp2 allows 0)");
        cmd->add_option("--d", d, "Right length scale (exp2)");
    }

    ModelSpec build() const {
        if (model == "delta-wall") return ModelSpec::delta_wall(v0, a);
        if (model == "exp1") {
            if (c <= 0.0) throw std::invalid_argument("exp1 requires --c > 0");
            return ModelSpec::exp_one_piece(v0, c);
        }
        if (model == "exp2") {
            if (c < 0.0) throw std::invalid_argument("exp2 requires --c >= 0");
            if (d <= 0.0) throw std::invalid_argument("exp2 requires --d > 0");
            return ModelSpec::exp_two_piece(v0, c, d);
        }
        throw std::invalid_argument("unknown --model '" + model + "'");
    }
};

struct OutputFlags {
    std::string format = "csv";
    std::string path = "-";

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", path, "Output file ('-' for stdout)");
    }

    void emit(const ReportTable& table) const {
        std::ostringstream body;
        if (format == "json")
            write_json(body, table);
        else
            write_csv(body, table);
        if (path == "-") {
            std::cout << body.str();
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
            out << body.str();
        }
    }
};

void base_metadata(ReportTable& table, const ModelSpec& spec) {
    table.metadata.emplace_back("tool", std::string("reson1d ") + kVersion);
    table.metadata.emplace_back("units", "2m = 1, hbar = 1");
    table.metadata.emplace_back("model", spec.name());
    table.metadata.emplace_back("v0", format_full(spec.v0));
    if (spec.kind == ModelKind::DeltaWall) table.metadata.emplace_back("a", format_full(spec.a));
    if (spec.kind != ModelKind::DeltaWall) table.metadata.emplace_back("c", format_full(spec.c));
    if (spec.kind == ModelKind::ExpTwoPiece) table.metadata.emplace_back("d", format_full(spec.d));
}

int cmd_resonances(const ModelFlags& mf, const SearchConfig& cfg, const OutputFlags& of) {
    const ModelSpec spec = mf.build();
    const PoleSearch search = find_poles_detailed(spec, cfg);

    if (search.poles.empty() && !search.seeds.empty()) {
        bool all_failed = true;
        for (const auto& s : search.seeds) all_failed = all_failed && !s.converged;
        if (all_failed) {
            std::cerr << "pole search failed for every seed:\n";
            for (const auto& s : search.seeds)
                std::cerr << "  seed at E = " << s.epsilon << ": " << s.message << "\n";
            return kExitSearchFail;
        }
    }

    ReportTable table;
    base_metadata(table, spec);
    table.metadata.emplace_back("e_window",
                                format_full(cfg.e_min) + " .. " + format_full(cfg.e_max));
    table.columns = {"n", "E_n", "Gamma_n_over_2", "k_re", "k_im", "epsilon_n", "lifetime"};
    for (std::size_t i = 0; i < search.poles.size(); ++i) {
        const Resonance& res = search.poles[i];
        table.rows.push_back({double(res.n), res.E_n, res.half_width, res.k_pole.real(),
                              res.k_pole.imag(), search.epsilons[i], res.lifetime});
    }
    if (search.poles.empty()) table.notes.push_back("no resonances found in the search window");
    of.emit(table);
    return kExitOk;
}

int cmd_timedelay(const ModelFlags& mf, double e_min, double e_max, int points, bool peaks,
                  const OutputFlags& of) {
    const ModelSpec spec = mf.build();
    const TimeDelayProfile profile = delay_profile(spec, e_min, e_max, points);

    ReportTable table;
    base_metadata(table, spec);
    table.metadata.emplace_back("grid", format_full(e_min) + " .. " + format_full(e_max) + " x " +
                                            std::to_string(points));
    table.columns = {"E", "tau", "theta_unwrapped", "R"};
    for (const PhasePoint& p : profile.points)
        table.rows.push_back({p.E, p.tau, p.theta, p.R});
    if (peaks) {
        for (std::size_t i = 0; i < profile.peaks.size(); ++i)
            table.notes.push_back("peak " + std::to_string(i) + ": epsilon = " +
                                  format_full(profile.peaks[i].epsilon) + ", tau = " +
                                  format_full(profile.peaks[i].height));
        if (profile.peaks.empty()) table.notes.push_back("no interior delay peaks in this window");
    }
    of.emit(table);
    return kExitOk;
}

int cmd_gamow(const ModelFlags& mf, const SearchConfig& cfg, int pole_index, double x_min,
              double x_max, int samples, const OutputFlags& of) {
    const ModelSpec spec = mf.build();
    if (samples < 3) throw std::invalid_argument("gamow requires --samples >= 3");
    if (!(x_min < x_max)) throw std::invalid_argument("gamow requires --xmin < --xmax");

    const std::vector<Resonance> poles = find_poles(spec, cfg);
    if (pole_index < 0 || pole_index >= int(poles.size())) {
        std::cerr << "pole index " << pole_index << " not found (model has " << poles.size()
                  << " resonance(s) in the window)\n";
        return kExitMissingPole;
    }
    const GamowProfile profile = gamow_wavefunction(spec, poles[pole_index], x_min, x_max, samples);

    ReportTable table;
    base_metadata(table, spec);
    table.metadata.emplace_back("pole_index", std::to_string(pole_index));
    table.metadata.emplace_back("alpha", format_full(profile.alpha));
    table.metadata.emplace_back("beta", format_full(profile.beta));
    table.metadata.emplace_back("Gamma", format_full(2.0 * profile.pole.half_width));
    table.metadata.emplace_back("lifetime", format_full(profile.pole.lifetime));
    table.metadata.emplace_back("E_n", format_full(profile.pole.E_n));
    table.columns = {"x", "psi_re", "psi_im", "abs_psi"};
    for (int i = 0; i < samples; ++i)
        table.rows.push_back(
            {profile.x[i], profile.psi[i].real(), profile.psi[i].imag(), profile.abs_psi[i]});
    of.emit(table);
    return kExitOk;
}

int cmd_verify(const ModelFlags& mf, double e_min, double e_max, int samples) {
    const ModelSpec spec = mf.build();
    if (spec.kind == ModelKind::DeltaWall)
        throw std::invalid_argument("verify supports exp1 and exp2 only (oracle needs a pointwise potential)");

    // Closed form against the direct-integration oracle.
    double max_dev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double E = e_min + (e_max - e_min) * i / (samples - 1);
        const Complex closed = reflection_at_energy(spec, E);
        const Complex oracle = oracle_reflection(spec, E);
        max_dev = std::max(max_dev, std::abs(closed - oracle));
    }

    // Wronskian of the Bessel kernel over a fixed random (nu, z) set.
    std::mt19937 rng(20250810u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double max_wronskian = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double mu = -5.0 + 10.0 * uni(rng);
        const double re = i % 2 ? 0.0 : -0.95 + 1.9 * uni(rng);
        const Complex nu{re, mu};
        const double z = std::exp(std::log(0.1) + uni(rng) * (std::log(40.0) - std::log(0.1)));
        const BesselEval I = bessel_i(nu, z);
        const BesselEval K = bessel_k(nu, z);
        const Complex w = I.value * K.derivative - I.derivative * K.value + 1.0 / z;
        max_wronskian = std::max(max_wronskian, std::abs(w));
    }

    // Unimodularity of r on the real axis.
    double max_unimod = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double E = 0.05 + (60.0 - 0.05) * i / 499.0;
        max_unimod = std::max(max_unimod, std::abs(std::abs(reflection_at_energy(spec, E)) - 1.0));
    }

    const bool ok_oracle = max_dev < 1e-6;
    const bool ok_wronskian = max_wronskian < 1e-9;
    const bool ok_unimod = max_unimod < 1e-10;
    std::cout << "oracle max |r_analytic - r_oracle| = " << format_full(max_dev) << "  ["
              << (ok_oracle ? "ok" : "FAIL") << ", threshold 1e-6]\n";
    std::cout << "bessel max |Wronskian residual|    = " << format_full(max_wronskian) << "  ["
              << (ok_wronskian ? "ok" : "FAIL") << ", threshold 1e-9]\n";
    std::cout << "max | |r(E)| - 1 |                 = " << format_full(max_unimod) << "  ["
              << (ok_unimod ? "ok" : "FAIL") << ", threshold 1e-10]\n";
    return (ok_oracle && ok_wronskian && ok_unimod) ? kExitOk : kExitVerifyFail;
}

struct Table1System {
    const char* label;
    double c, d;
    Complex published_energy[5];
    double published_epsilon[5];
};

const Table1System kTable1[2] = {
    {"c=0.5 d=5",
     0.5,
     5.0,
     {{8.88, -1.50}, {13.14, -1.87}, {17.30, -2.17}, {21.51, -2.45}, {25.80, -2.70}},
     {8.89, 13.21, 17.34, 21.65, 26.05}},
    {"c=0 d=5",
     0.0,
     5.0,
     {{9.42, -1.23}, {13.77, -1.49}, {18.01, -1.69}, {22.28, -1.89}, {26.62, -2.07}},
     {9.36, 13.46, 18.04, 22.14, 26.43}},
};

int cmd_table1(const OutputFlags& of) {
    ReportTable table;
    table.metadata.emplace_back("tool", std::string("reson1d ") + kVersion);
    table.metadata.emplace_back("units", "2m = 1, hbar = 1");
    table.metadata.emplace_back("v0", "5");
    table.metadata.emplace_back("thresholds", "|dE| < 0.02, |dGamma/2| < 0.02, |deps| < 0.05");
    table.columns = {"system", "n",       "E_n",      "E_published",   "dE",  "G2",
                     "G2_paper", "dG2",   "epsilon",  "eps_published", "deps"};
    bool ok = true;
    for (int sys = 0; sys < 2; ++sys) {
        const Table1System& ref = kTable1[sys];
        const ModelSpec spec = ModelSpec::exp_two_piece(5.0, ref.c, ref.d);
        SearchConfig cfg;
        cfg.e_min = 1.0;
        cfg.e_max = 30.0;
        const PoleSearch search = find_poles_detailed(spec, cfg);
        if (search.poles.size() != 5) {
            std::cerr << "table1: expected 5 resonances for " << ref.label << ", found "
                      << search.poles.size() << "\n";
            return kExitVerifyFail;
        }
        for (int n = 0; n < 5; ++n) {
            const Resonance& res = search.poles[n];
            const double dE = res.E_n - ref.published_energy[n].real();
            const double dG2 = res.half_width - (-ref.published_energy[n].imag());
            const double deps = search.epsilons[n] - ref.published_epsilon[n];
            ok = ok && std::abs(dE) < 0.02 && std::abs(dG2) < 0.02 && std::abs(deps) < 0.05;
            table.rows.push_back({double(sys), double(n), res.E_n, ref.published_energy[n].real(), dE,
                                  res.half_width, -ref.published_energy[n].imag(), dG2,
                                  search.epsilons[n], ref.published_epsilon[n], deps});
        }
    }
    table.notes.push_back(ok ? "all deviations within thresholds"
                             : "one or more deviations exceed thresholds");
    of.emit(table);
    return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"shape resonances of one-dimensional rising potentials"};
    app.require_subcommand(1);

    ModelFlags mf_res, mf_td, mf_gam, mf_ver;
    OutputFlags of_res, of_td, of_gam, of_t1;
    SearchConfig cfg_res, cfg_gam;

    auto* res = app.add_subcommand("resonances", "Locate Gamow poles and report the resonance table");
    mf_res.attach(res);
    of_res.attach(res);
    res->add_option("--emin", cfg_res.e_min, "Search window lower edge");
    res->add_option("--emax", cfg_res.e_max, "Search window upper edge");
    res->add_option("--seed-gamma", cfg_res.seed_gamma, "Initial guess for Gamma/2");
    res->add_option("--tol", cfg_res.tol, "Relative residual tolerance on |D|");
    res->add_option("--max-iter", cfg_res.max_iter, "Newton iteration cap");
    res->add_option("--max-poles", cfg_res.max_poles, "Maximum number of reported poles");
    res->add_option("--points", cfg_res.profile_points, "Seeding grid resolution");

    double td_emin = 1.0, td_emax = 20.0;
    int td_points = 2000;
    bool td_peaks = false;
    auto* td = app.add_subcommand("timedelay", "Wigner time-delay profile tau(E)");
    mf_td.attach(td);
    of_td.attach(td);
    td->add_option("--emin", td_emin, "Grid lower edge");
    td->add_option("--emax", td_emax, "Grid upper edge");
    td->add_option("--points", td_points, "Grid size (>= 16)");
    td->add_flag("--peaks", td_peaks, "Append refined peak positions");

    int gam_index = 0, gam_samples = 801;
    double gam_xmin = -8.0, gam_xmax = 0.0;
    auto* gam = app.add_subcommand("gamow", "Resonant eigenstate profile at a complex pole");
    mf_gam.attach(gam);
    of_gam.attach(gam);
    gam->add_option("--pole-index", gam_index, "Resonance index n");
    gam->add_option("--xmin", gam_xmin, "Left edge of the spatial grid");
    gam->add_option("--xmax", gam_xmax, "Right edge of the spatial grid");
    gam->add_option("--samples", gam_samples, "Number of spatial samples (>= 3)");
    gam->add_option("--emin", cfg_gam.e_min, "Pole search window lower edge");
    gam->add_option("--emax", cfg_gam.e_max, "Pole search window upper edge");

    double ver_emin = 1.0, ver_emax = 30.0;
    int ver_samples = 100;
    auto* ver = app.add_subcommand("verify", "Closed form vs direct integration and identity suite");
    mf_ver.attach(ver);
    ver->add_option("--emin", ver_emin, "Oracle grid lower edge");
    ver->add_option("--emax", ver_emax, "Oracle grid upper edge");
    ver->add_option("--samples", ver_samples, "Oracle grid size");

    auto* t1 = app.add_subcommand("table1", "Both two-piece reference systems end to end");
    of_t1.attach(t1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (res->parsed()) return cmd_resonances(mf_res, cfg_res, of_res);
        if (td->parsed()) {
            if (td_points < 16) throw std::invalid_argument("timedelay requires --points >= 16");
            return cmd_timedelay(mf_td, td_emin, td_emax, td_points, td_peaks, of_td);
        }
        if (gam->parsed())
            return cmd_gamow(mf_gam, cfg_gam, gam_index, gam_xmin, gam_xmax, gam_samples, of_gam);
        if (ver->parsed()) return cmd_verify(mf_ver, ver_emin, ver_emax, ver_samples);
        if (t1->parsed()) return cmd_table1(of_t1);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}

// spelab: simulate, diagnose, and cross-validate wave breaking in the
// short-pulse equation. Emits CSV/JSON for plotting.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spe/analysis.hpp"
#include "spe/characteristics.hpp"
#include "spe/criteria.hpp"
#include "spe/elliptic.hpp"
#include "spe/errors.hpp"
#include "spe/exact.hpp"
#include "spe/invariants.hpp"
#include "spe/io.hpp"
#include "spe/pde.hpp"
#include "spe/quadrature.hpp"
#include "spe/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitNumerical = 4;

struct FamilyOpts {
    std::string family;
    double a = 0.5;
    double b = 1.0;
    double m = 0.32;
    std::string path;
};

void add_family_flags(CLI::App* cmd, FamilyOpts& fam) {
    cmd->add_option("--family", fam.family, "initial-data family: cosine|gaussian|pulse|file")
        ->required();
    cmd->add_option("--a", fam.a, "amplitude (cosine, gaussian)");
    cmd->add_option("--b", fam.b, "steepness (gaussian)");
    cmd->add_option("--m", fam.m, "pulse modulus in (0,1)");
    cmd->add_option("--path", fam.path, "CSV field file (family=file)");
}

// Box families are centered at L/2 so their tails meet at the seam.
spe::PeriodicField build_periodic_initial(const FamilyOpts& fam, std::size_t n, double L) {
    if (fam.family == "cosine") {
        return spe::PeriodicField::sample(
            L, n, [&](double x) { return fam.a * std::cos(2.0 * M_PI * x / L); });
    }
    if (fam.family == "gaussian") {
        auto f = spe::PeriodicField::sample(L, n, [&](double x) {
            return spe::gaussian_profile(fam.a, fam.b, x - 0.5 * L);
        });
        return f.project_mean_zero();
    }
    if (fam.family == "pulse") {
        const spe::PulseParams p(fam.m);
        std::vector<double> xs(n);
        for (std::size_t j = 0; j < n; ++j)
            xs[j] = L * static_cast<double>(j) / static_cast<double>(n) - 0.5 * L;
        auto us = spe::pulse_sample(p, 0.0, xs);
        spe::PeriodicField f(L, std::move(us));
        return f.project_mean_zero();
    }
    if (fam.family == "file") return spe::load_field_csv(fam.path);
    throw spe::InvalidArgument("unknown family: " + fam.family);
}

std::string out_path(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    return (fs::path(dir) / name).string();
}

json report_to_json(const spe::CriterionReport& rep) {
    json j;
    j["f1_score"] = rep.f1_score;
    j["f2_score"] = rep.f2_score;
    j["i1_empty"] = rep.i1_empty;
    j["i2_empty"] = rep.i2_empty;
    j["breaking_predicted"] = rep.breaking_predicted;
    j["argmax_x"] = rep.argmax_x;
    return j;
}

json invariants_to_json(const spe::InvariantSet& inv) {
    json j;
    j["e_minus1"] = inv.e_minus1;
    j["e0"] = inv.e0;
    j["e1"] = inv.e1;
    j["e2"] = inv.e2;
    j["domain"] = inv.domain == spe::Domain::line ? "line" : "circle";
    return j;
}

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_simulate(const FamilyOpts& fam, const spe::SimConfig& cfg, const std::string& out_dir,
                 const std::map<std::string, std::string>& params) {
    Stopwatch clock;
    const auto u0 = build_periodic_initial(fam, cfg.n, cfg.L);
    const spe::Trajectory traj = spe::simulate(u0, cfg);

    spe::RunManifest manifest;
    manifest.command = "simulate";
    manifest.params = params;
    manifest.stop_reason = spe::to_string(traj.stop_reason);

    const std::string traj_path = out_path(out_dir, "trajectory.csv");
    spe::write_trajectory_csv(traj, traj_path);
    manifest.outputs.push_back(traj_path);
    for (std::size_t i = 0; i < traj.fields.size(); ++i) {
        char name[40];
        std::snprintf(name, sizeof(name), "snapshot_%06zu.csv", i);
        const std::string p = out_path(out_dir, name);
        spe::write_snapshot_csv(traj.fields[i], p);
        manifest.outputs.push_back(p);
    }

    json summary;
    summary["stop_reason"] = spe::to_string(traj.stop_reason);
    summary["steps"] = traj.step_times.size() - 1;
    summary["final_time"] = traj.times.back();
    summary["final_e0_drift"] = traj.final_e0_drift;
    summary["final_e1_drift"] = traj.final_e1_drift;
    summary["w_last"] = traj.w_series.back();
    try {
        const spe::BlowupFit fit = spe::fit_blowup(traj.step_times, traj.w_series);
        summary["fit"] = {{"C", fit.c},
                          {"T", fit.t_break},
                          {"A", fit.a},
                          {"B", fit.b},
                          {"rms_residual", fit.rms_residual},
                          {"window", {fit.window_lo, fit.window_hi}},
                          {"count", fit.count}};
    } catch (const spe::NotBreaking& e) {
        summary["fit"] = nullptr;
        summary["fit_error"] = e.what();
    }
    const std::string sum_path = out_path(out_dir, "summary.json");
    {
        std::ofstream out(sum_path);
        out << summary.dump(2) << '\n';
    }
    manifest.outputs.push_back(sum_path);
    manifest.duration_ms = clock.ms();
    spe::write_manifest(manifest, out_path(out_dir, "simulate_manifest.json"));
    std::cout << summary.dump(2) << std::endl;
    return 0;
}

int cmd_criteria(const FamilyOpts& fam, const std::string& domain, bool sup_bounds,
                 const std::string& out_dir, const std::map<std::string, std::string>& params) {
    Stopwatch clock;
    json j;
    spe::InvariantSet inv;
    spe::SampledProfile prof;

    if (domain == "circle") {
        if (fam.family != "cosine")
            throw spe::InvalidArgument("circle criteria expect the cosine family");
        const auto closed = spe::cosine_closed_invariants(fam.a);
        inv.e0 = closed.e0;
        inv.e1 = closed.e1;
        inv.domain = spe::Domain::circle;
        prof = spe::cosine_profile_sampled(fam.a);
        const auto bounds = spe::breaking_bounds_periodic(inv);
        j["bounds"] = {{"f0", bounds.f0}, {"f1", bounds.f1}};
        j["report"] = report_to_json(spe::evaluate_breaking_criterion(prof, bounds));
    } else if (domain == "line") {
        spe::BreakingBounds bounds;
        bool bounds_ok = true;
        if (fam.family == "gaussian") {
            inv = spe::gaussian_line_invariants(fam.a, fam.b);
            prof = spe::gaussian_line_profile(fam.a, fam.b);
        } else if (fam.family == "pulse") {
            const spe::PulseParams p(fam.m);
            inv = spe::pulse_line_invariants(p);
            const double Y = spe::pulse_sampling_half_width(p, 0.0);
            std::vector<double> xs(40001);
            for (std::size_t i = 0; i < xs.size(); ++i)
                xs[i] = -Y + 2.0 * Y * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
            prof = spe::pulse_profile(p, 0.0, xs);
        } else {
            throw spe::InvalidArgument("line criteria expect the gaussian or pulse family");
        }
        j["wellposedness_margin"] = spe::wellposedness_margin(inv);
        if (sup_bounds) {
            if (fam.family != "pulse")
                throw spe::InvalidArgument("--sup-bounds is available for the pulse family only");
            bounds = spe::pulse_sup_bounds(spe::PulseParams(fam.m));
        } else {
            try {
                bounds = spe::breaking_bounds_line(inv);
            } catch (const spe::CriterionInapplicable& e) {
                bounds_ok = false;
                j["criterion_inapplicable"] = e.what();
            }
        }
        if (bounds_ok) {
            j["bounds"] = {{"f0", bounds.f0}, {"f1", bounds.f1}};
            j["report"] = report_to_json(spe::evaluate_breaking_criterion(prof, bounds));
        }
    } else {
        throw spe::InvalidArgument("--domain must be line or circle");
    }
    j["invariants"] = invariants_to_json(inv);

    const std::string path = out_path(out_dir, "criteria.json");
    {
        std::ofstream out(path);
        out << j.dump(2) << '\n';
    }
    spe::RunManifest manifest;
    manifest.command = "criteria";
    manifest.params = params;
    manifest.outputs.push_back(path);
    manifest.duration_ms = clock.ms();
    spe::write_manifest(manifest, out_path(out_dir, "criteria_manifest.json"));
    std::cout << j.dump(2) << std::endl;
    return 0;
}

void write_char_csv(const spe::CharTrajectory& traj, const std::string& path) {
    std::ofstream out(path);
    out << "t,V,W\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        out << spe::format_real(traj.times[i]) << ',' << spe::format_real(traj.states[i].v) << ','
            << spe::format_real(traj.states[i].w) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"short-pulse equation laboratory"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.require_subcommand(0, 1);

    std::string seed_check;
    app.add_option("--seed-check", seed_check, "verify a previously written run manifest");

    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();

    // ---- simulate ----
    FamilyOpts sim_fam;
    spe::SimConfig cfg;
    auto* sim = app.add_subcommand("simulate", "evolve the periodic Cauchy problem");
    add_family_flags(sim, sim_fam);
    sim->add_option("--n", cfg.n, "grid size (even, >= 8)")->capture_default_str();
    sim->add_option("--L", cfg.L, "domain length")->capture_default_str();
    sim->add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
    sim->add_option("--cfl", cfg.cfl, "advection safety factor")->capture_default_str();
    sim->add_option("--save-every", cfg.save_every, "steps between saves")->capture_default_str();
    sim->add_option("--w-max", cfg.w_max, "blow-up cap on W")->capture_default_str();
    sim->add_option("--drift-tol", cfg.drift_tol, "relative E1 drift stop (<=0 disables)")
        ->capture_default_str();
    sim->add_flag("--dealias,!--no-dealias", cfg.dealias, "2/3 dealiasing of the cubic term")
        ->capture_default_str();
    sim->add_flag("--dispersionless", cfg.dispersionless, "drop the antiderivative term");

    // ---- criteria ----
    FamilyOpts crit_fam;
    std::string crit_domain = "line";
    bool crit_sup = false;
    auto* crit = app.add_subcommand("criteria", "evaluate breaking and well-posedness criteria");
    add_family_flags(crit, crit_fam);
    crit->add_option("--domain", crit_domain, "line|circle")->capture_default_str();
    crit->add_flag("--sup-bounds", crit_sup, "use supremum-based bounds (pulse only)");

    // ---- characteristics ----
    auto* chr = app.add_subcommand("characteristics", "comparison-system experiments");
    bool chr_lower = false, chr_upper = false, chr_full = false, chr_bound = false;
    double chr_v0 = 1.0, chr_w0 = 2.0, chr_f0 = 1.0, chr_f1 = 1.0;
    spe::OdeOptions ode;
    chr->add_flag("--lower", chr_lower, "integrate the lower comparison system");
    chr->add_flag("--upper", chr_upper, "evaluate the closed-form upper solution");
    chr->add_flag("--full", chr_full, "integrate the full system with sinusoidal closures");
    chr->add_flag("--bound", chr_bound, "print the closed-form blow-up time bound");
    chr->add_option("--v0", chr_v0, "initial slope V(0)")->capture_default_str();
    chr->add_option("--w0", chr_w0, "initial W(0)")->capture_default_str();
    chr->add_option("--f0", chr_f0, "bound F0")->capture_default_str();
    chr->add_option("--f1", chr_f1, "bound F1")->capture_default_str();
    chr->add_option("--dt", ode.dt, "base time step")->capture_default_str();
    chr->add_option("--t-max", ode.t_max, "integration horizon")->capture_default_str();
    chr->add_option("--v-cap", ode.v_cap, "blow-up cap on V")->capture_default_str();

    // ---- pulse ----
    auto* pul = app.add_subcommand("pulse", "exact modulated-pulse diagnostics");
    double pul_m = 0.32, pul_t = 0.0, pul_xmin = -20.0, pul_xmax = 20.0;
    std::size_t pul_num = 2001;
    bool pul_invert = false, pul_residual = false, pul_invariants = false, pul_sample = false;
    pul->add_option("--m", pul_m, "pulse modulus")->capture_default_str();
    pul->add_flag("--check-invertible", pul_invert, "report invertibility of X(., t)");
    pul->add_flag("--residual", pul_residual, "characteristic residual and round-trip checks");
    pul->add_flag("--invariants", pul_invariants, "line invariants and 32m identity");
    pul->add_flag("--sample", pul_sample, "sample u(x, t) to CSV");
    pul->add_option("--t", pul_t, "sample time")->capture_default_str();
    pul->add_option("--x-min", pul_xmin)->capture_default_str();
    pul->add_option("--x-max", pul_xmax)->capture_default_str();
    pul->add_option("--num", pul_num, "sample count")->capture_default_str();

    // ---- scan ----
    auto* scn = app.add_subcommand("scan", "parameter sweeps and threshold search");
    bool scn_cosine = false, scn_gauss = false, scn_threshold = false;
    double scn_amin = 0.5, scn_amax = 2.0, scn_bmin = 0.5, scn_bmax = 2.0, scn_tol = 1e-3;
    std::size_t scn_anum = 4, scn_bnum = 4;
    spe::SimConfig scn_cfg;
    scn->add_flag("--cosine", scn_cosine, "cosine family sweep (simulate + fit per a)");
    scn->add_flag("--gaussian", scn_gauss, "gaussian certificate map over (a, b)");
    scn->add_flag("--threshold", scn_threshold, "bisect the circle criterion boundary in a");
    scn->add_option("--a-min", scn_amin)->capture_default_str();
    scn->add_option("--a-max", scn_amax)->capture_default_str();
    scn->add_option("--a-num", scn_anum)->capture_default_str();
    scn->add_option("--b-min", scn_bmin)->capture_default_str();
    scn->add_option("--b-max", scn_bmax)->capture_default_str();
    scn->add_option("--b-num", scn_bnum)->capture_default_str();
    scn->add_option("--tol", scn_tol, "bisection tolerance")->capture_default_str();
    scn->add_option("--n", scn_cfg.n, "grid size per run")->capture_default_str();
    scn->add_option("--t-end", scn_cfg.t_end, "horizon per run")->capture_default_str();
    scn->add_option("--cfl", scn_cfg.cfl)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    }

    try {
        if (!seed_check.empty()) {
            std::string msg;
            const bool ok = spe::check_manifest(seed_check, msg);
            std::cout << (ok ? "manifest ok" : "manifest check FAILED: " + msg) << std::endl;
            return ok ? 0 : kExitNumerical;
        }

        auto collect_params = [&](const CLI::App* cmd) {
            std::map<std::string, std::string> params;
            for (const auto* opt : cmd->get_options())
                if (!opt->results().empty()) params[opt->get_name()] = opt->results().front();
            params["out_dir"] = out_dir;
            return params;
        };

        if (sim->parsed()) return cmd_simulate(sim_fam, cfg, out_dir, collect_params(sim));

        if (crit->parsed())
            return cmd_criteria(crit_fam, crit_domain, crit_sup, out_dir, collect_params(crit));

        if (chr->parsed()) {
            Stopwatch clock;
            json j;
            spe::RunManifest manifest;
            manifest.command = "characteristics";
            manifest.params = collect_params(chr);
            const spe::BreakingBounds bounds{chr_f0, chr_f1};
            if (chr_bound || chr_lower) {
                try {
                    j["time_bound"] = spe::blowup_time_bound(chr_v0, chr_w0, bounds);
                } catch (const spe::CriterionInapplicable& e) {
                    j["time_bound"] = nullptr;
                    j["time_bound_error"] = e.what();
                }
            }
            if (chr_lower) {
                const auto traj = spe::integrate_lower_system(chr_v0, chr_w0, bounds, ode);
                j["lower"] = {{"blew_up", traj.blew_up},
                              {"t_star", traj.blew_up ? json(traj.t_star) : json(nullptr)},
                              {"steps", traj.times.size() - 1}};
                const std::string p = out_path(out_dir, "lower_system.csv");
                write_char_csv(traj, p);
                manifest.outputs.push_back(p);
            }
            if (chr_upper) {
                j["upper"] = {{"t_star", spe::upper_blowup_time(chr_v0, chr_f1)}};
            }
            if (chr_full) {
                // bound-respecting sinusoidal closures, consistent at t = 0
                const double u0c = std::clamp(chr_w0 / chr_v0, -chr_f1, chr_f1);
                const double th0 = std::asin(u0c / chr_f1);
                const double om = chr_f1 > 0.0 ? 0.9 * chr_f0 / chr_f1 : 0.0;
                auto u_fn = [=](double t) { return chr_f1 * std::sin(om * t + th0); };
                auto g_fn = [=](double t) { return chr_f1 * om * std::cos(om * t + th0); };
                const auto traj = spe::integrate_full_system(chr_v0, chr_w0, bounds, u_fn, g_fn, ode);
                j["full"] = {{"blew_up", traj.blew_up},
                             {"t_star", traj.blew_up ? json(traj.t_star) : json(nullptr)},
                             {"steps", traj.times.size() - 1}};
                const std::string p = out_path(out_dir, "full_system.csv");
                write_char_csv(traj, p);
                manifest.outputs.push_back(p);
            }
            if (!chr_lower && !chr_upper && !chr_full && !chr_bound)
                throw spe::InvalidArgument("characteristics: pick --lower/--upper/--full/--bound");
            manifest.duration_ms = clock.ms();
            spe::write_manifest(manifest, out_path(out_dir, "characteristics_manifest.json"));
            std::cout << j.dump(2) << std::endl;
            return 0;
        }

        if (pul->parsed()) {
            Stopwatch clock;
            json j;
            spe::RunManifest manifest;
            manifest.command = "pulse";
            manifest.params = collect_params(pul);
            const spe::PulseParams p(pul_m);
            j["m"] = pul_m;
            j["m_critical"] = spe::PulseParams::critical_modulus();
            if (pul_invert) {
                double jac_min = 1e300;
                for (int iy = 0; iy <= 2000; ++iy)
                    for (double tt : {0.0, 0.5, 1.0, 2.0, 3.0}) {
                        const double y = -30.0 + 60.0 * iy / 2000.0;
                        jac_min = std::min(jac_min, spe::pulse_x_jacobian(p, y, tt));
                    }
                j["jacobian_min"] = jac_min;
                j["invertible"] = p.invertible();
            }
            if (pul_residual) {
                double worst = 0.0, round_trip = 0.0;
                for (int iy = 0; iy <= 400; ++iy) {
                    const double y = -20.0 + 40.0 * iy / 400.0;
                    const auto jt = spe::pulse_eval<spe::Jet>(p, spe::Jet(y), spe::Jet(pul_t, 1.0));
                    worst = std::max(worst, std::abs(jt.x.d + 0.5 * jt.u.f * jt.u.f));
                }
                if (p.invertible()) {
                    std::vector<double> xs(401), ys(401);
                    for (int i = 0; i <= 400; ++i) {
                        ys[i] = -15.0 + 30.0 * i / 400.0;
                        xs[i] = spe::pulse_eval<double>(p, ys[i], pul_t).x;
                    }
                    const auto us = spe::pulse_sample(p, pul_t, xs);
                    for (int i = 0; i <= 400; ++i)
                        round_trip = std::max(
                            round_trip,
                            std::abs(us[i] - spe::pulse_eval<double>(p, ys[i], pul_t).u));
                    j["round_trip_max_error"] = round_trip;
                }
                j["characteristic_residual_max"] = worst;
            }
            if (pul_invariants) {
                const auto inv = spe::pulse_line_invariants(p);
                j["invariants"] = invariants_to_json(inv);
                j["wellposedness_margin"] = spe::wellposedness_margin(inv);
                j["margin_32m"] = 32.0 * pul_m;
            }
            if (pul_sample) {
                if (!p.invertible())
                    throw spe::NotInvertible("pulse --sample: m >= sin(pi/8), X not invertible");
                std::vector<double> xs(pul_num);
                for (std::size_t i = 0; i < pul_num; ++i)
                    xs[i] = pul_xmin + (pul_xmax - pul_xmin) * static_cast<double>(i) /
                                           static_cast<double>(pul_num - 1);
                const auto us = spe::pulse_sample(p, pul_t, xs);
                const std::string path = out_path(out_dir, "pulse_samples.csv");
                std::ofstream out(path);
                out << "x,u\n";
                for (std::size_t i = 0; i < pul_num; ++i)
                    out << spe::format_real(xs[i]) << ',' << spe::format_real(us[i]) << '\n';
                manifest.outputs.push_back(path);
            }
            manifest.duration_ms = clock.ms();
            spe::write_manifest(manifest, out_path(out_dir, "pulse_manifest.json"));
            std::cout << j.dump(2) << std::endl;
            return 0;
        }

        if (scn->parsed()) {
            Stopwatch clock;
            json j;
            spe::RunManifest manifest;
            manifest.command = "scan";
            manifest.params = collect_params(scn);
            auto linspace = [](double lo, double hi, std::size_t num) {
                std::vector<double> v(num);
                for (std::size_t i = 0; i < num; ++i)
                    v[i] = num == 1 ? lo
                                    : lo + (hi - lo) * static_cast<double>(i) /
                                          static_cast<double>(num - 1);
                return v;
            };
            if (scn_threshold) {
                const double boundary = spe::threshold_scan(
                    [](double a) {
                        const auto closed = spe::cosine_closed_invariants(a);
                        spe::InvariantSet inv;
                        inv.e0 = closed.e0;
                        inv.e1 = closed.e1;
                        inv.domain = spe::Domain::circle;
                        return spe::evaluate_breaking_criterion(spe::cosine_profile_sampled(a),
                                                                spe::breaking_bounds_periodic(inv))
                            .breaking_predicted;
                    },
                    scn_amin, scn_amax, scn_tol);
                j["threshold_a"] = boundary;
            }
            if (scn_cosine) {
                const auto rows = spe::scan_cosine(linspace(scn_amin, scn_amax, scn_anum), scn_cfg);
                const std::string path = out_path(out_dir, "cosine_scan.csv");
                spe::write_cosine_scan_csv(rows, path);
                manifest.outputs.push_back(path);
                j["cosine_rows"] = rows.size();
            }
            if (scn_gauss) {
                const auto rows = spe::scan_gaussian(linspace(scn_amin, scn_amax, scn_anum),
                                                     linspace(scn_bmin, scn_bmax, scn_bnum));
                const std::string path = out_path(out_dir, "gaussian_scan.csv");
                spe::write_gaussian_scan_csv(rows, path);
                manifest.outputs.push_back(path);
                j["gaussian_rows"] = rows.size();
            }
            if (!scn_threshold && !scn_cosine && !scn_gauss)
                throw spe::InvalidArgument("scan: pick --cosine/--gaussian/--threshold");
            manifest.duration_ms = clock.ms();
            spe::write_manifest(manifest, out_path(out_dir, "scan_manifest.json"));
            std::cout << j.dump(2) << std::endl;
            return 0;
        }

        std::cout << app.help() << std::endl;
        return 0;
    } catch (const spe::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const spe::ZeroMassViolation& e) {
        std::cerr << "invalid input: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const spe::NotInvertible& e) {
        std::cerr << "invalid input: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const spe::DegenerateProfile& e) {
        std::cerr << "invalid input: " << e.what() << std::endl;
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << std::endl;
        return kExitNumerical;
    }
}

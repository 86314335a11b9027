// Command-line front end: potential curves, extremum sweeps and the
// self-check oracle suite, driven by config files or built-in presets.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atompot/analysis.hpp"
#include "atompot/config.hpp"
#include "atompot/constants.hpp"
#include "atompot/core.hpp"
#include "atompot/greens.hpp"
#include "atompot/material.hpp"
#include "atompot/potentials.hpp"

namespace {

using namespace atompot;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string out_path;
    std::string mode;
    bool additive_only = false;
    unsigned threads = 1;
};

ScenarioConfig load_config(const CommonArgs& args) {
    if (!args.preset.empty() && !args.config_path.empty())
        throw std::invalid_argument("give either a config file or --preset, not both");
    ScenarioConfig cfg;
    if (!args.preset.empty()) {
        cfg = preset_by_name(args.preset);
    } else if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in)
            throw std::invalid_argument("cannot open config file '" + args.config_path + "'");
        cfg = parse_config(in);
    } else {
        throw std::invalid_argument("a config file or --preset is required");
    }
    if (!args.mode.empty())
        cfg.mode = args.mode;
    if (!args.out_path.empty())
        cfg.out_path = args.out_path;
    return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config_path, "scenario config file");
    cmd->add_option("--preset", args.preset, "built-in scenario: fig2, fig3 or fig4");
    cmd->add_option("--out", args.out_path, "output path (overrides [output] path)");
    cmd->add_option("--mode", args.mode, "nonretarded or full (overrides [sweep] mode)")
        ->check(CLI::IsMember({"nonretarded", "full"}));
    cmd->add_flag("--additive-only", args.additive_only, "suppress the u_lcp component");
    cmd->add_option("--threads", args.threads, "worker threads for curve sampling");
}

int cmd_curve(const CommonArgs& args) {
    const ScenarioConfig cfg = load_config(args);
    const AtomSpecies atom = cfg.atom();
    const SurfaceModel surface = cfg.surface();
    const LaserSpec laser = cfg.laser();
    const SweepPlan plan = cfg.plan();
    const QuadratureConfig quad;

    const PotentialCurve curve =
        potential_curve(atom, surface, laser, plan, quad, args.additive_only, args.threads);

    std::ostringstream out;
    const bool scaled = cfg.unit == "hbar_delta";
    const double escale = constants::hbar * std::fabs(laser.detuning);
    out << "z_m,u_cp_J,u_l_J,u_lcp_J,u_tot_J";
    if (scaled)
        out << ",u_tot_hbar_delta";
    out << "\n";
    for (std::size_t i = 0; i < curve.z_grid.size(); ++i) {
        out << fmt17(curve.z_grid[i]) << ',' << fmt17(curve.u_cp[i]) << ','
            << fmt17(curve.u_l[i]) << ',' << fmt17(curve.u_lcp[i]) << ','
            << fmt17(curve.u_tot[i]);
        if (scaled)
            out << ',' << fmt17(curve.u_tot[i] / escale);
        out << "\n";
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + cfg.out_path + "'");
    file << out.str();
    std::cerr << "wrote " << curve.z_grid.size() << " rows to " << cfg.out_path << "\n";
    return 0;
}

int cmd_extrema(const CommonArgs& args) {
    const ScenarioConfig cfg = load_config(args);
    const AtomSpecies atom = cfg.atom();
    const SurfaceModel surface = cfg.surface();
    const LaserSpec laser = cfg.laser();
    const SweepPlan plan = cfg.plan();
    const QuadratureConfig quad;
    if (plan.powers.empty())
        throw std::invalid_argument("extrema: [sweep] powers list is required");

    const PowerSweepResult sweep =
        power_sweep(atom, surface, laser, plan, quad, args.additive_only, args.threads);
    for (const auto& err : sweep.errors)
        std::cerr << "warning: " << err << "\n";

    std::ostringstream out;
    out << "power_W,kind,z_m,value_J\n";
    for (const auto& rec : sweep.records)
        out << fmt17(rec.power) << ',' << to_string(rec.kind) << ',' << fmt17(rec.z_position)
            << ',' << fmt17(rec.value) << "\n";
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + cfg.out_path + "'");
    file << out.str();
    std::cerr << "wrote " << sweep.records.size() << " records to " << cfg.out_path << "\n";
    return sweep.errors.empty() ? 0 : 1;
}

int cmd_check(const CommonArgs& args, double c3_scale) {
    const ScenarioConfig cfg = load_config(args);
    const AtomSpecies atom = cfg.atom();
    const SurfaceModel surface = cfg.surface();
    const LaserSpec laser_template = cfg.laser();
    const QuadratureConfig quad;
    bool all_pass = true;
    auto report = [&](const char* name, bool pass, double worst, const char* what) {
        all_pass = all_pass && pass;
        std::printf("%s %-24s max %s = %.3e\n", pass ? "PASS" : "FAIL", name, what, worst);
    };

    // product identity sweep, nonretarded closed forms
    {
        double q_factor = 60.0;
        if (const auto* pd = std::get_if<PlasmonDirect>(&surface))
            q_factor = pd->sign * pd->q;
        const SweepPlan plan{50e-9, 2e-6, 512, GridKind::logarithmic, {}, EvalMode::nonretarded};
        const std::vector<double> z = make_grid(plan);
        std::vector<double> powers{1e-6, 10e-6, 39e-6, 100e-6};
        double worst = 0.0;
        const double c3 = c3_scale * c3_perfect_conductor(atom);
        auto residual_at = [&](const LaserSpec& laser, double zz) {
            const double lhs = u_lcp_nonretarded(atom, laser, q_factor, zz) * constants::hbar *
                               laser.detuning;
            const double rhs = u_l(atom, laser, zz) * u_cp_nonretarded(c3, zz) * q_factor;
            const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
            return scale == 0.0 ? 0.0 : std::fabs(lhs - rhs) / scale;
        };
        if (std::holds_alternative<EvanescentField>(laser_template.field)) {
            for (double p : powers) {
                LaserSpec laser = laser_template;
                std::get<EvanescentField>(laser.field).power = p;
                for (double zz : z)
                    worst = std::max(worst, residual_at(laser, zz));
            }
        } else {
            for (double zz : z)
                worst = std::max(worst, residual_at(laser_template, zz));
        }
        report("eq-identity", worst < 1e-6, worst, "residual");
    }

    // full-quadrature u_lcp against the closed nonretarded form
    {
        SurfaceModel check_surface = surface;
        if (std::holds_alternative<PlasmonDirect>(surface) ||
            std::holds_alternative<PerfectMirror>(surface))
            check_surface = ConstantEps{2.286144}; // n = 1.512
        LaserSpec laser = laser_template;
        laser.theta = constants::pi / 2.0;
        const double omega_l = atom.omega10 + laser.detuning;
        const double z_hi = 0.02 * constants::c / omega_l;
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double zz = z_hi * (0.2 + 0.2 * i); // 0.2 .. 1.0 x z_hi
            const double full = u_lcp(atom, check_surface, laser, zz, quad);
            const double re_rp = rp_nonretarded(check_surface, {omega_l, 0.0}).real();
            const double closed = u_lcp_nonretarded(atom, laser, re_rp, zz);
            const double scale = std::max(std::fabs(full), std::fabs(closed));
            worst = std::max(worst, scale == 0.0 ? 0.0 : std::fabs(full - closed) / scale);
        }
        report("nonretarded-convergence", worst < 0.01, worst, "relative error");
    }

    // large-eps quadrature against the perfect-mirror closed form
    {
        const SurfaceModel big_eps = ConstantEps{1e8};
        const double omega = atom.omega10;
        double worst = 0.0;
        for (int i = 0; i < 7; ++i) {
            const double zz = 10e-9 * std::pow(100.0, i / 6.0); // 10 nm .. 1 um
            const GreensDiag gq = scattering_green_real_quadrature(big_eps, zz, omega, quad);
            const GreensDiag gm = perfect_mirror_green_real(zz, omega);
            const GreensDiag hq = scattering_green_imag_quadrature(big_eps, zz, omega, quad);
            const GreensDiag hm = perfect_mirror_green_imag(zz, omega);
            auto rel = [](complexd a, complexd b) { return std::abs(a - b) / std::abs(b); };
            worst = std::max({worst, rel(gq.gxx, gm.gxx), rel(gq.gzz, gm.gzz),
                              rel(hq.gxx, hm.gxx), rel(hq.gzz, hm.gzz)});
        }
        report("mirror-oracle", worst < 1e-3, worst, "relative error");
    }

    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atom-surface potential toolkit"};
    app.require_subcommand(1);

    CommonArgs curve_args, extrema_args, check_args;
    double c3_scale = 1.0;

    auto* curve = app.add_subcommand("curve", "sample the potential components on a z-grid");
    add_common(curve, curve_args);
    auto* extrema = app.add_subcommand("extrema", "locate minima/maxima across laser powers");
    add_common(extrema, extrema_args);
    auto* check = app.add_subcommand("check", "run the built-in oracle suite");
    add_common(check, check_args);
    check->add_option("--c3-scale", c3_scale,
                      "scale factor applied to C3 in the identity check (fault injection)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (curve->parsed())
            return cmd_curve(curve_args);
        if (extrema->parsed())
            return cmd_extrema(extrema_args);
        return cmd_check(check_args, c3_scale);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

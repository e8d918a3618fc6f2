#pragma once

///
/// \file cli.hpp
///
/// Command dispatcher behind the disc-analysis executable. Every command
/// writes one JSON report (stdout or --output) and returns
///   0  pass / feasible
///   1  mathematical "no" (infeasible, bound violated)
///   2  invalid input or usage error (usage text on the error stream)
///   3  numerical failure
///

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <disc/carleson.hpp>
#include <disc/error.hpp>
#include <disc/geometry.hpp>
#include <disc/io.hpp>
#include <disc/pick.hpp>
#include <disc/polynomial.hpp>
#include <disc/quadrature.hpp>
#include <disc/sequences.hpp>

namespace disc::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { pass = 0, no = 1, invalid = 2, numerical = 3 };

struct RunConfig {
    std::string input;
    std::string output;
    std::string disc;
    std::string f;
    std::string sigma;
    std::string blaschke;
    double tol = kDefaultPsdTolerance;
    std::uint64_t seed = 0;
    double p = 2.0;
    std::vector<double> delta_grid{0.05, 0.1, 0.2, 0.4};
    std::size_t zeta_samples = 16;
    std::optional<std::size_t> grid_radial;
    std::optional<std::size_t> grid_angular;
    std::size_t mc_samples = SphereSampler::default_mc_samples;
    double alpha = 20.0;
    double delta = 0.1;
    std::optional<double> radius;
    std::size_t candidates = 20000;
    std::size_t min_count = 3;
    unsigned k = 2;
    std::vector<double> base;
};

namespace detail {

inline json config_echo(const RunConfig& c, const std::vector<std::string>& used) {
    json j = json::object();
    for (const auto& key : used) {
        if (key == "input") j[key] = c.input;
        else if (key == "output") j[key] = c.output;
        else if (key == "disc") j[key] = c.disc;
        else if (key == "f") j[key] = c.f;
        else if (key == "sigma") j[key] = c.sigma;
        else if (key == "blaschke") j[key] = c.blaschke;
        else if (key == "tol") j[key] = c.tol;
        else if (key == "seed") j[key] = c.seed;
        else if (key == "p") j[key] = c.p;
        else if (key == "delta-grid") j[key] = c.delta_grid;
        else if (key == "zeta-samples") j[key] = c.zeta_samples;
        else if (key == "grid-radial") j[key] = c.grid_radial ? json(*c.grid_radial) : json();
        else if (key == "grid-angular") j[key] = c.grid_angular ? json(*c.grid_angular) : json();
        else if (key == "mc-samples") j[key] = c.mc_samples;
        else if (key == "alpha") j[key] = c.alpha;
        else if (key == "delta") j[key] = c.delta;
        else if (key == "radius") j[key] = c.radius ? json(*c.radius) : json();
        else if (key == "candidates") j[key] = c.candidates;
        else if (key == "min-count") j[key] = c.min_count;
        else if (key == "k") j[key] = c.k;
        else if (key == "base") j[key] = c.base;
    }
    return j;
}

inline json eigen_to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v[i]);
    }
    return a;
}

inline void require_file(const std::string& path, const char* flag) {
    if (path.empty()) {
        fail(ErrorKind::shape, std::string("missing required flag --") + flag);
    }
}

inline DiscGrid disc_grid(const RunConfig& c) {
    return DiscGrid(c.grid_radial.value_or(DiscGrid::default_radial),
                    c.grid_angular.value_or(DiscGrid::default_angular));
}

inline SphereSampler sphere_sampler(const RunConfig& c, std::size_t n) {
    return SphereSampler::for_dimension(n, c.grid_radial.value_or(SphereSampler::default_polar),
                                        c.grid_angular.value_or(SphereSampler::default_angular),
                                        c.mc_samples, c.seed);
}

inline json sphere_echo(const SphereSampler& s) {
    return {{"mode", s.mode() == SphereMode::product_rule ? "product_rule" : "monte_carlo"},
            {"dimension", s.dim()},
            {"sample_count", s.sample_count()},
            {"seed", s.seed()}};
}

inline CPoint base_point(const std::vector<double>& v, std::size_t n) {
    if (v.size() != 2 * n) {
        fail(ErrorKind::shape, "--base needs " + std::to_string(2 * n) +
                                   " numbers (re,im per coordinate)");
    }
    std::vector<cplx> c(n);
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = cplx(v[2 * j], v[2 * j + 1]);
    }
    return CPoint(std::move(c));
}

/// A sequence file, or a `seq net` report carrying one.
inline PointSequence sequence_input(const std::string& path) {
    const json j = io::read_file(path);
    return io::sequence_from(j.is_object() && j.contains("sequence") ? j.at("sequence") : j);
}

} // namespace detail

struct Outcome {
    json report;
    int code = pass;
};

// pick

inline Outcome pick_check_cmd(const RunConfig& c) {
    detail::require_file(c.input, "input");
    const PickProblem prob = io::problem_from(io::read_file(c.input));
    const PickCheck chk = pick_check(prob, c.tol);
    json verdicts = json::array();
    for (const auto& v : chk.verdicts) {
        verdicts.push_back({{"feasible", v.feasible},
                            {"min_eigenvalue", v.min_eigenvalue},
                            {"tolerance", v.tolerance},
                            {"eigenvalues", detail::eigen_to_json(v.eigenvalues)}});
    }
    Outcome o;
    o.report["verdicts"] = {{"feasible", chk.feasible}};
    o.report["scalars"] = {{"min_eigenvalue", chk.min_eigenvalue},
                           {"nodes", prob.size()},
                           {"dimension", prob.dim()}};
    if (prob.domain() == TargetDomain::ball) {
        const double rn = representation_norm(prob.nodes(), prob.targets());
        o.report["scalars"]["representation_norm"] = rn;
        o.report["verdicts"]["representation_contractive"] = rn <= 1.0 + 1e-8;
    }
    o.report["tables"] = {{"matrices", verdicts}};
    o.report["target_domain"] = to_string(prob.domain());
    o.code = chk.feasible ? pass : no;
    return o;
}

inline Outcome pick_solve_cmd(const RunConfig& c) {
    detail::require_file(c.input, "input");
    const PickProblem prob = io::problem_from(io::read_file(c.input));
    Outcome o;
    try {
        const ScalarInterpolant f = scalar_np_solve(prob, c.tol);
        const InterpolationReport rep = verify_interpolant(f, prob);
        const bool ok = rep.max_residual <= 1e-8 && rep.boundary_sup <= 1.0 + 1e-8;
        o.report["verdicts"] = {{"feasible", true}, {"verified", ok}};
        o.report["interpolant"] = {{"centers", io::to_json(f.centers())},
                                   {"schur_parameters", io::to_json(f.schur_parameters())},
                                   {"tail", io::to_json(f.tail())},
                                   {"degree", f.degree()}};
        o.report["scalars"] = {{"max_residual", rep.max_residual},
                               {"boundary_sup", rep.boundary_sup}};
        o.report["tables"] = {{"residuals", rep.residuals}};
        o.code = ok ? pass : numerical;
    } catch (const InfeasibleError& e) {
        o.report["verdicts"] = {{"feasible", false}};
        o.report["scalars"] = {{"min_eigenvalue", e.min_eigenvalue()}};
        o.code = no;
    }
    return o;
}

// carleson

inline Outcome carleson_scan_cmd(const RunConfig& c) {
    detail::require_file(c.disc, "disc");
    const DiscMap phi = io::disc_from(io::read_file(c.disc));
    const PushforwardMeasure mu(phi, c.grid_radial.value_or(PushforwardMeasure::default_radial),
                                c.grid_angular.value_or(PushforwardMeasure::default_angular));
    const auto zetas = scan_directions(phi, c.zeta_samples, c.seed);
    const CarlesonReport rep = carleson_scan(mu, zetas, c.delta_grid);
    // bound for mass / delta^n: (8/pi) delta^2 area times (2 delta)^{n-2}, in lambda units
    const double bound_n = kCarlesonBound * std::pow(2.0, static_cast<double>(phi.dim()) - 2.0);
    const bool ok = rep.sup_ratio_n <= 1.1 * bound_n;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back({{"zeta", e.zeta_index},
                           {"delta", e.delta},
                           {"mass", e.mass},
                           {"ratio_n", e.ratio_n},
                           {"ratio_2", e.ratio_2}});
    }
    json z = json::array();
    for (const auto& zeta : zetas) {
        z.push_back(io::to_json(zeta));
    }
    Outcome o;
    o.report["verdicts"] = {{"within_bound", ok}, {"phi_fixes_origin", phi.fixes_origin()}};
    o.report["scalars"] = {{"sup_ratio_n", rep.sup_ratio_n},
                           {"sup_ratio_2", rep.sup_ratio_2},
                           {"predicted_bound_n", bound_n},
                           {"slack", 0.1},
                           {"total_mass", rep.total_mass},
                           {"dimension", rep.dimension}};
    o.report["grid"] = {{"radial_nodes", rep.radial_nodes},
                        {"angular_nodes", rep.angular_nodes},
                        {"units", rep.units}};
    o.report["tables"] = {{"zetas", z}, {"boxes", entries}};
    o.code = ok ? pass : no;
    return o;
}

inline Outcome carleson_subordination_cmd(const RunConfig& c) {
    detail::require_file(c.disc, "disc");
    detail::require_file(c.f, "f");
    const DiscMap phi = io::disc_from(io::read_file(c.disc));
    const Polynomial f = io::polynomial_from(io::read_file(c.f));
    if (f.dim() != phi.dim()) {
        fail(ErrorKind::shape, "f and disc differ in dimension");
    }
    const SphereSampler sampler = detail::sphere_sampler(c, phi.dim());
    const DiscGrid grid = detail::disc_grid(c);
    const SubordinationResult r = subordination_ratio(f, phi, c.p, grid, sampler);
    Outcome o;
    o.report["verdicts"] = {{"finite", std::isfinite(r.ratio)}};
    o.report["scalars"] = {{"ratio", r.ratio}, {"lhs", r.lhs}, {"hardy_p", r.hardy_p}};
    o.report["sphere"] = detail::sphere_echo(sampler);
    o.code = std::isfinite(r.ratio) ? pass : numerical;
    return o;
}

inline Outcome carleson_lemmas_cmd(const RunConfig& c) {
    const double delta = c.delta;
    const DiscMap phi = c.disc.empty() ? flat_disc(2) : io::disc_from(io::read_file(c.disc));
    phi.require_fixes_origin("carleson lemmas");
    const double rho = c.radius.value_or(1.0 - delta / 2.0);
    Outcome o;
    json v = json::object();
    json s = json::object();

    const double hp = harmonic_indicator_halfplane(0.0, delta, delta);
    s["halfplane_at_center"] = hp;
    v["halfplane_quarter_turn"] = std::abs(hp - std::numbers::pi / 2.0) <= 1e-12;

    const double hmin = harmonic_indicator_min(delta, 200, c.seed);
    s["disc_indicator_min"] = hmin;
    v["disc_indicator_above_quarter_pi"] = hmin >= std::numbers::pi / 4.0 - 1e-6;

    const SliceMeasure slice =
        boundary_slice_measure([&](cplx z) { return phi.coordinate(0, z); }, rho, delta);
    s["slice"] = {{"rho", rho},
                  {"arc_length", slice.arc_length},
                  {"sigma", slice.sigma},
                  {"arc_I", slice.arc_I},
                  {"sigma_bound", slice.sigma_bound}};
    v["slice_within_bound"] = slice.within_bound;

    const DiscGrid grid = detail::disc_grid(c);
    const PreimageRadius pre = min_preimage_radius(phi, delta, grid);
    s["preimage_radius"] = {{"box", pre.box}, {"harmonic", pre.harmonic}, {"one_minus_delta", 1.0 - delta}};
    v["box_preimage_outside"] = pre.box >= 1.0 - delta - 1e-12;

    const double margin = schwarz_margin(phi, kSchwarzProbes, c.seed);
    s["schwarz_margin"] = margin;
    v["schwarz"] = margin <= 1e-9;

    if (!c.f.empty()) {
        const Polynomial f = io::polynomial_from(io::read_file(c.f));
        if (f.dim() != phi.dim()) {
            fail(ErrorKind::shape, "f and disc differ in dimension");
        }
        const SphereSampler sampler = detail::sphere_sampler(c, phi.dim());
        const SchwarzDecayReport d = schwarz_decay_check(f, phi, c.k, c.p, grid, sampler, c.seed);
        s["schwarz_decay"] = {{"k", c.k},
                              {"f_sphere_sup", d.f_sphere_sup},
                              {"max_excess", d.max_excess},
                              {"norm_p", d.norm_p},
                              {"bound", d.bound}};
        v["schwarz_decay"] = d.passed;
    }

    std::vector<BlaschkeProduct> products;
    if (c.blaschke.empty()) {
        products.emplace_back(std::vector<cplx>{0.0, 0.0});
        products.emplace_back(std::vector<cplx>{0.0, 0.0, 0.0});
        products.emplace_back(std::vector<cplx>{0.0, 0.4});
    } else {
        products.emplace_back(io::sigma_from(io::read_file(c.blaschke)));
    }
    json moments = json::array();
    bool moments_ok = true;
    for (const auto& b : products) {
        const auto m = inner_pushforward_moments(b, 4);
        bool ok = std::abs(m[0] - 1.0) <= 1e-6;
        for (std::size_t j = 1; j < m.size(); ++j) {
            ok = ok && std::abs(m[j]) <= 1e-3;
        }
        moments_ok = moments_ok && ok;
        moments.push_back({{"zeros", io::to_json(b.zeros())}, {"moments", io::to_json(m)}, {"ok", ok}});
    }
    v["inner_moments"] = moments_ok;

    bool all = true;
    for (const auto& [key, val] : v.items()) {
        all = all && val.get<bool>();
    }
    v["all"] = all;
    o.report["verdicts"] = v;
    o.report["scalars"] = s;
    o.report["tables"] = {{"blaschke", moments}};
    o.code = all ? pass : no;
    return o;
}

// sequences

inline Outcome seq_net_cmd(const RunConfig& c) {
    const double r = c.radius.value_or(0.95);
    const GreedyNet g = greedy_net(c.delta, r, c.candidates, c.seed);
    const NetVerification v = verify_net(g.net, g.candidates, c.delta);
    Outcome o;
    o.report["verdicts"] = {{"separated", v.separated}, {"maximal", v.maximal}};
    o.report["scalars"] = {{"size", g.net.size()},
                           {"min_separation", g.net.size() >= 2 ? json(v.min_separation) : json()},
                           {"uncovered_candidates", v.uncovered}};
    o.report["sequence"] = io::to_json(g.net);
    o.code = v.separated && v.maximal ? pass : no;
    return o;
}

inline constexpr double kTruncationRadii[] = {1.0 - 1.0 / 16.0, 1.0 - 1.0 / 32.0, 1.0 - 1.0 / 64.0};

inline Outcome seq_analyze_cmd(const RunConfig& c) {
    detail::require_file(c.input, "input");
    const PointSequence s = detail::sequence_input(c.input);
    const auto zetas = SphereSampler::random_sphere_points(s.dim(), c.zeta_samples, c.seed);
    const auto counts = admissible_counts(s, zetas, c.alpha);
    std::size_t min_count = counts.empty() ? 0 : counts.front();
    for (auto k : counts) {
        min_count = std::min(min_count, k);
    }
    json trunc = json::array();
    std::vector<std::size_t> prev;
    bool monotone = true;
    for (double r : kTruncationRadii) {
        const auto cr = admissible_counts(s.truncated(r), zetas, c.alpha);
        if (!prev.empty()) {
            for (std::size_t i = 0; i < cr.size(); ++i) {
                monotone = monotone && cr[i] >= prev[i];
            }
        }
        std::size_t total = 0;
        for (auto k : cr) {
            total += k;
        }
        trunc.push_back({{"radius", r}, {"total", total}, {"counts", cr}});
        prev = cr;
    }
    const std::vector<cplx> ones(s.size(), 1.0);
    Outcome o;
    o.report["scalars"] = {{"size", s.size()},
                           {"min_separation", s.size() >= 2 ? json(min_separation(s)) : json()},
                           {"min_count", min_count},
                           {"norm_H_ones", weighted_seq_norm(ones, s, c.p, static_cast<double>(s.dim()))},
                           {"norm_A_ones", weighted_seq_norm(ones, s, c.p, static_cast<double>(s.dim()) + 1.0)}};
    const bool enough = min_count >= c.min_count;
    o.report["verdicts"] = {{"counts_at_least_min", enough}, {"monotone_under_truncation", monotone}};
    o.report["tables"] = {{"counts", json(counts)}, {"truncations", trunc}};
    o.code = enough && monotone ? pass : no;
    return o;
}

inline Outcome seq_disc_check_cmd(const RunConfig& c) {
    detail::require_file(c.disc, "disc");
    detail::require_file(c.sigma, "sigma");
    detail::require_file(c.input, "input");
    const DiscMap phi = io::disc_from(io::read_file(c.disc));
    const auto sigma = io::sigma_from(io::read_file(c.sigma));
    const PointSequence s = detail::sequence_input(c.input);
    const TraceReport tr = disc_trace_residuals(phi, sigma, s);
    Outcome o;
    o.report["scalars"] = {{"max_residual", tr.max_residual}};
    o.report["tables"] = {{"residuals", tr.residuals}};
    if (!tr.passed) {
        o.report["verdicts"] = {{"passes_through", false}};
        o.code = no;
        return o;
    }
    const auto [s0, sigma0] = normalize_to_origin(s, sigma);
    const std::vector<cplx> ones(s.size(), 1.0);
    const NecessaryConditionReport r = necessary_condition_check(s0, sigma0, ones, c.p);
    o.report["verdicts"] = {{"passes_through", true},
                            {"moduli", r.moduli_ok},
                            {"norms", r.norms_ok},
                            {"separation", r.separation_ok},
                            {"necessary_conditions", r.passed}};
    o.report["scalars"]["norm_sigma"] = r.norm_sigma;
    o.report["scalars"]["norm_points"] = r.norm_points;
    o.report["scalars"]["gap"] = r.gap;
    o.report["scalars"]["separation_sigma"] = r.separation_sigma;
    o.report["scalars"]["separation_points"] = r.separation_points;
    o.report["tables"]["point_moduli"] = r.point_moduli;
    o.report["tables"]["node_moduli"] = r.node_moduli;
    o.code = r.passed ? pass : no;
    return o;
}

// hardy

inline Outcome hardy_norm_cmd(const RunConfig& c) {
    detail::require_file(c.f, "f");
    const Polynomial f = io::polynomial_from(io::read_file(c.f));
    const SphereSampler sampler = detail::sphere_sampler(c, f.dim());
    const HardyProfile prof = hardy_profile(f, c.p, sampler);
    Outcome o;
    o.report["scalars"] = {{"norm", prof.norm}};
    o.report["verdicts"] = {{"monotone_in_r", prof.monotone}};
    o.report["tables"] = {{"radii", prof.radii}, {"means", prof.means}};
    o.report["sphere"] = detail::sphere_echo(sampler);
    bool ok = prof.monotone;
    if (!c.base.empty()) {
        const BallAutomorphism psi(detail::base_point(c.base, f.dim()));
        const double tn = hardy_norm(rudin_operator(psi, f, c.p), c.p, sampler);
        const bool iso = std::abs(tn - prof.norm) <= 1e-3;
        o.report["scalars"]["rudin_norm"] = tn;
        o.report["verdicts"]["rudin_isometry"] = iso;
        ok = ok && iso;
    }
    o.code = ok ? pass : no;
    return o;
}

/// Parses args (without the program name), runs one command, writes its
/// report. Returns the exit code.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for analytic discs in the unit ball", "disc-analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    RunConfig cfg;
    std::string command;
    std::vector<std::string> used;
    std::function<Outcome(const RunConfig&)> run;

    auto add = [&](CLI::App* group, const std::string& name, const std::string& help,
                   std::vector<std::string> flags, std::function<Outcome(const RunConfig&)> fn) {
        CLI::App* sub = group->add_subcommand(name, help);
        for (const auto& f : flags) {
            if (f == "input") sub->add_option("--input", cfg.input, "input JSON file");
            else if (f == "output") sub->add_option("--output", cfg.output, "write the report here instead of stdout");
            else if (f == "disc") sub->add_option("--disc", cfg.disc, "disc JSON file");
            else if (f == "f") sub->add_option("--f", cfg.f, "polynomial JSON file");
            else if (f == "sigma") sub->add_option("--sigma", cfg.sigma, "node list JSON file");
            else if (f == "blaschke") sub->add_option("--blaschke", cfg.blaschke, "Blaschke zeros, node list JSON file");
            else if (f == "tol") sub->add_option("--tol", cfg.tol, "PSD tolerance")->check(CLI::PositiveNumber);
            else if (f == "seed") sub->add_option("--seed", cfg.seed, "random seed");
            else if (f == "p") sub->add_option("--p", cfg.p, "exponent p >= 1");
            else if (f == "delta-grid") sub->add_option("--delta-grid", cfg.delta_grid, "comma-separated deltas")->delimiter(',');
            else if (f == "zeta-samples") sub->add_option("--zeta-samples", cfg.zeta_samples, "boundary directions");
            else if (f == "grid-radial") sub->add_option("--grid-radial", cfg.grid_radial, "radial (or polar) nodes");
            else if (f == "grid-angular") sub->add_option("--grid-angular", cfg.grid_angular, "angular nodes");
            else if (f == "mc-samples") sub->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sphere samples (n >= 3)");
            else if (f == "alpha") sub->add_option("--alpha", cfg.alpha, "admissible aperture");
            else if (f == "delta") sub->add_option("--delta", cfg.delta, "delta");
            else if (f == "radius") sub->add_option("--radius", cfg.radius, "radius");
            else if (f == "candidates") sub->add_option("--candidates", cfg.candidates, "net candidates");
            else if (f == "min-count") sub->add_option("--min-count", cfg.min_count, "required count per direction");
            else if (f == "k") sub->add_option("--k", cfg.k, "power k of f o phi");
            else if (f == "base") sub->add_option("--base", cfg.base, "automorphism base point re,im,...")->delimiter(',');
        }
        const std::string full = group->get_name() + " " + name;
        sub->callback([&, full, flags, fn] {
            command = full;
            used = flags;
            run = fn;
        });
    };

    CLI::App* pick = app.add_subcommand("pick", "Pick-Nevanlinna feasibility");
    pick->require_subcommand(1);
    add(pick, "check", "PSD test of the Pick matrix", {"input", "output", "tol"}, pick_check_cmd);
    add(pick, "solve-scalar", "Schur recursion for scalar data", {"input", "output", "tol"}, pick_solve_cmd);

    CLI::App* carl = app.add_subcommand("carleson", "Carleson box masses and lemmas");
    carl->require_subcommand(1);
    add(carl, "scan", "box masses over zeta and delta grids",
        {"disc", "output", "delta-grid", "zeta-samples", "seed", "grid-radial", "grid-angular"},
        carleson_scan_cmd);
    add(carl, "subordination", "ratio of the disc integral to the Hardy norm",
        {"disc", "f", "output", "p", "seed", "grid-radial", "grid-angular", "mc-samples"},
        carleson_subordination_cmd);
    add(carl, "lemmas", "harmonic indicator, boundary slice, Schwarz decay, inner moments",
        {"disc", "f", "blaschke", "output", "delta", "radius", "p", "k", "seed", "grid-radial",
         "grid-angular", "mc-samples"},
        carleson_lemmas_cmd);

    CLI::App* seq = app.add_subcommand("seq", "point sequences in B_2");
    seq->require_subcommand(1);
    add(seq, "net", "greedy delta-net", {"output", "delta", "radius", "seed", "candidates"}, seq_net_cmd);
    add(seq, "analyze", "separation and admissible counts",
        {"input", "output", "alpha", "p", "zeta-samples", "seed", "min-count"}, seq_analyze_cmd);
    add(seq, "disc-check", "disc through a sequence and the necessary conditions",
        {"disc", "sigma", "input", "output", "p"}, seq_disc_check_cmd);

    CLI::App* hardy = app.add_subcommand("hardy", "Hardy space norms");
    hardy->require_subcommand(1);
    add(hardy, "norm", "H^p norm of a polynomial, optionally of its Rudin transform",
        {"f", "output", "p", "base", "seed", "grid-radial", "grid-angular", "mc-samples"},
        hardy_norm_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return pass;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return invalid;
    }
    if (!run) {
        err << app.help("", CLI::AppFormatMode::All);
        return invalid;
    }

    Outcome o;
    try {
        o = run(cfg);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        if (e.is_input_error()) {
            err << "\n" << app.help("", CLI::AppFormatMode::All);
            return invalid;
        }
        return numerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return numerical;
    }

    json report;
    report["command"] = command;
    report["config"] = detail::config_echo(cfg, used);
    for (auto it = o.report.begin(); it != o.report.end(); ++it) {
        report[it.key()] = it.value();
    }
    report["exit_code"] = o.code;
    report["version"] = kVersion;
    const std::string text = report.dump(2) + "\n";
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            err << "error: cannot write " << cfg.output << "\n";
            return invalid;
        }
        f << text;
    }
    return o.code;
}

} // namespace disc::cli

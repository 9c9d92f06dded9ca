#include "spinsim/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "spinsim/serialize.hpp"

namespace spinsim::cli {

namespace {

State initial_state(const RunConfig& cfg, Law law) {
    switch (law_rep(law)) {
        case Rep::bloch_vector: return bloch_from_angles(cfg.initial);
        case Rep::density: return density_from_bloch(bloch_from_angles(cfg.initial)).matrix();
        case Rep::spinor: return spinor_from_angles(cfg.initial);
    }
    throw std::logic_error("unreachable");
}

std::string summary_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".summary.json");
    return p.string();
}

void emit_report(const nlohmann::ordered_json& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << render_json(doc);
    } else {
        write_text_atomic(out, render_json(doc));
        std::cout << "report written to " << out << "\n";
    }
}

}  // namespace

int cmd_simulate(const RunConfig& cfg) {
    if (cfg.out.empty()) {
        std::cerr << "simulate: an output path is required (--out or config \"out\")\n";
        return exit_config_error;
    }
    const Law law = cfg.laws.at(0);
    TrajectoryRecord traj;
    try {
        traj = integrate(law, initial_state(cfg, law), cfg.field, cfg.params, cfg.t_end, cfg.dt,
                         cfg.renorm);
    } catch (const NanAbortError& e) {
        std::cerr << "simulate aborted: " << e.what() << "\n";
        return exit_check_failure;
    }
    write_text_atomic(cfg.out, trajectory_csv(traj));
    write_text_atomic(summary_path(cfg.out), render_json(run_summary_json(cfg, traj)));
    std::cout << "wrote " << traj.samples() << " samples to " << cfg.out << "\n";
    return exit_ok;
}

int cmd_compare(const RunConfig& cfg) {
    EquivalenceConfig eq;
    eq.field = cfg.field;
    eq.params = cfg.params;
    eq.initial = cfg.initial;
    eq.t_end = cfg.t_end;
    eq.dt = cfg.dt;
    eq.laws = cfg.laws;
    eq.name_prefix = "compare";

    std::vector<CheckReport> reports;
    try {
        reports = check_equivalence(eq);
    } catch (const NanAbortError& e) {
        std::cerr << "compare aborted: " << e.what() << "\n";
        return exit_check_failure;
    }

    bool all_pass = true;
    for (const CheckReport& r : reports) {
        const char* status = r.asserted ? (r.pass ? "pass" : "FAIL") : "info";
        std::printf("%-4s %-55s deviation=%.6e%s\n", status, r.check.c_str(), r.residual,
                    r.asserted ? "" : " (report only)");
        if (r.asserted && !r.pass) all_pass = false;
    }
    emit_report(reports_json(reports), cfg.out);
    return all_pass ? exit_ok : exit_check_failure;
}

int cmd_collapse(const RunConfig& cfg) {
    const EnsembleSummary s = ensemble_collapse(cfg.theta_e, cfg.ensemble, cfg.params.k_i, cfg.seed);
    const bool pass = std::abs(s.z_score()) <= 3.0;
    std::printf("fraction_up=%.6f expected=%.6f z=%+.3f (n=%llu) %s\n", s.fraction_up(),
                s.expected_fraction(), s.z_score(), static_cast<unsigned long long>(s.n),
                pass ? "pass" : "FAIL");
    emit_report(ensemble_json(s), cfg.out);
    return pass ? exit_ok : exit_check_failure;
}

int cmd_verify(const std::string& filter, const std::string& out) {
    std::vector<CheckReport> reports;
    try {
        reports = run_all_checks(filter);
    } catch (const std::domain_error& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return exit_config_error;
    }

    bool all_pass = true;
    for (const CheckReport& r : reports) {
        const char* status = r.asserted ? (r.pass ? "pass" : "FAIL") : "info";
        if (r.asserted)
            std::printf("%-4s %-55s residual=%.3e tolerance=%.3e\n", status, r.check.c_str(),
                        r.residual, r.tolerance);
        else
            std::printf("%-4s %-55s residual=%.3e (report only)\n", status, r.check.c_str(),
                        r.residual);
        if (r.asserted && !r.pass) all_pass = false;
    }
    std::printf("%zu checks, %s\n", reports.size(),
                all_pass ? "all asserted checks pass" : "ASSERTED CHECK FAILURES");

    const std::string out_path = out.empty() ? "spinform-verify.json" : out;
    write_text_atomic(out_path, render_json(reports_json(reports)));
    std::cout << "report written to " << out_path << "\n";
    return all_pass ? exit_ok : exit_check_failure;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"Two-level spin dynamics simulator and verification suite", "spinform"};
    app.require_subcommand(1);

    std::string config_path, out_path, filter = "*";
    std::optional<std::uint64_t> seed;

    auto add_config_options = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path, "JSON run configuration file");
        if (config_required) opt->required();
        sub->add_option("--out", out_path, "output path (overrides config \"out\")");
        sub->add_option("--seed", seed, "seed override");
    };

    auto* sim = app.add_subcommand("simulate", "integrate one law and write a trajectory CSV");
    add_config_options(sim, true);
    auto* cmp = app.add_subcommand("compare", "integrate several laws and report pairwise deviations");
    add_config_options(cmp, true);
    auto* col = app.add_subcommand("collapse", "run a CQD collapse ensemble and test Born statistics");
    add_config_options(col, true);
    auto* ver = app.add_subcommand("verify", "run the numerical certification suite");
    ver->add_option("--filter", filter, "wildcard filter on check names");
    ver->add_option("--out", out_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        if (ver->parsed()) return cmd_verify(filter, out_path);

        const Command cmd = sim->parsed()   ? Command::simulate
                            : cmp->parsed() ? Command::compare
                                            : Command::collapse;
        RunConfig cfg = load_run_config(config_path, cmd);
        if (!out_path.empty()) cfg.out = out_path;
        if (seed) cfg.seed = *seed;
        switch (cmd) {
            case Command::simulate: return cmd_simulate(cfg);
            case Command::compare: return cmd_compare(cfg);
            default: return cmd_collapse(cfg);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failure;
    }
}

}  // namespace spinsim::cli

/**
 * @file quintic_cli.cpp
 * @brief Argument parsing for the quintic tool; all work happens in the
 *        library's cli::run so reports stay testable in-process.
 *
 * Exit codes: 0 all checks pass, 1 a check failed or a computation was
 * blocked by a structural error, 2 unusable command line.
 */

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quintic/cli.hpp"

namespace {

struct Parsed {
    quintic::cli::RunConfig config;
    std::string lambdas_text;
};

void add_format_flags(CLI::App* cmd, quintic::cli::RunConfig& cfg) {
    cmd->add_flag_callback(
        "--json", [&cfg] { cfg.output = quintic::cli::OutputFormat::json; },
        "emit the machine-readable JSON report");
    cmd->add_flag_callback(
        "--csv", [&cfg] { cfg.output = quintic::cli::OutputFormat::csv; },
        "emit the result rows as CSV");
}

}  // namespace

int main(int argc, char** argv) {
    using quintic::cli::Command;
    Parsed p;

    CLI::App app{"exact mirror-theorem computations for the quintic threefold"};
    app.require_subcommand(1);
    app.footer("Environment: QUINTIC_THREADS caps worker threads (default: all cores).");

    auto bind = [&p](CLI::App* cmd, Command c) {
        cmd->callback([&p, c] { p.config.command = c; });
        add_format_flags(cmd, p.config);
    };

    CLI::App* instantons =
        app.add_subcommand("instantons", "sphere counts n_d via the mirror pipeline");
    instantons->add_option("--max-degree", p.config.q_order, "largest degree d (default 10)");
    bind(instantons, Command::instantons);

    CLI::App* mirror_map =
        app.add_subcommand("mirror-map", "coordinate-change series f0 and g = f1/f0");
    mirror_map->add_option("--order", p.config.q_order, "q-order (default 10)");
    bind(mirror_map, Command::mirror_map);

    CLI::App* yk = app.add_subcommand("yukawa", "Yukawa coupling series K(Q)");
    yk->add_option("--order", p.config.q_order, "Q-order (default 10)");
    bind(yk, Command::yukawa);

    CLI::App* verify = app.add_subcommand("verify", "run one consistency check");
    verify->require_subcommand(1);

    CLI::App* ode = verify->add_subcommand("ode", "order-4 differential equation degreewise");
    ode->add_option("--order", p.config.q_order, "q-order (default 10)");
    bind(ode, Command::verify_ode);

    CLI::App* sigma =
        verify->add_subcommand("sigma-model", "residue path against pairing path for L(q,z)");
    sigma->add_option("--max-degree", p.config.q_order, "largest q-degree (default 5)");
    sigma->add_option("--z-order", p.config.z_order, "z-order (default 3)");
    bind(sigma, Command::verify_sigma_model);

    CLI::App* pol = verify->add_subcommand(
        "polynomiality", "no negative powers of h in the double-construction pairing");
    pol->add_option("--q-order", p.config.q_order, "q-order (default 3)");
    pol->add_option("--z-order", p.config.z_order, "z-order (default 3)");
    pol->add_option("--lambdas", p.lambdas_text, "five weights \"r,r,r,r,r\" (default 1,2,3,-1,-5)");
    bind(pol, Command::verify_polynomiality);

    CLI::App* rec = verify->add_subcommand(
        "recursion", "residue extraction and order-by-order reconstruction round trip");
    rec->add_option("--q-order", p.config.q_order, "largest q-degree (default 3)");
    rec->add_option("--lambdas", p.lambdas_text,
                    "five weights \"r,r,r,r,r\" (default 19,16,5,-18,-22)");
    bind(rec, Command::verify_recursion);

    CLI::App* reco = app.add_subcommand(
        "reconstruct", "pin the mirror-transformed series from couplings plus anchors");
    reco->add_option("--q-order", p.config.q_order, "largest q-degree (default 3)");
    reco->add_option("--z-order", p.config.z_order,
                     "z-powers of constraints (default 9; degree 3 needs 9)");
    reco->add_option("--lambdas", p.lambdas_text,
                     "five weights \"r,r,r,r,r\" (default 19,16,5,-18,-22)");
    bind(reco, Command::reconstruct);

    CLI::App* oracle = app.add_subcommand("oracle", "independent classical cross-checks");
    oracle->require_subcommand(1);
    CLI::App* lines = oracle->add_subcommand(
        "lines", "Schubert-calculus line counts, independent of the pipeline");
    bind(lines, Command::oracle_lines);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    }

    if (!p.lambdas_text.empty()) {
        try {
            p.config.lambdas = quintic::WeightSpec::parse(p.lambdas_text);
        } catch (const quintic::Error& e) {
            std::fprintf(stderr, "error: --lambdas %s: %s\n", p.lambdas_text.c_str(), e.what());
            return 2;
        }
    }

    quintic::cli::RunResult res = quintic::cli::run(p.config);
    std::fputs(res.text.c_str(), stdout);
    return res.exit_code;
}

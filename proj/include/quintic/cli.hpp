#ifndef QUINTIC_CLI_HPP
#define QUINTIC_CLI_HPP

/**
 * @file cli.hpp
 * @brief Command dispatch behind the command-line tool, kept in the library
 *        so reports are testable without spawning a process.
 *
 * Every command produces a RunResult whose text is the full report in the
 * requested format.  JSON reports follow the fixed schema
 *   {"command", "params", "results", "pass", "elapsed_ms"}
 * with exact values serialized as decimal / "num/den" strings; elapsed_ms is
 * the only field that varies between identical runs.
 */

#include <optional>
#include <string>

#include "quintic/cohomology.hpp"

namespace quintic::cli {

enum class Command {
    instantons,
    mirror_map,
    yukawa,
    verify_ode,
    verify_sigma_model,
    verify_polynomiality,
    verify_recursion,
    reconstruct,
    oracle_lines,
};

enum class OutputFormat { pretty, json, csv };

/// Canonical command name ("verify-ode", "mirror-map", ...).
std::string command_name(Command c);

struct RunConfig {
    Command command = Command::instantons;
    int q_order = -1;  // max degree / order; -1 selects the command default
    int z_order = -1;  // -1 selects the command default
    std::optional<WeightSpec> lambdas;  // unset selects the command default
    OutputFormat output = OutputFormat::pretty;
};

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 failed check or blocked computation, 2 bad config
    std::string text;   // complete report, newline-terminated
};

/// Execute one command.  Library errors are converted into a structured
/// diagnostic report plus a nonzero exit code; only std::bad_alloc and the
/// like escape.
RunResult run(const RunConfig& config);

}  // namespace quintic::cli

#endif

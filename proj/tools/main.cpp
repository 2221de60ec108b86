#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qnogo/cli.hpp"

namespace {

constexpr const char* kColumnDoc = R"(CSV columns (shared by every experiment; unused cells stay empty):
  experiment       command that produced the row
  case             sub-case within the experiment
  s                source-state overlap <psi1|psi2>
  t                post-deletion ancilla overlap
  e                environment-record overlap
  trials           number of random trials behind the row
  in_bits          entropy/Holevo/entanglement before the machine
  out_bits         same quantity after the machine
  residual_train   worst training residual of the fitted operator
  residual_heldout worst held-out residual of the fitted operator
  deviation        experiment-specific distance (gap, spectral change, ...)
  violations       number of trials breaking the checked inequality
  verdict          VIOLATES or CONSISTENT at the configured tolerance

Populated cells per experiment:
  delete-gap       in_bits, out_bits, deviation (entropy gap)
  delete-sweep     s, t, in_bits, out_bits
  clone-sweep      case exact|weak, s, e, in_bits, out_bits
  entangle-delete  s, t, in_bits, out_bits
  entangle-clone   s, e, in_bits, out_bits
  fit              case clone|delete|delete-classical, trials, residuals
  conserve         case holevo|relative-entropy|spectrum, trials,
                   deviation, violations
  demon            case cptp|dilation|idempotent|reset|spectrum-contrast,
                   trials, deviation

Exit status: 0 when every verdict matches theory, 1 on any mismatch,
2 on a usage error.)";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks that perfect quantum deleting and cloning machines "
                 "break entropy, Holevo, and entanglement monotonicity, while legal "
                 "evolutions conserve them."};
    app.footer(kColumnDoc);
    app.fallthrough();
    app.require_subcommand(1);

    qnogo::cli::RunConfig config;
    app.add_option("--overlap-steps", config.overlap_steps,
                   "Grid points for overlap sweeps, endpoints included")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    app.add_option("--env-overlap", config.env_overlap,
                   "Overlap of the two environment records kept by a cloner")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--ancilla-overlap", config.ancilla_overlap,
                   "Overlap of the two post-deletion ancilla states")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--trials", config.trials, "Random trials per property check")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Master seed; equal seeds give identical CSV bytes")
        ->capture_default_str();
    app.add_option("--tolerance", config.tolerance, "Verdict tolerance in bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", config.output_path, "Write CSV to this path instead of stdout");

    struct SubcommandEntry {
        qnogo::cli::Command command;
        const char* description;
    };
    const SubcommandEntry entries[] = {
        {qnogo::cli::Command::DeleteGap,
         "Entropy of the valid-deletion-input subspace vs the output subspace"},
        {qnogo::cli::Command::DeleteSweep,
         "Two-state deletion entropy drop across an overlap grid"},
        {qnogo::cli::Command::CloneSweep,
         "Holevo quantity before/after exact and weak cloning across an overlap grid"},
        {qnogo::cli::Command::EntangleDelete,
         "Entanglement across the Alice|Bob cut before/after a local deletion"},
        {qnogo::cli::Command::EntangleClone,
         "Entanglement across the Alice|Bob cut before/after a local cloning"},
        {qnogo::cli::Command::Fit,
         "Best linear operator for each task, with training and held-out residuals"},
        {qnogo::cli::Command::Conserve,
         "Spectrum, relative-entropy, and Holevo monotonicity under random evolutions"},
        {qnogo::cli::Command::Demon,
         "The reset channel: CPTP check, dilation identity, idempotence, spectrum change"},
        {qnogo::cli::Command::All, "Every experiment, rows sorted by experiment and case"},
    };
    for (const SubcommandEntry& entry : entries)
        app.add_subcommand(qnogo::cli::command_name(entry.command), entry.description);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        std::cerr << "run with --help for usage" << '\n';
        return 2;
    }

    for (const SubcommandEntry& entry : entries)
        if (app.got_subcommand(qnogo::cli::command_name(entry.command)))
            config.command = entry.command;

    try {
        return qnogo::cli::run(config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

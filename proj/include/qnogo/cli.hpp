#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/channels.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/fit.hpp"
#include "qnogo/measures.hpp"
#include "qnogo/nogo.hpp"
#include "qnogo/rng.hpp"
#include "qnogo/states.hpp"

namespace qnogo::cli {

enum class Command {
    DeleteGap,
    DeleteSweep,
    CloneSweep,
    EntangleDelete,
    EntangleClone,
    Fit,
    Conserve,
    Demon,
    All,
};

inline const char* command_name(Command c) {
    switch (c) {
    case Command::DeleteGap: return "delete-gap";
    case Command::DeleteSweep: return "delete-sweep";
    case Command::CloneSweep: return "clone-sweep";
    case Command::EntangleDelete: return "entangle-delete";
    case Command::EntangleClone: return "entangle-clone";
    case Command::Fit: return "fit";
    case Command::Conserve: return "conserve";
    case Command::Demon: return "demon";
    case Command::All: return "all";
    }
    return "all";
}

struct RunConfig {
    Command command = Command::All;
    int overlap_steps = 11;
    double env_overlap = 1.0;
    double ancilla_overlap = 1.0;
    int trials = 100;
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    std::string output_path;
};

/// One CSV row. Optional cells render empty when the experiment does not
/// populate them; expected carries the theoretical verdict used for the
/// process exit code.
struct CsvRow {
    std::string experiment;
    std::string case_label;
    std::optional<double> s;
    std::optional<double> t;
    std::optional<double> e;
    std::optional<long long> trials;
    std::optional<double> in_bits;
    std::optional<double> out_bits;
    std::optional<double> residual_train;
    std::optional<double> residual_heldout;
    std::optional<double> deviation;
    std::optional<long long> violations;
    Verdict verdict = Verdict::CONSISTENT;
    Verdict expected = Verdict::CONSISTENT;
};

inline constexpr const char* kCsvHeader = "experiment,case,s,t,e,trials,in_bits,out_bits,"
                                          "residual_train,residual_heldout,deviation,"
                                          "violations,verdict";

/// Shortest locale-free decimal form with 9 significant digits.
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                         std::chars_format::general, 9);
    return std::string(buf, ptr);
}

namespace detail {

inline std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

inline std::string cell(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
}

inline std::string csv_line(const CsvRow& row) {
    std::string line;
    line += row.experiment;
    line += ',';
    line += row.case_label;
    line += ',';
    line += cell(row.s);
    line += ',';
    line += cell(row.t);
    line += ',';
    line += cell(row.e);
    line += ',';
    line += cell(row.trials);
    line += ',';
    line += cell(row.in_bits);
    line += ',';
    line += cell(row.out_bits);
    line += ',';
    line += cell(row.residual_train);
    line += ',';
    line += cell(row.residual_heldout);
    line += ',';
    line += cell(row.deviation);
    line += ',';
    line += cell(row.violations);
    line += ',';
    line += to_string(row.verdict);
    return line;
}

inline Verdict expect_positive(double closed_form_delta, double tolerance) {
    return closed_form_delta > tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT;
}

/// Evenly spaced overlaps on [0,1], endpoints included.
inline std::vector<double> overlap_grid(int steps) {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k)
        grid[static_cast<std::size_t>(k)] =
            static_cast<double>(k) / static_cast<double>(steps - 1);
    return grid;
}

inline std::vector<CsvRow> rows_delete_gap(const RunConfig& config) {
    const ExperimentReport report = deleting_entropy_gap(config.tolerance);
    CsvRow row;
    row.experiment = "delete-gap";
    row.case_label = "subspace";
    row.in_bits = report.quantity("S_in");
    row.out_bits = report.quantity("S_out");
    row.deviation = report.quantity("gap");
    row.verdict = report.verdict;
    row.expected = Verdict::VIOLATES;
    return {row};
}

inline std::vector<CsvRow> rows_delete_sweep(const RunConfig& config) {
    std::vector<CsvRow> rows;
    for (double s : overlap_grid(config.overlap_steps)) {
        // The scenario requires t >= s; a sweep crossing the requested
        // ancilla overlap clamps t up to s (deletion achieving nothing).
        const double t = std::max(s, config.ancilla_overlap);
        const ExperimentReport report =
            sharper_deleting_entropies(DeletingScenario(s, t), config.tolerance);
        CsvRow row;
        row.experiment = "delete-sweep";
        row.case_label = "sweep";
        row.s = s;
        row.t = t;
        row.in_bits = report.quantity("S_in");
        row.out_bits = report.quantity("S_out");
        row.verdict = report.verdict;
        row.expected = expect_positive(binary_entropy((1.0 + s * s) / 2.0) -
                                           binary_entropy((1.0 + s * t) / 2.0),
                                       config.tolerance);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<CsvRow> rows_clone_sweep(const RunConfig& config) {
    std::vector<CsvRow> rows;
    for (bool weak : {false, true})
        for (double s : overlap_grid(config.overlap_steps)) {
            const double e = config.env_overlap;
            const ExperimentReport report =
                cloning_holevo(CloningScenario(s, e), weak, config.tolerance);
            CsvRow row;
            row.experiment = "clone-sweep";
            row.case_label = weak ? "weak" : "exact";
            row.s = s;
            row.e = e;
            row.in_bits = report.quantity("chi_in");
            row.out_bits = report.quantity("chi_out");
            row.verdict = report.verdict;
            const double out_overlap = weak ? s * e : s * s * e;
            row.expected = expect_positive(binary_entropy((1.0 + out_overlap) / 2.0) -
                                               binary_entropy((1.0 + s) / 2.0),
                                           config.tolerance);
            rows.push_back(std::move(row));
        }
    return rows;
}

inline std::vector<CsvRow> rows_entangle_delete(const RunConfig& config) {
    std::vector<CsvRow> rows;
    for (double s : overlap_grid(config.overlap_steps)) {
        const ExperimentReport report =
            entanglement_deleting(DeletingScenario(s, 1.0), config.tolerance);
        CsvRow row;
        row.experiment = "entangle-delete";
        row.case_label = "sweep";
        row.s = s;
        row.t = 1.0;
        row.in_bits = report.quantity("E_in");
        row.out_bits = report.quantity("E_out");
        row.verdict = report.verdict;
        row.expected = expect_positive(binary_entropy((1.0 + s * s) / 2.0) -
                                           binary_entropy((1.0 + s) / 2.0),
                                       config.tolerance);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<CsvRow> rows_entangle_clone(const RunConfig& config) {
    std::vector<CsvRow> rows;
    for (double s : overlap_grid(config.overlap_steps)) {
        const double e = config.env_overlap;
        const ExperimentReport report =
            entanglement_cloning(CloningScenario(s, e), config.tolerance);
        CsvRow row;
        row.experiment = "entangle-clone";
        row.case_label = "sweep";
        row.s = s;
        row.e = e;
        row.in_bits = report.quantity("E_in");
        row.out_bits = report.quantity("E_out");
        row.verdict = report.verdict;
        row.expected = expect_positive(binary_entropy((1.0 + s * s * e) / 2.0) -
                                           binary_entropy((1.0 + s) / 2.0),
                                       config.tolerance);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CsvRow fit_row(const RunConfig& config, const char* label, NoGoTask task,
                      std::uint64_t salt, Verdict expected) {
    const LinearityReport report =
        linearity_obstruction(task, config.trials, mix_seed(config.seed, salt));
    CsvRow row;
    row.experiment = "fit";
    row.case_label = label;
    row.trials = config.trials;
    row.residual_train = report.training_residual;
    row.residual_heldout = report.max_heldout_residual;
    row.verdict = std::max(report.training_residual, report.max_heldout_residual) >
                          config.tolerance
                      ? Verdict::VIOLATES
                      : Verdict::CONSISTENT;
    row.expected = expected;
    return row;
}

inline std::vector<CsvRow> rows_fit(const RunConfig& config) {
    std::vector<CsvRow> rows;
    rows.push_back(fit_row(config, "clone", NoGoTask::CLONE, 31, Verdict::VIOLATES));
    rows.push_back(fit_row(config, "delete", NoGoTask::DELETE, 32, Verdict::VIOLATES));

    // Restricting deletion to the basis states removes the obstruction: the
    // fitted operator realizes it exactly, and random basis states stay exact.
    const PureState zero = PureState::basis(2, 0);
    const PureState one = PureState::basis(2, 1);
    const std::vector<PureState> inputs = {tensor(zero, zero), tensor(one, one)};
    const std::vector<PureState> outputs = {tensor(zero, zero), tensor(one, zero)};
    const ComplexMatrix op = fit_linear_operator(inputs, outputs);
    double heldout = 0.0;
    const std::uint64_t salt = 33;
    for (int k = 0; k < config.trials; ++k) {
        const std::size_t bit =
            mix_seed(config.seed, mix_seed(salt, static_cast<std::uint64_t>(k))) & 1;
        heldout = std::max(heldout,
                           task_residual(op, NoGoTask::DELETE, PureState::basis(2, bit)));
    }
    CsvRow classical;
    classical.experiment = "fit";
    classical.case_label = "delete-classical";
    classical.trials = config.trials;
    classical.residual_train = max_training_residual(op, inputs, outputs);
    classical.residual_heldout = heldout;
    classical.verdict =
        std::max(*classical.residual_train, heldout) > config.tolerance ? Verdict::VIOLATES
                                                                        : Verdict::CONSISTENT;
    classical.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(classical));
    return rows;
}

inline std::vector<CsvRow> rows_conserve(const RunConfig& config) {
    std::vector<CsvRow> rows;

    const MonotonicityReport holevo =
        holevo_monotonicity(config.trials, mix_seed(config.seed, 23));
    CsvRow hrow;
    hrow.experiment = "conserve";
    hrow.case_label = "holevo";
    hrow.trials = holevo.trials;
    hrow.violations = holevo.violations;
    hrow.deviation = holevo.max_gap;
    hrow.verdict = holevo.violations == 0 ? Verdict::CONSISTENT : Verdict::VIOLATES;
    hrow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(hrow));

    const MonotonicityReport relent =
        relative_entropy_monotonicity(config.trials, mix_seed(config.seed, 22));
    CsvRow rrow;
    rrow.experiment = "conserve";
    rrow.case_label = "relative-entropy";
    rrow.trials = relent.trials;
    rrow.violations = relent.violations;
    rrow.deviation = relent.max_gap;
    rrow.verdict = relent.violations == 0 ? Verdict::CONSISTENT : Verdict::VIOLATES;
    rrow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(rrow));

    const SpectrumReport spectrum =
        spectrum_conservation(config.trials, 4, mix_seed(config.seed, 21));
    CsvRow srow;
    srow.experiment = "conserve";
    srow.case_label = "spectrum";
    srow.trials = spectrum.trials;
    srow.deviation = spectrum.max_deviation;
    srow.verdict =
        spectrum.max_deviation <= config.tolerance ? Verdict::CONSISTENT : Verdict::VIOLATES;
    srow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(srow));

    return rows;
}

inline std::vector<CsvRow> rows_demon(const RunConfig& config) {
    std::vector<CsvRow> rows;
    const QuantumChannel channel = demon_channel();
    const DensityMatrix target = density(PureState::basis(2, 0));

    const CptpReport cptp = validate_cptp(channel);
    CsvRow crow;
    crow.experiment = "demon";
    crow.case_label = "cptp";
    crow.deviation = cptp.max_deviation;
    crow.verdict = cptp.accepted ? Verdict::CONSISTENT : Verdict::VIOLATES;
    crow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(crow));

    const Dilation dilation = stinespring(channel);
    double fidelity_dev = 0.0;
    for (int k = 0; k < config.trials; ++k) {
        const PureState psi =
            random_pure_state(2, mix_seed(config.seed, mix_seed(12, static_cast<std::uint64_t>(k))));
        const PureState out = apply_dilation(dilation, psi, {2});
        const PureState expected_out = tensor(PureState::basis(2, 0), psi);
        fidelity_dev =
            std::max(fidelity_dev, std::abs(1.0 - std::norm(overlap(expected_out, out))));
    }
    CsvRow drow;
    drow.experiment = "demon";
    drow.case_label = "dilation";
    drow.trials = config.trials;
    drow.deviation = fidelity_dev;
    drow.verdict = fidelity_dev <= config.tolerance ? Verdict::CONSISTENT : Verdict::VIOLATES;
    drow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(drow));

    double idem_dev = 0.0;
    double reset_dev = 0.0;
    for (int k = 0; k < config.trials; ++k) {
        const DensityMatrix rho = random_density_matrix(
            2, mix_seed(config.seed, mix_seed(11, static_cast<std::uint64_t>(k))));
        const DensityMatrix once = apply_channel(channel, rho);
        const DensityMatrix twice = apply_channel(channel, once);
        idem_dev = std::max(idem_dev, max_abs_diff(twice.matrix(), once.matrix()));
        reset_dev = std::max(reset_dev, max_abs_diff(once.matrix(), target.matrix()));
    }
    CsvRow irow;
    irow.experiment = "demon";
    irow.case_label = "idempotent";
    irow.trials = config.trials;
    irow.deviation = idem_dev;
    irow.verdict = idem_dev <= config.tolerance ? Verdict::CONSISTENT : Verdict::VIOLATES;
    irow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(irow));

    CsvRow rrow;
    rrow.experiment = "demon";
    rrow.case_label = "reset";
    rrow.trials = config.trials;
    rrow.deviation = reset_dev;
    rrow.verdict = reset_dev <= config.tolerance ? Verdict::CONSISTENT : Verdict::VIOLATES;
    rrow.expected = Verdict::CONSISTENT;
    rows.push_back(std::move(rrow));

    // The reset is a legal channel, not a unitary: on the maximally mixed
    // state it moves the spectrum from {1/2, 1/2} to {1, 0}.
    const DensityMatrix mixed = maximally_mixed_on(ComplexMatrix::identity(2));
    const std::vector<double> before = hermitian_eig(mixed.matrix()).eigenvalues;
    const std::vector<double> after =
        hermitian_eig(apply_channel(channel, mixed).matrix()).eigenvalues;
    double spectral = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i)
        spectral = std::max(spectral, std::abs(before[i] - after[i]));
    CsvRow srow;
    srow.experiment = "demon";
    srow.case_label = "spectrum-contrast";
    srow.deviation = spectral;
    srow.verdict = spectral > config.tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT;
    srow.expected = Verdict::VIOLATES;
    rows.push_back(std::move(srow));

    return rows;
}

/// Rows in deterministic order: experiment name, then case label, then
/// sweep index, matching the generation order below.
inline std::vector<CsvRow> collect_rows(const RunConfig& config) {
    std::vector<CsvRow> rows;
    const auto append = [&rows](std::vector<CsvRow> more) {
        for (CsvRow& row : more)
            rows.push_back(std::move(row));
    };
    const Command c = config.command;
    if (c == Command::CloneSweep || c == Command::All)
        append(rows_clone_sweep(config));
    if (c == Command::Conserve || c == Command::All)
        append(rows_conserve(config));
    if (c == Command::DeleteGap || c == Command::All)
        append(rows_delete_gap(config));
    if (c == Command::DeleteSweep || c == Command::All)
        append(rows_delete_sweep(config));
    if (c == Command::Demon || c == Command::All)
        append(rows_demon(config));
    if (c == Command::EntangleClone || c == Command::All)
        append(rows_entangle_clone(config));
    if (c == Command::EntangleDelete || c == Command::All)
        append(rows_entangle_delete(config));
    if (c == Command::Fit || c == Command::All)
        append(rows_fit(config));
    return rows;
}

inline std::string render_csv(const std::vector<CsvRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const CsvRow& row : rows) {
        out += csv_line(row);
        out += '\n';
    }
    return out;
}

inline void render_table(const std::vector<CsvRow>& rows, std::ostream& diag) {
    diag << std::left << std::setw(16) << "experiment" << std::setw(18) << "case"
         << std::setw(22) << "parameters" << std::setw(12) << "verdict"
         << "status" << '\n';
    int mismatches = 0;
    for (const CsvRow& row : rows) {
        std::string params;
        if (row.s)
            params += "s=" + format_double(*row.s) + " ";
        if (row.t)
            params += "t=" + format_double(*row.t) + " ";
        if (row.e)
            params += "e=" + format_double(*row.e) + " ";
        if (row.trials)
            params += "trials=" + std::to_string(*row.trials);
        const bool match = row.verdict == row.expected;
        if (!match)
            ++mismatches;
        diag << std::left << std::setw(16) << row.experiment << std::setw(18)
             << row.case_label << std::setw(22) << params << std::setw(12)
             << to_string(row.verdict)
             << (match ? "as expected"
                       : std::string("MISMATCH, expected ") + to_string(row.expected))
             << '\n';
    }
    diag << rows.size() << " rows, " << mismatches << " unexpected verdicts" << '\n';
}

} // namespace detail

/// Runs the configured experiments; CSV goes to output_path when set, else
/// to out. The verdict table always goes to diag. Returns 0 when every
/// verdict matches theory, 1 on any mismatch, 2 on a bad config or an
/// unwritable output path.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (config.overlap_steps < 2) {
        diag << "error: --overlap-steps must be at least 2" << '\n';
        return 2;
    }
    if (config.env_overlap < 0.0 || config.env_overlap > 1.0) {
        diag << "error: --env-overlap must lie in [0,1]" << '\n';
        return 2;
    }
    if (config.ancilla_overlap < 0.0 || config.ancilla_overlap > 1.0) {
        diag << "error: --ancilla-overlap must lie in [0,1]" << '\n';
        return 2;
    }
    if (config.trials < 1) {
        diag << "error: --trials must be at least 1" << '\n';
        return 2;
    }
    if (!(config.tolerance > 0.0)) {
        diag << "error: --tolerance must be positive" << '\n';
        return 2;
    }

    const std::vector<CsvRow> rows = detail::collect_rows(config);
    const std::string csv = detail::render_csv(rows);
    if (!config.output_path.empty()) {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) {
            diag << "error: cannot open " << config.output_path << " for writing" << '\n';
            return 2;
        }
        file << csv;
        if (!file.flush()) {
            diag << "error: failed writing " << config.output_path << '\n';
            return 2;
        }
    } else {
        out << csv;
    }
    detail::render_table(rows, diag);
    for (const CsvRow& row : rows)
        if (row.verdict != row.expected)
            return 1;
    return 0;
}

} // namespace qnogo::cli

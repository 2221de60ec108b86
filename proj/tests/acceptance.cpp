// Acceptance gate: one line per criterion, nonzero exit iff any fails.
// Every pinned constant is a closed-form value of the scenario it checks.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qnogo/qnogo.hpp"

using namespace qnogo;

namespace {

bool near(double value, double expected, double tolerance) {
    return std::abs(value - expected) <= tolerance;
}

// Subspace deletion: entropy log2(3) on the symmetric two-qubit subspace
// drops to 1 bit on the product-with-|0> subspace.
bool subspace_entropy_pair() {
    const DensityMatrix in = maximally_mixed_on(symmetric_projector_two_qubits(), {2, 2});
    const ComplexMatrix out_projector{{1, 0, 0, 0},
                                      {0, 0, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 0}};
    const DensityMatrix out = maximally_mixed_on(out_projector, {2, 2});
    return near(von_neumann_entropy(in), 1.584962500, 1e-9) &&
           near(von_neumann_entropy(out), 1.0, 1e-9);
}

// Two-state deletion entropies at s = 1/sqrt(2) plus closed-form agreement
// on a 101-point overlap grid.
bool deletion_entropies() {
    const ExperimentReport pinned =
        sharper_deleting_entropies(DeletingScenario(1.0 / std::sqrt(2.0), 1.0));
    if (!near(pinned.quantity("S_in"), 0.811278, 1e-6) ||
        !near(pinned.quantity("S_out"), 0.600876, 1e-6))
        return false;
    for (int k = 0; k <= 100; ++k) {
        const double s = k / 100.0;
        const ExperimentReport report = sharper_deleting_entropies(DeletingScenario(s, 1.0));
        if (!near(report.quantity("S_in"), binary_entropy((1.0 + s * s) / 2.0), 1e-6) ||
            !near(report.quantity("S_out"), binary_entropy((1.0 + s) / 2.0), 1e-6))
            return false;
    }
    return true;
}

// Cloning raises the Holevo quantity: pinned values at (0.5, 1) and
// monotone increase across the 11x11 (s, e) grid, strict for interior s.
bool cloning_holevo_increase() {
    const ExperimentReport pinned = cloning_holevo(CloningScenario(0.5, 1.0), false);
    if (!near(pinned.quantity("chi_in"), 0.811278, 1e-6) ||
        !near(pinned.quantity("chi_out"), 0.954434, 1e-6))
        return false;
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const double s = i / 10.0;
            const double e = j / 10.0;
            const ExperimentReport report = cloning_holevo(CloningScenario(s, e), false);
            const double gain = report.quantity("chi_out") - report.quantity("chi_in");
            if (gain < -1e-9)
                return false;
            if (i > 0 && i < 10 && gain <= 1e-9)
                return false;
        }
    return true;
}

// Entanglement across the shared cut: strictly decreased by deletion and
// strictly increased by cloning for interior overlaps; pinned values at
// s = 0.5 with e = 1 and e = 0.5.
bool entanglement_arguments() {
    for (int k = 1; k < 100; ++k) {
        const double s = k / 100.0;
        const ExperimentReport report = entanglement_deleting(DeletingScenario(s, 1.0));
        if (report.quantity("E_in") - report.quantity("E_out") <= 1e-9)
            return false;
    }
    for (int i = 1; i < 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const double s = i / 10.0;
            const double e = j / 10.0;
            const ExperimentReport report = entanglement_cloning(CloningScenario(s, e));
            if (report.quantity("E_out") - report.quantity("E_in") <= 1e-9)
                return false;
        }
    const ExperimentReport no_record = entanglement_cloning(CloningScenario(0.5, 1.0));
    const ExperimentReport half_record = entanglement_cloning(CloningScenario(0.5, 0.5));
    return near(no_record.quantity("E_in"), 0.811278, 1e-6) &&
           near(no_record.quantity("E_out"), 0.954434, 1e-6) &&
           near(half_record.quantity("E_out"), 0.988699, 1e-6);
}

// The reset channel sends every state to |0><0| and its dilation moves the
// input state into the environment register.
bool reset_channel_and_dilation() {
    const QuantumChannel channel = demon_channel();
    const DensityMatrix target = density(PureState::basis(2, 0));
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix rho =
            random_density_matrix(2, mix_seed(501, static_cast<std::uint64_t>(k)));
        if (max_abs_diff(apply_channel(channel, rho).matrix(), target.matrix()) > 1e-10)
            return false;
    }
    const Dilation dilation = stinespring(channel);
    for (int k = 0; k < 100; ++k) {
        const PureState psi =
            random_pure_state(2, mix_seed(502, static_cast<std::uint64_t>(k)));
        const PureState moved = apply_dilation(dilation, psi, {2});
        const PureState swapped = tensor(PureState::basis(2, 0), psi);
        if (std::abs(1.0 - std::norm(overlap(swapped, moved))) > 1e-9)
            return false;
    }
    return true;
}

// Legal evolutions: unitaries conserve spectra; channels never increase
// relative entropy or the Holevo quantity.
bool conservation_properties() {
    if (spectrum_conservation(100, 4, 601).max_deviation > 1e-9)
        return false;
    if (relative_entropy_monotonicity(200, 602).violations != 0)
        return false;
    return holevo_monotonicity(200, 603).violations == 0;
}

// Linearity obstructions: fitted operators miss held-out superpositions by
// a fixed residual but realize the classical subset exactly.
bool linearity_obstructions() {
    const ComplexMatrix clone_op = fit_task_operator(NoGoTask::CLONE);
    const PureState plus = qubit(std::acos(1.0 / std::sqrt(2.0)), 0.0);
    if (!near(task_residual(clone_op, NoGoTask::CLONE, plus), 0.765367, 1e-6))
        return false;

    const LinearityReport deletion = linearity_obstruction(NoGoTask::DELETE, 100, 701);
    if (deletion.training_residual > 1e-9 || deletion.max_heldout_residual <= 0.2)
        return false;

    const PureState zero = PureState::basis(2, 0);
    const PureState one = PureState::basis(2, 1);
    const std::vector<PureState> inputs = {tensor(zero, zero), tensor(one, one)};
    const std::vector<PureState> outputs = {tensor(zero, zero), tensor(one, zero)};
    const ComplexMatrix fitted = fit_linear_operator(inputs, outputs);
    return max_training_residual(fitted, inputs, outputs) < 1e-10 &&
           max_training_residual(cnot().matrix(), inputs, outputs) < 1e-12;
}

// CNOT deletes basis-state copies exactly yet keeps only half the overlap
// with the deleted form of |+>|+>.
bool cnot_behavior() {
    const Gate gate = cnot();
    const PureState eleven = tensor(PureState::basis(2, 1), PureState::basis(2, 1));
    const PureState mapped = apply(gate, eleven);
    if (std::abs(mapped.amplitudes()[2] - 1.0) > 1e-15)
        return false;
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{3}})
        if (std::abs(mapped.amplitudes()[i]) > 1e-15)
            return false;

    const PureState plus = qubit(std::acos(1.0 / std::sqrt(2.0)), 0.0);
    const PureState out = apply(gate, tensor(plus, plus));
    const PureState deleted = tensor(plus, PureState::basis(2, 0));
    return near(std::norm(overlap(deleted, out)), 0.5, 1e-9);
}

// CLI determinism: the full experiment battery is healthy and
// byte-identical across repeated runs with one seed.
bool cli_determinism() {
    cli::RunConfig config;
    config.command = cli::Command::All;
    config.trials = 50;
    config.seed = 7;

    std::ostringstream out_a, diag_a, out_b, diag_b;
    const int code_a = cli::run(config, out_a, diag_a);
    const int code_b = cli::run(config, out_b, diag_b);
    return code_a == 0 && code_b == 0 && out_a.str() == out_b.str();
}

struct Criterion {
    const char* label;
    bool (*check)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"criterion 1: subspace deletion drops entropy from log2(3) to 1 bit",
         &subspace_entropy_pair},
        {"criterion 2: two-state deletion entropies match their closed forms",
         &deletion_entropies},
        {"criterion 3: cloning raises the Holevo quantity", &cloning_holevo_increase},
        {"criterion 4: entanglement falls under deletion, rises under cloning",
         &entanglement_arguments},
        {"criterion 5: reset channel relocates states instead of erasing them",
         &reset_channel_and_dilation},
        {"criterion 6: legal evolutions conserve spectra and distinguishability bounds",
         &conservation_properties},
        {"criterion 7: linear fits fail on superpositions, succeed classically",
         &linearity_obstructions},
        {"criterion 8: CNOT deletes basis states but not superpositions", &cnot_behavior},
        {"criterion 9: CLI battery is deterministic and healthy", &cli_determinism},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = criterion.check();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.label << note << '\n';
        if (!ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}

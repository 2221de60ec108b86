#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/channels.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/fit.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/measures.hpp"
#include "qnogo/rng.hpp"
#include "qnogo/states.hpp"

namespace qnogo {

enum class Verdict { CONSISTENT, VIOLATES };

inline const char* to_string(Verdict v) {
    return v == Verdict::VIOLATES ? "VIOLATES" : "CONSISTENT";
}

/// Deletion setup: s is the overlap of the two source states, t the overlap
/// of the two post-deletion ancilla states. t = 1 is exact deletion (both
/// ancillas land on the same ready state).
struct DeletingScenario {
    double s;
    double t;

    explicit DeletingScenario(double s_, double t_ = 1.0) : s(s_), t(t_) {
        if (s < -1e-12 || t > 1.0 + 1e-12 || s > t + 1e-12)
            throw InvalidScenario("deleting scenario needs 0 <= s <= t <= 1");
        s = std::clamp(s, 0.0, 1.0);
        t = std::clamp(t, s, 1.0);
    }
};

/// Cloning setup: s is the source-state overlap, e the overlap of the two
/// environment records the machine may keep. e = 1 means no record.
struct CloningScenario {
    double s;
    double e;

    explicit CloningScenario(double s_, double e_ = 1.0) : s(s_), e(e_) {
        if (s < -1e-12 || s > 1.0 + 1e-12 || e < -1e-12 || e > 1.0 + 1e-12)
            throw InvalidScenario("cloning scenario needs s and e in [0,1]");
        s = std::clamp(s, 0.0, 1.0);
        e = std::clamp(e, 0.0, 1.0);
    }
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, double>> quantities;
    Verdict verdict;
    double tolerance;

    double quantity(const std::string& key) const {
        for (const auto& [k, v] : quantities)
            if (k == key)
                return v;
        throw DomainError("report has no quantity named " + key);
    }
};

/// Qubit with the requested real overlap against |0>.
inline PureState state_with_overlap(double c) {
    return qubit(std::acos(std::clamp(c, -1.0, 1.0)), 0.0);
}

inline Ensemble equal_pair(const PureState& a, const PureState& b) {
    return Ensemble({{0.5, density(a)}, {0.5, density(b)}});
}

/// Entropy of the flat state on the symmetric two-qubit subspace (all valid
/// deletion inputs |psi psi>) against the flat state on the span of the
/// deletion outputs |psi 0>. A machine compressing the first space into the
/// second would lower closed-system entropy.
inline ExperimentReport deleting_entropy_gap(double tolerance = 1e-9) {
    const double s_in =
        von_neumann_entropy(maximally_mixed_on(symmetric_projector_two_qubits(), {2, 2}));
    const ComplexMatrix out_projector{{1.0, 0.0, 0.0, 0.0},
                                      {0.0, 0.0, 0.0, 0.0},
                                      {0.0, 0.0, 1.0, 0.0},
                                      {0.0, 0.0, 0.0, 0.0}};
    const double s_out = von_neumann_entropy(maximally_mixed_on(out_projector, {2, 2}));
    const double gap = s_in - s_out;
    return ExperimentReport{"delete-gap",
                            {{"S_in", s_in}, {"S_out", s_out}, {"gap", gap}},
                            gap > tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT,
                            tolerance};
}

/// Two-state version of the entropy argument: the equal mixture of
/// |psi_i psi_i> has entropy H((1+s^2)/2), the mixture of the outputs
/// |psi_i a_i> has H((1+s t)/2). Deletion (t close to 1) lowers it.
inline ExperimentReport sharper_deleting_entropies(const DeletingScenario& scenario,
                                                   double tolerance = 1e-9) {
    const PureState psi1 = state_with_overlap(1.0);
    const PureState psi2 = state_with_overlap(scenario.s);
    const PureState a1 = state_with_overlap(1.0);
    const PureState a2 = state_with_overlap(scenario.t);
    const double s_in = von_neumann_entropy(
        equal_pair(tensor(psi1, psi1), tensor(psi2, psi2)).average());
    const double s_out =
        von_neumann_entropy(equal_pair(tensor(psi1, a1), tensor(psi2, a2)).average());
    return ExperimentReport{"delete-entropy",
                            {{"S_in", s_in}, {"S_out", s_out}},
                            s_in > s_out + tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT,
                            tolerance};
}

/// Holevo quantity of the cloning ensemble before and after the machine.
/// Inputs are |psi_i>|0>|0>_E; exact cloning outputs |psi_i>|psi_i>|e_i>,
/// the weak variant keeps only |psi_i>|e_i>. Any increase violates channel
/// monotonicity of accessible information.
inline ExperimentReport cloning_holevo(const CloningScenario& scenario, bool weak,
                                       double tolerance = 1e-9) {
    const PureState psi1 = state_with_overlap(1.0);
    const PureState psi2 = state_with_overlap(scenario.s);
    const PureState e1 = state_with_overlap(1.0);
    const PureState e2 = state_with_overlap(scenario.e);
    const PureState blank = PureState::basis(2, 0);

    const double chi_in = holevo_quantity(equal_pair(tensor(psi1, tensor(blank, blank)),
                                                     tensor(psi2, tensor(blank, blank))));
    const double chi_out =
        weak ? holevo_quantity(equal_pair(tensor(psi1, e1), tensor(psi2, e2)))
             : holevo_quantity(equal_pair(tensor(psi1, tensor(psi1, e1)),
                                          tensor(psi2, tensor(psi2, e2))));
    return ExperimentReport{weak ? "clone-holevo-weak" : "clone-holevo-exact",
                            {{"chi_in", chi_in}, {"chi_out", chi_out}},
                            chi_out > chi_in + tolerance ? Verdict::VIOLATES
                                                         : Verdict::CONSISTENT,
                            tolerance};
}

/// (|0>|psi1 psi1> + |1>|psi2 psi2>)/sqrt(2): Alice's qubit entangled with
/// two candidate deletion inputs on Bob's side.
inline PureState deleting_superposition_before(double s) {
    const PureState pair1 = tensor(state_with_overlap(1.0), state_with_overlap(1.0));
    const PureState pair2 = tensor(state_with_overlap(s), state_with_overlap(s));
    std::vector<cplx> amps(8);
    for (std::size_t i = 0; i < 4; ++i) {
        amps[i] = pair1.amplitudes()[i] / std::sqrt(2.0);
        amps[4 + i] = pair2.amplitudes()[i] / std::sqrt(2.0);
    }
    return PureState(std::move(amps), {2, 2, 2});
}

/// (|0>|psi1 0> + |1>|psi2 0>)/sqrt(2): the same state after Bob deletes his
/// second copy.
inline PureState deleting_superposition_after(double s) {
    const PureState blank = PureState::basis(2, 0);
    const PureState pair1 = tensor(state_with_overlap(1.0), blank);
    const PureState pair2 = tensor(state_with_overlap(s), blank);
    std::vector<cplx> amps(8);
    for (std::size_t i = 0; i < 4; ++i) {
        amps[i] = pair1.amplitudes()[i] / std::sqrt(2.0);
        amps[4 + i] = pair2.amplitudes()[i] / std::sqrt(2.0);
    }
    return PureState(std::move(amps), {2, 2, 2});
}

/// Entanglement across the Alice | Bob cut before and after Bob's local
/// deletion. A drop certifies no local machine can do it.
inline ExperimentReport entanglement_deleting(const DeletingScenario& scenario,
                                              double tolerance = 1e-9) {
    if (std::abs(scenario.t - 1.0) > 1e-12)
        throw InvalidScenario("entanglement argument uses exact deletion (t = 1)");
    const double e_in = entanglement_entropy(deleting_superposition_before(scenario.s), {0});
    const double e_out = entanglement_entropy(deleting_superposition_after(scenario.s), {0});
    return ExperimentReport{"entangle-delete",
                            {{"E_in", e_in}, {"E_out", e_out}},
                            e_in > e_out + tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT,
                            tolerance};
}

/// (|0>|psi1>|0>|0> + |1>|psi2>|0>|0>)/sqrt(2): Alice entangled with Bob's
/// cloning input plus blank copy slot and environment.
inline PureState cloning_superposition_before(double s) {
    const PureState blank = PureState::basis(2, 0);
    const PureState b1 = tensor(tensor(state_with_overlap(1.0), blank), blank);
    const PureState b2 = tensor(tensor(state_with_overlap(s), blank), blank);
    std::vector<cplx> amps(16);
    for (std::size_t i = 0; i < 8; ++i) {
        amps[i] = b1.amplitudes()[i] / std::sqrt(2.0);
        amps[8 + i] = b2.amplitudes()[i] / std::sqrt(2.0);
    }
    return PureState(std::move(amps), {2, 2, 2, 2});
}

/// (|0>|psi1 psi1 e1> + |1>|psi2 psi2 e2>)/sqrt(2): after Bob's local cloner
/// fills the copy slot and writes its environment record.
inline PureState cloning_superposition_after(double s, double e) {
    const PureState b1 = tensor(tensor(state_with_overlap(1.0), state_with_overlap(1.0)),
                                state_with_overlap(1.0));
    const PureState b2 = tensor(tensor(state_with_overlap(s), state_with_overlap(s)),
                                state_with_overlap(e));
    std::vector<cplx> amps(16);
    for (std::size_t i = 0; i < 8; ++i) {
        amps[i] = b1.amplitudes()[i] / std::sqrt(2.0);
        amps[8 + i] = b2.amplitudes()[i] / std::sqrt(2.0);
    }
    return PureState(std::move(amps), {2, 2, 2, 2});
}

/// Entanglement across the Alice | Bob cut before and after Bob's local
/// cloning. A rise certifies no local machine can do it.
inline ExperimentReport entanglement_cloning(const CloningScenario& scenario,
                                             double tolerance = 1e-9) {
    const double e_in = entanglement_entropy(cloning_superposition_before(scenario.s), {0});
    const double e_out =
        entanglement_entropy(cloning_superposition_after(scenario.s, scenario.e), {0});
    return ExperimentReport{"entangle-clone",
                            {{"E_in", e_in}, {"E_out", e_out}},
                            e_out > e_in + tolerance ? Verdict::VIOLATES : Verdict::CONSISTENT,
                            tolerance};
}

enum class NoGoTask { DELETE, CLONE };

/// Training pairs that any linear machine for the task must satisfy.
/// DELETE: |psi psi> -> |psi 0> on a basis of the symmetric subspace.
/// CLONE: |psi 0> -> |psi psi> on the computational basis.
inline std::pair<std::vector<PureState>, std::vector<PureState>>
default_training_pairs(NoGoTask task) {
    const PureState zero = PureState::basis(2, 0);
    const PureState one = PureState::basis(2, 1);
    const PureState plus = qubit(std::acos(1.0 / std::sqrt(2.0)), 0.0);
    std::vector<PureState> inputs, outputs;
    if (task == NoGoTask::DELETE) {
        for (const PureState& psi : {zero, one, plus}) {
            inputs.push_back(tensor(psi, psi));
            outputs.push_back(tensor(psi, zero));
        }
    } else {
        for (const PureState& psi : {zero, one}) {
            inputs.push_back(tensor(psi, zero));
            outputs.push_back(tensor(psi, psi));
        }
    }
    return {std::move(inputs), std::move(outputs)};
}

/// The task's input/output pair for one candidate state.
inline std::pair<PureState, PureState> task_pair(NoGoTask task, const PureState& psi) {
    const PureState zero = PureState::basis(2, 0);
    if (task == NoGoTask::DELETE)
        return {tensor(psi, psi), tensor(psi, zero)};
    return {tensor(psi, zero), tensor(psi, psi)};
}

inline ComplexMatrix fit_task_operator(NoGoTask task) {
    auto [inputs, outputs] = default_training_pairs(task);
    return fit_linear_operator(inputs, outputs);
}

inline double task_residual(const ComplexMatrix& op, NoGoTask task, const PureState& psi) {
    auto [input, target] = task_pair(task, psi);
    return fit_residual(op, input, target);
}

struct LinearityReport {
    NoGoTask task;
    double training_residual;
    double max_heldout_residual;
};

/// Fits the best linear operator to the task's training pairs and probes it
/// on random held-out states. A residual bounded away from zero certifies
/// that no linear map performs the task on all states at once.
inline LinearityReport linearity_obstruction(NoGoTask task, int heldout_count,
                                             std::uint64_t seed) {
    if (heldout_count < 1)
        throw DomainError("need at least one held-out state");
    auto [inputs, outputs] = default_training_pairs(task);
    const ComplexMatrix op = fit_linear_operator(inputs, outputs);
    double heldout = 0.0;
    for (int k = 0; k < heldout_count; ++k) {
        const PureState psi = random_pure_state(2, mix_seed(seed, static_cast<std::uint64_t>(k)));
        heldout = std::max(heldout, task_residual(op, task, psi));
    }
    return LinearityReport{task, max_training_residual(op, inputs, outputs), heldout};
}

struct SpectrumReport {
    int trials;
    std::size_t dim;
    double max_deviation;
};

/// Conjugates random mixed states by random unitaries and reports the worst
/// L-infinity distance between the sorted spectra. Unitary evolution must
/// leave the spectrum alone.
inline SpectrumReport spectrum_conservation(int trials, std::size_t dim, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    double worst = 0.0;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t base = 2 * static_cast<std::uint64_t>(k);
        const DensityMatrix rho = random_density_matrix(dim, mix_seed(seed, base));
        const Gate u = random_unitary(dim, mix_seed(seed, base + 1));
        const std::vector<double> before = hermitian_eig(rho.matrix()).eigenvalues;
        const std::vector<double> after = hermitian_eig(evolve(rho, u).matrix()).eigenvalues;
        for (std::size_t i = 0; i < before.size(); ++i)
            worst = std::max(worst, std::abs(before[i] - after[i]));
    }
    return SpectrumReport{trials, dim, worst};
}

struct MonotonicityReport {
    int trials;
    int violations;
    double max_gap;
};

/// Random full-rank qubit pairs pushed through random channels: the relative
/// entropy between them must not grow. Counts tolerance-1e-9 violations.
inline MonotonicityReport relative_entropy_monotonicity(int trials, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    int violations = 0;
    double max_gap = 0.0;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t base = 3 * static_cast<std::uint64_t>(k);
        const DensityMatrix rho = random_density_matrix(2, mix_seed(seed, base));
        const DensityMatrix sigma = random_density_matrix(2, mix_seed(seed, base + 1));
        const QuantumChannel channel = random_channel(2, 2, 2, mix_seed(seed, base + 2));
        const EntropyValue before = relative_entropy(rho, sigma);
        const EntropyValue after =
            relative_entropy(apply_channel(channel, rho), apply_channel(channel, sigma));
        if (before.is_infinite())
            continue;
        if (after.is_infinite()) {
            ++violations;
            continue;
        }
        const double gap = after.bits() - before.bits();
        max_gap = std::max(max_gap, gap);
        if (gap > 1e-9)
            ++violations;
    }
    return MonotonicityReport{trials, violations, max_gap};
}

/// Random two-state ensembles pushed through random channels: the Holevo
/// quantity must not grow.
inline MonotonicityReport holevo_monotonicity(int trials, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("need at least one trial");
    int violations = 0;
    double max_gap = 0.0;
    for (int k = 0; k < trials; ++k) {
        const std::uint64_t base = 4 * static_cast<std::uint64_t>(k);
        const DensityMatrix rho0 = random_density_matrix(2, mix_seed(seed, base));
        const DensityMatrix rho1 = random_density_matrix(2, mix_seed(seed, base + 1));
        const QuantumChannel channel = random_channel(2, 2, 2, mix_seed(seed, base + 2));
        SeededRng rng(mix_seed(seed, base + 3));
        const double p = 0.2 + 0.6 * rng.uniform();
        const double before =
            holevo_quantity(Ensemble({{p, rho0}, {1.0 - p, rho1}}));
        const double after = holevo_quantity(Ensemble(
            {{p, apply_channel(channel, rho0)}, {1.0 - p, apply_channel(channel, rho1)}}));
        const double gap = after - before;
        max_gap = std::max(max_gap, gap);
        if (gap > 1e-9)
            ++violations;
    }
    return MonotonicityReport{trials, violations, max_gap};
}

struct GramDefectReport {
    double defect;
};

/// Deletion against a fixed ancilla: |0>|A> -> |0>|A_0>, |1>|A> -> |0>|A_1>.
/// Unitarity preserves inner products, so the defect |<out0|out1> - <in0|in1>|
/// equals |<A_0|A_1>|; a nonzero defect forces orthogonal ancilla records.
inline GramDefectReport ancilla_orthogonality(const PureState& a0, const PureState& a1) {
    if (a0.dim() != a1.dim())
        throw DimensionMismatch("ancilla states must share a dimension");
    const PureState ready = PureState::basis(a0.dim(), 0);
    const PureState zero = PureState::basis(2, 0);
    const PureState one = PureState::basis(2, 1);
    const PureState in0 = tensor(zero, ready);
    const PureState in1 = tensor(one, ready);
    const PureState out0 = tensor(zero, a0);
    const PureState out1 = tensor(zero, a1);
    return GramDefectReport{std::abs(overlap(out0, out1) - overlap(in0, in1))};
}

} // namespace qnogo

// Walks the reset channel through its Kraus, channel, and dilation views,
// then shows the entropy bookkeeping that rules out a deletion machine.

#include <cmath>
#include <iostream>

#include "qnogo/qnogo.hpp"

using namespace qnogo;

int main() {
    std::cout << "-- reset channel --\n";
    const QuantumChannel channel = demon_channel();
    const CptpReport cptp = validate_cptp(channel);
    std::cout << "kraus operators: " << channel.kraus().size()
              << ", trace-preservation deviation: " << cptp.max_deviation << "\n";

    const PureState plus = qubit(std::acos(1.0 / std::sqrt(2.0)), 0.0);
    const DensityMatrix reset = apply_channel(channel, density(plus));
    std::cout << "applied to |+><+|: diagonal = (" << reset.matrix()(0, 0).real() << ", "
              << reset.matrix()(1, 1).real() << ")  [every input lands on |0><0|]\n";

    const Dilation dilation = stinespring(channel);
    std::cout << "dilation environment dimension: " << dilation.env_dim << "\n";
    const PureState moved = apply_dilation(dilation, plus, {2});
    const PureState swapped = tensor(PureState::basis(2, 0), plus);
    std::cout << "unitary view sends |psi>|0>_E to |0>|psi>_E, fidelity "
              << std::norm(overlap(swapped, moved))
              << "  [the state moves to the environment, nothing is deleted]\n\n";

    std::cout << "-- why no machine deletes against a copy --\n";
    const ExperimentReport gap = deleting_entropy_gap();
    std::cout << "entropy over all valid inputs |psi psi>: " << gap.quantity("S_in")
              << " bits\nentropy over their targets |psi 0>:     " << gap.quantity("S_out")
              << " bits\nverdict: " << to_string(gap.verdict)
              << " (a closed system cannot lower entropy by " << gap.quantity("gap")
              << " bits)\n\n";

    std::cout << "-- the classical loophole --\n";
    const Gate gate = cnot();
    const PureState one_pair = tensor(PureState::basis(2, 1), PureState::basis(2, 1));
    const PureState deleted = apply(gate, one_pair);
    std::cout << "CNOT on |11>: amplitude at |10> = " << deleted.amplitudes()[2].real()
              << "  [basis states delete fine]\n";
    const PureState plus_pair = tensor(plus, plus);
    const PureState target = tensor(plus, PureState::basis(2, 0));
    std::cout << "CNOT on |++>: fidelity with |+0> = "
              << std::norm(overlap(target, apply(gate, plus_pair)))
              << "  [superpositions break it]\n";
    return 0;
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/measures.hpp"
#include "qnogo/states.hpp"

using namespace qnogo;

namespace {

PureState two_state_superposition(double s) {
    const PureState psi1 = qubit(0.0, 0.0);
    const PureState psi2 = qubit(std::acos(s), 0.0);
    const PureState pair1 = tensor(psi1, psi1);
    const PureState pair2 = tensor(psi2, psi2);
    std::vector<cplx> amps(8);
    for (std::size_t i = 0; i < 4; ++i) {
        amps[i] = pair1.amplitudes()[i] / std::sqrt(2.0);
        amps[4 + i] = pair2.amplitudes()[i] / std::sqrt(2.0);
    }
    return PureState(std::move(amps), {2, 2, 2});
}

} // namespace

TEST_CASE("binary entropy closed form") {
    CHECK(binary_entropy(0.5) == Catch::Approx(1.0).margin(1e-12));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.75) == Catch::Approx(0.811278).margin(1e-6));
    CHECK(binary_entropy(-1e-13) == 0.0);
    CHECK(binary_entropy(1.0 + 1e-13) == 0.0);
    CHECK_THROWS_AS(binary_entropy(-1e-6), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
}

TEST_CASE("von Neumann entropy on the named states") {
    CHECK(von_neumann_entropy(density(random_pure_state(4, 3))) < 1e-10);
    CHECK(von_neumann_entropy(maximally_mixed_on(symmetric_projector_two_qubits(), {2, 2})) ==
          Catch::Approx(std::log2(3.0)).margin(1e-9));

    const ComplexMatrix half{{0.5, 0.0}, {0.0, 0.5}};
    const ComplexMatrix zero_proj{{1.0, 0.0}, {0.0, 0.0}};
    const DensityMatrix product(kronecker(half, zero_proj), {2, 2});
    CHECK(von_neumann_entropy(product) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("entropy stays within [0, log2 dim]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DensityMatrix rho = random_density_matrix(4, 900 + seed);
        const double h = von_neumann_entropy(rho);
        CHECK(h >= 0.0);
        CHECK(h <= 2.0 + 1e-9);
    }
}

TEST_CASE("relative entropy on the named pairs") {
    const DensityMatrix rho = random_density_matrix(2, 17);
    const EntropyValue self = relative_entropy(rho, rho);
    REQUIRE_FALSE(self.is_infinite());
    CHECK(self.bits() == Catch::Approx(0.0).margin(1e-9));

    const DensityMatrix zero = density(PureState::basis(2, 0));
    const DensityMatrix one = density(PureState::basis(2, 1));
    const DensityMatrix mixed = maximally_mixed_on(ComplexMatrix::identity(2));
    const EntropyValue vs_mixed = relative_entropy(zero, mixed);
    REQUIRE_FALSE(vs_mixed.is_infinite());
    CHECK(vs_mixed.bits() == Catch::Approx(1.0).margin(1e-9));

    CHECK(relative_entropy(zero, one).is_infinite());

    CHECK_THROWS_AS(relative_entropy(zero, random_density_matrix(4, 1)), DimensionMismatch);
}

TEST_CASE("relative entropy is nonnegative") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const DensityMatrix rho = random_density_matrix(2, 1200 + seed);
        const DensityMatrix sigma = random_density_matrix(2, 1300 + seed);
        const EntropyValue d = relative_entropy(rho, sigma);
        REQUIRE_FALSE(d.is_infinite());
        CHECK(d.bits() >= 0.0);
    }
}

TEST_CASE("ensembles validate their members") {
    const DensityMatrix rho = random_density_matrix(2, 2);
    CHECK_THROWS_AS(Ensemble({}), DomainError);
    CHECK_THROWS_AS(Ensemble({{0.7, rho}}), DomainError);
    CHECK_THROWS_AS(Ensemble({{1.5, rho}, {-0.5, rho}}), DomainError);
    CHECK_THROWS_AS(Ensemble({{0.5, rho}, {0.5, random_density_matrix(4, 2)}}),
                    DimensionMismatch);
    const Ensemble ok({{0.25, rho}, {0.75, rho}});
    CHECK(max_abs_diff(ok.average().matrix(), rho.matrix()) < 1e-12);
}

TEST_CASE("Holevo quantity on the named ensembles") {
    const DensityMatrix rho = random_density_matrix(2, 23);
    CHECK(holevo_quantity(Ensemble({{1.0, rho}})) == Catch::Approx(0.0).margin(1e-9));

    const DensityMatrix zero = density(PureState::basis(2, 0));
    const DensityMatrix one = density(PureState::basis(2, 1));
    CHECK(holevo_quantity(Ensemble({{0.5, zero}, {0.5, one}})) ==
          Catch::Approx(1.0).margin(1e-9));

    const DensityMatrix tilted = density(qubit(std::acos(0.5), 0.0));
    CHECK(holevo_quantity(Ensemble({{0.5, zero}, {0.5, tilted}})) ==
          Catch::Approx(0.811278).margin(1e-6));
}

TEST_CASE("pure-state Holevo equals the entropy of the average") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix a = density(random_pure_state(2, 1400 + seed));
        const DensityMatrix b = density(random_pure_state(2, 1500 + seed));
        const Ensemble ensemble({{0.5, a}, {0.5, b}});
        CHECK(holevo_quantity(ensemble) ==
              Catch::Approx(von_neumann_entropy(ensemble.average())).margin(1e-9));
    }
}

TEST_CASE("entanglement entropy on the named states") {
    CHECK(entanglement_entropy(tensor(PureState::basis(2, 0), random_pure_state(2, 6)), {0}) <
          1e-9);

    const double r = 1.0 / std::sqrt(2.0);
    const PureState bell({r, 0.0, 0.0, r}, {2, 2});
    CHECK(entanglement_entropy(bell, {0}) == Catch::Approx(1.0).margin(1e-9));

    const PureState joint = two_state_superposition(1.0 / std::sqrt(2.0));
    CHECK(entanglement_entropy(joint, {0}) == Catch::Approx(0.811278).margin(1e-6));
}

TEST_CASE("entanglement entropy is symmetric across the cut") {
    const PureState psi = random_pure_state(8, 44);
    const PureState shaped(psi.amplitudes(), {2, 2, 2});
    CHECK(entanglement_entropy(shaped, {0}) ==
          Catch::Approx(entanglement_entropy(shaped, {1, 2})).margin(1e-9));
}

TEST_CASE("entanglement entropy validates the partition") {
    const PureState bell({1.0, 0.0, 0.0, 1.0}, {2, 2});
    CHECK_THROWS_AS(entanglement_entropy(bell, {}), BadPartition);
    CHECK_THROWS_AS(entanglement_entropy(bell, {0, 1}), BadPartition);
    CHECK_THROWS_AS(entanglement_entropy(bell, {2}), BadPartition);
}

TEST_CASE("all measures are unitarily invariant") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = random_density_matrix(2, 1600 + seed);
        const DensityMatrix sigma = random_density_matrix(2, 1700 + seed);
        const Gate u = random_unitary(2, 1800 + seed);

        CHECK(von_neumann_entropy(evolve(rho, u)) ==
              Catch::Approx(von_neumann_entropy(rho)).margin(1e-9));

        const EntropyValue before = relative_entropy(rho, sigma);
        const EntropyValue after = relative_entropy(evolve(rho, u), evolve(sigma, u));
        REQUIRE_FALSE(before.is_infinite());
        REQUIRE_FALSE(after.is_infinite());
        CHECK(after.bits() == Catch::Approx(before.bits()).margin(1e-9));

        const Ensemble in({{0.5, rho}, {0.5, sigma}});
        const Ensemble out({{0.5, evolve(rho, u)}, {0.5, evolve(sigma, u)}});
        CHECK(holevo_quantity(out) == Catch::Approx(holevo_quantity(in)).margin(1e-9));

        const PureState psi = random_pure_state(4, 1900 + seed);
        const PureState shaped(psi.amplitudes(), {2, 2});
        const Gate local(kronecker(random_unitary(2, 2000 + seed).matrix(),
                                   random_unitary(2, 2100 + seed).matrix()));
        CHECK(entanglement_entropy(apply(local, shaped), {0}) ==
              Catch::Approx(entanglement_entropy(shaped, {0})).margin(1e-9));
    }
}

TEST_CASE("overlaps") {
    const PureState psi = random_pure_state(3, 71);
    CHECK(std::abs(overlap(psi, psi) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(overlap(PureState::basis(2, 0), PureState::basis(2, 1))) < 1e-15);

    const PureState phi = random_pure_state(2, 72);
    const PureState chi = random_pure_state(2, 73);
    const cplx single = overlap(phi, chi);
    const cplx doubled = overlap(tensor(phi, phi), tensor(chi, chi));
    CHECK(std::abs(doubled - single * single) < 1e-12);

    CHECK_THROWS_AS(overlap(psi, phi), DimensionMismatch);
}

TEST_CASE("entropy values clamp noise and guard the infinite case") {
    CHECK(EntropyValue::finite(-1e-10).bits() == 0.0);
    CHECK_THROWS_AS(EntropyValue::finite(-1.0), DomainError);
    CHECK_THROWS_AS(EntropyValue::infinite().bits(), DomainError);
    CHECK(EntropyValue::infinite().is_infinite());
}

#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "qnogo/eig.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/states.hpp"

namespace qnogo {

/// Nonnegative quantity in bits, or the distinguished infinite value that
/// relative entropy takes outside support inclusion.
class EntropyValue {
  public:
    static EntropyValue finite(double bits) {
        if (bits < -1e-9)
            throw DomainError("entropy below -1e-9 indicates a computation error");
        return EntropyValue(std::max(bits, 0.0), false);
    }

    static EntropyValue infinite() { return EntropyValue(0.0, true); }

    bool is_infinite() const { return infinite_; }

    double bits() const {
        if (infinite_)
            throw DomainError("infinite entropy has no finite value");
        return bits_;
    }

  private:
    EntropyValue(double bits, bool infinite) : bits_(bits), infinite_(infinite) {}

    double bits_;
    bool infinite_;
};

/// -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
inline double binary_entropy(double p) {
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw DomainError("binary entropy argument outside [0,1]");
    p = std::min(std::max(p, 0.0), 1.0);
    double h = 0.0;
    if (p > 0.0)
        h -= p * std::log2(p);
    if (p < 1.0)
        h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

/// -sum lambda log2 lambda over the spectrum; eigenvalues below 1e-12
/// contribute nothing.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double h = 0.0;
    for (double lambda : hermitian_eig(rho.matrix()).eigenvalues)
        if (lambda >= 1e-12)
            h -= lambda * std::log2(lambda);
    return std::max(h, 0.0);
}

/// tr(rho log2 rho - rho log2 sigma). Eigenvalues of sigma below 1e-10 form
/// its kernel; any rho weight above 1e-10 in that kernel makes the distance
/// infinite.
inline EntropyValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dims() != sigma.dims())
        throw DimensionMismatch("relative entropy needs matching subsystem dimensions");
    const std::size_t n = rho.dim();
    const EigenDecomposition sig = hermitian_eig(sigma.matrix());

    double kernel_weight = 0.0;
    double trace_rho_log_sigma = 0.0;
    std::vector<cplx> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            v[i] = sig.eigenvectors(i, j);
        const double weight = inner(v, rho.matrix() * v).real();
        if (sig.eigenvalues[j] < 1e-10)
            kernel_weight += weight;
        else
            trace_rho_log_sigma += weight * std::log2(sig.eigenvalues[j]);
    }
    if (kernel_weight > 1e-10)
        return EntropyValue::infinite();

    double trace_rho_log_rho = 0.0;
    for (double lambda : hermitian_eig(rho.matrix()).eigenvalues)
        if (lambda >= 1e-12)
            trace_rho_log_rho += lambda * std::log2(lambda);
    return EntropyValue::finite(trace_rho_log_rho - trace_rho_log_sigma);
}

struct EnsembleMember {
    double probability;
    DensityMatrix state;
};

/// Probabilistic mixture of states on a common space; probabilities must sum
/// to 1 within 1e-9.
class Ensemble {
  public:
    explicit Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
        if (members_.empty())
            throw DomainError("ensemble must have at least one member");
        double total = 0.0;
        for (const EnsembleMember& m : members_) {
            if (m.probability < -1e-12 || m.probability > 1.0 + 1e-12)
                throw DomainError("ensemble probability outside [0,1]");
            if (m.state.dims() != members_.front().state.dims())
                throw DimensionMismatch("ensemble members live on different spaces");
            total += m.probability;
        }
        if (std::abs(total - 1.0) > 1e-9)
            throw DomainError("ensemble probabilities do not sum to 1");
    }

    const std::vector<EnsembleMember>& members() const { return members_; }

    DensityMatrix average() const {
        ComplexMatrix acc = ComplexMatrix::zero(members_.front().state.dim(),
                                                members_.front().state.dim());
        for (const EnsembleMember& m : members_)
            acc = acc + cplx(m.probability) * m.state.matrix();
        return DensityMatrix(std::move(acc), members_.front().state.dims());
    }

  private:
    std::vector<EnsembleMember> members_;
};

/// sum_i p_i S(rho_i | average). For pure-state members this equals the
/// entropy of the average state.
inline double holevo_quantity(const Ensemble& ensemble) {
    const DensityMatrix avg = ensemble.average();
    double chi = 0.0;
    for (const EnsembleMember& m : ensemble.members()) {
        if (m.probability < 1e-15)
            continue;
        const EntropyValue d = relative_entropy(m.state, avg);
        if (d.is_infinite())
            throw DomainError("ensemble member lies outside the average state's support");
        chi += m.probability * d.bits();
    }
    return chi;
}

/// Entropy of the reduced state on the chosen side of a bipartition of a
/// pure state; symmetric under swapping the sides.
inline double entanglement_entropy(const PureState& psi, const std::set<std::size_t>& alice) {
    const std::size_t factors = psi.dims().size();
    if (alice.empty() || alice.size() >= factors)
        throw BadPartition("partition must be a proper nonempty subset of the factors");
    for (std::size_t idx : alice)
        if (idx >= factors)
            throw BadPartition("partition index out of range");
    return von_neumann_entropy(partial_trace(density(psi), alice));
}

inline cplx overlap(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("overlap needs equal dimensions");
    return inner(a.amplitudes(), b.amplitudes());
}

} // namespace qnogo

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/eig.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/rng.hpp"

namespace qnogo {

namespace detail {

inline std::size_t checked_dim_product(const std::vector<std::size_t>& dims,
                                       std::size_t expected) {
    if (dims.empty())
        throw DimensionMismatch("subsystem dimension list must be nonempty");
    std::size_t product = 1;
    for (std::size_t d : dims) {
        if (d == 0)
            throw DimensionMismatch("subsystem dimensions must be positive");
        product *= d;
    }
    if (product != expected)
        throw DimensionMismatch("subsystem dimensions multiply to " + std::to_string(product) +
                                ", expected " + std::to_string(expected));
    return product;
}

} // namespace detail

/// Normalized state vector tagged with its tensor-factor dimensions.
/// The constructor renormalizes once; nothing downstream renormalizes again.
class PureState {
  public:
    PureState(std::vector<cplx> amplitudes, std::vector<std::size_t> dims)
        : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
        detail::checked_dim_product(dims_, amps_.size());
        for (const cplx& z : amps_)
            if (!is_finite(z))
                throw NonFiniteEntry("state amplitude is NaN or Inf");
        const double n = norm2(amps_);
        if (n < 1e-12)
            throw DomainError("cannot normalize a zero state vector");
        for (cplx& z : amps_)
            z /= n;
    }

    static PureState basis(std::size_t dim, std::size_t index) {
        if (index >= dim)
            throw DimensionMismatch("basis index out of range");
        std::vector<cplx> a(dim);
        a[index] = 1.0;
        return PureState(std::move(a), {dim});
    }

    const std::vector<cplx>& amplitudes() const { return amps_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return amps_.size(); }

  private:
    std::vector<cplx> amps_;
    std::vector<std::size_t> dims_;
};

/// Tensor product; subsystem lists concatenate.
inline PureState tensor(const PureState& a, const PureState& b) {
    std::vector<cplx> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            amps[i * b.dim() + j] = a.amplitudes()[i] * b.amplitudes()[j];
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return PureState(std::move(amps), std::move(dims));
}

/// Valid quantum state: Hermitian, unit trace, positive semidefinite, all
/// checked at construction.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> dims)
        : matrix_(std::move(matrix)), dims_(std::move(dims)) {
        if (!matrix_.is_square())
            throw DimensionMismatch("density matrix must be square");
        detail::checked_dim_product(dims_, matrix_.rows());
        if (max_abs_diff(matrix_, dagger(matrix_)) > 1e-9)
            throw NotHermitian("density matrix is not Hermitian within 1e-9");
        const cplx t = trace(matrix_);
        if (std::abs(t - cplx(1.0)) > 1e-9)
            throw DomainError("density matrix trace differs from 1 by more than 1e-9");
        const EigenDecomposition eig = hermitian_eig(matrix_);
        for (double lambda : eig.eigenvalues)
            if (lambda < -1e-9)
                throw DomainError("density matrix has eigenvalue below -1e-9");
    }

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
    std::vector<std::size_t> dims_;
};

inline DensityMatrix density(const PureState& psi) {
    return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()), psi.dims());
}

/// Unitary operator; U†U = I enforced within 1e-9 at construction.
class Gate {
  public:
    explicit Gate(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
        if (!matrix_.is_square())
            throw DimensionMismatch("gate must be square");
        if (max_abs_diff(dagger(matrix_) * matrix_, ComplexMatrix::identity(matrix_.rows())) >
            1e-9)
            throw DomainError("gate is not unitary within 1e-9");
    }

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
};

/// cos(theta)|0> + e^{i phi} sin(theta)|1>.
inline PureState qubit(double theta, double phi) {
    return PureState({std::cos(theta), std::polar(std::sin(theta), phi)}, {2});
}

inline Gate sigma_x() {
    return Gate(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
}

/// Rank-3 projector onto span{|00>, (|01>+|10>)/sqrt(2), |11>}.
inline ComplexMatrix symmetric_projector_two_qubits() {
    return ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                         {0.0, 0.5, 0.5, 0.0},
                         {0.0, 0.5, 0.5, 0.0},
                         {0.0, 0.0, 0.0, 1.0}};
}

/// Projector / rank: the flat state supported exactly on the projected
/// subspace. Pass dims when the space carries tensor structure.
inline DensityMatrix maximally_mixed_on(const ComplexMatrix& projector,
                                        std::vector<std::size_t> dims = {}) {
    if (!projector.is_square())
        throw NotAProjector("projector must be square");
    if (max_abs_diff(projector, dagger(projector)) > 1e-9)
        throw NotAProjector("projector is not Hermitian within 1e-9");
    if (max_abs_diff(projector * projector, projector) > 1e-9)
        throw NotAProjector("projector is not idempotent within 1e-9");
    const double t = trace(projector).real();
    const long long rank = std::llround(t);
    if (rank < 1 || std::abs(t - static_cast<double>(rank)) > 1e-6)
        throw NotAProjector("projector rank must be a positive integer");
    if (dims.empty())
        dims = {projector.rows()};
    return DensityMatrix(cplx(1.0 / static_cast<double>(rank)) * projector, std::move(dims));
}

/// Ginibre vector, normalized; the global phase is fixed by making the
/// largest-magnitude amplitude real positive, which leaves the distribution
/// uniform.
inline PureState random_pure_state(std::size_t dim, std::uint64_t seed) {
    if (dim == 0)
        throw DimensionMismatch("state dimension must be positive");
    SeededRng rng(seed);
    std::vector<cplx> a(dim);
    for (cplx& z : a)
        z = rng.complex_gaussian();
    std::size_t top = 0;
    for (std::size_t i = 1; i < dim; ++i)
        if (std::abs(a[i]) > std::abs(a[top]))
            top = i;
    const double mag = std::abs(a[top]);
    if (mag > 0.0) {
        const cplx phase = std::conj(a[top]) / mag;
        for (cplx& z : a)
            z *= phase;
    }
    return PureState(std::move(a), {dim});
}

/// Haar-distributed unitary: Ginibre matrix orthonormalized column by column
/// with modified Gram-Schmidt, run twice for numerical stability. The
/// normalization step leaves each pivot coefficient real positive, which is
/// the phase convention that makes the result Haar.
inline Gate random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0)
        throw DimensionMismatch("unitary dimension must be positive");
    SeededRng rng(seed);
    std::vector<std::vector<cplx>> col(dim, std::vector<cplx>(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            col[j][i] = rng.complex_gaussian();
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const cplx proj = inner(col[k], col[j]);
                for (std::size_t i = 0; i < dim; ++i)
                    col[j][i] -= proj * col[k][i];
            }
        const double n = norm2(col[j]);
        if (n < 1e-12)
            throw Error("degenerate Ginibre sample");
        for (cplx& z : col[j])
            z /= n;
    }
    std::vector<cplx> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            e[i * dim + j] = col[j][i];
    return Gate(ComplexMatrix(dim, dim, std::move(e)));
}

/// Reduced operator on the kept tensor factors, in ascending factor order.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const std::set<std::size_t>& keep) {
    const std::vector<std::size_t>& dims = rho.dims();
    if (keep.empty())
        throw BadSubsystemIndex("keep set must be nonempty");
    for (std::size_t idx : keep)
        if (idx >= dims.size())
            throw BadSubsystemIndex("subsystem index " + std::to_string(idx) +
                                    " out of range for " + std::to_string(dims.size()) +
                                    " factors");

    std::vector<std::size_t> kept_dims;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (keep.count(i))
            kept_dims.push_back(dims[i]);
    std::size_t kept_total = 1;
    for (std::size_t d : kept_dims)
        kept_total *= d;

    // Split each full index into its kept part and traced part, both encoded
    // row-major in original factor order.
    const std::size_t total = rho.dim();
    std::vector<std::size_t> kept_of(total), traced_of(total);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rest = f;
        std::vector<std::size_t> digit(dims.size());
        for (std::size_t i = dims.size(); i-- > 0;) {
            digit[i] = rest % dims[i];
            rest /= dims[i];
        }
        std::size_t k = 0, t = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (keep.count(i))
                k = k * dims[i] + digit[i];
            else
                t = t * dims[i] + digit[i];
        }
        kept_of[f] = k;
        traced_of[f] = t;
    }

    std::vector<cplx> out(kept_total * kept_total);
    for (std::size_t r = 0; r < total; ++r)
        for (std::size_t c = 0; c < total; ++c)
            if (traced_of[r] == traced_of[c])
                out[kept_of[r] * kept_total + kept_of[c]] += rho.matrix()(r, c);
    return DensityMatrix(ComplexMatrix(kept_total, kept_total, std::move(out)),
                         std::move(kept_dims));
}

/// Mixed state sampled by tracing half of a Ginibre-random pure state on
/// dim x dim; full rank with probability one.
inline DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
    PureState purified = random_pure_state(dim * dim, seed);
    DensityMatrix joint(outer(purified.amplitudes(), purified.amplitudes()), {dim, dim});
    return partial_trace(joint, {0});
}

inline DensityMatrix evolve(const DensityMatrix& rho, const Gate& u) {
    if (u.dim() != rho.dim())
        throw DimensionMismatch("gate and state dimensions differ");
    return DensityMatrix(u.matrix() * rho.matrix() * dagger(u.matrix()), rho.dims());
}

inline PureState apply(const Gate& u, const PureState& psi) {
    if (u.dim() != psi.dim())
        throw DimensionMismatch("gate and state dimensions differ");
    return PureState(u.matrix() * psi.amplitudes(), psi.dims());
}

} // namespace qnogo

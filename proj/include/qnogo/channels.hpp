#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/states.hpp"

namespace qnogo {

/// Channel in Kraus form. Construction checks shapes only; trace
/// preservation is a separate validation so that defective channels can be
/// inspected and reported.
class QuantumChannel {
  public:
    QuantumChannel(std::vector<ComplexMatrix> kraus, std::vector<std::size_t> in_dims,
                   std::vector<std::size_t> out_dims)
        : kraus_(std::move(kraus)), in_dims_(std::move(in_dims)),
          out_dims_(std::move(out_dims)) {
        if (kraus_.empty())
            throw InvalidChannel("channel needs at least one Kraus operator");
        in_dim_ = detail::checked_dim_product(in_dims_, kraus_.front().cols());
        out_dim_ = detail::checked_dim_product(out_dims_, kraus_.front().rows());
        for (const ComplexMatrix& a : kraus_)
            if (a.rows() != out_dim_ || a.cols() != in_dim_)
                throw DimensionMismatch("Kraus operators have mixed shapes");
    }

    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    const std::vector<std::size_t>& in_dims() const { return in_dims_; }
    const std::vector<std::size_t>& out_dims() const { return out_dims_; }
    std::size_t in_dim() const { return in_dim_; }
    std::size_t out_dim() const { return out_dim_; }

  private:
    std::vector<ComplexMatrix> kraus_;
    std::vector<std::size_t> in_dims_;
    std::vector<std::size_t> out_dims_;
    std::size_t in_dim_;
    std::size_t out_dim_;
};

struct CptpReport {
    double max_deviation;
    bool accepted;
};

/// Reports how far sum A_i^dagger A_i sits from the identity; accepted when
/// the largest entry deviation is at most 1e-9.
inline CptpReport validate_cptp(const QuantumChannel& channel) {
    ComplexMatrix acc = ComplexMatrix::zero(channel.in_dim(), channel.in_dim());
    for (const ComplexMatrix& a : channel.kraus())
        acc = acc + dagger(a) * a;
    const double deviation = max_abs_diff(acc, ComplexMatrix::identity(channel.in_dim()));
    return CptpReport{deviation, deviation <= 1e-9};
}

inline DensityMatrix apply_channel(const QuantumChannel& channel, const DensityMatrix& rho) {
    if (!validate_cptp(channel).accepted)
        throw InvalidChannel("channel is not trace preserving within 1e-9");
    if (rho.dim() != channel.in_dim())
        throw DimensionMismatch("state dimension does not match channel input");
    ComplexMatrix acc = ComplexMatrix::zero(channel.out_dim(), channel.out_dim());
    for (const ComplexMatrix& a : channel.kraus())
        acc = acc + a * rho.matrix() * dagger(a);
    return DensityMatrix(std::move(acc), channel.out_dims());
}

/// Unitary realization of a channel on system plus environment. The
/// environment starts in basis state 0; the first in_dim columns of the
/// unitary are the isometry, so column j is the image of |j>|0>_E.
struct Dilation {
    ComplexMatrix isometry;
    std::size_t env_dim;
    Gate unitary;
};

/// Builds V|phi> = sum_i A_i|phi> (x) |i>_E, then completes V's columns to a
/// unitary by Gram-Schmidt over the standard basis vectors in index order,
/// skipping candidates whose residual norm falls below 1e-8.
inline Dilation stinespring(const QuantumChannel& channel) {
    if (!validate_cptp(channel).accepted)
        throw InvalidChannel("channel is not trace preserving within 1e-9");
    const std::size_t in = channel.in_dim();
    const std::size_t out = channel.out_dim();
    const std::size_t env = channel.kraus().size();
    const std::size_t total = out * env;

    // Row index (o, i) -> o*env + i: system factor first, environment last.
    std::vector<cplx> ve(total * in);
    for (std::size_t i = 0; i < env; ++i)
        for (std::size_t o = 0; o < out; ++o)
            for (std::size_t j = 0; j < in; ++j)
                ve[(o * env + i) * in + j] = channel.kraus()[i](o, j);
    ComplexMatrix isometry(total, in, std::move(ve));

    std::vector<std::vector<cplx>> cols;
    cols.reserve(total);
    for (std::size_t j = 0; j < in; ++j) {
        std::vector<cplx> c(total);
        for (std::size_t r = 0; r < total; ++r)
            c[r] = isometry(r, j);
        cols.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < total && cols.size() < total; ++k) {
        std::vector<cplx> c(total);
        c[k] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const std::vector<cplx>& q : cols) {
                const cplx proj = inner(q, c);
                for (std::size_t r = 0; r < total; ++r)
                    c[r] -= proj * q[r];
            }
        const double n = norm2(c);
        if (n < 1e-8)
            continue;
        for (cplx& z : c)
            z /= n;
        cols.push_back(std::move(c));
    }
    if (cols.size() != total)
        throw InvalidChannel("failed to complete the dilation isometry to a unitary");

    std::vector<cplx> ue(total * total);
    for (std::size_t j = 0; j < total; ++j)
        for (std::size_t r = 0; r < total; ++r)
            ue[r * total + j] = cols[j][r];
    return Dilation{std::move(isometry), env, Gate(ComplexMatrix(total, total, std::move(ue)))};
}

/// Runs the dilation unitary on |psi>|0>_E. The result carries the
/// channel's output factors plus one trailing environment factor.
inline PureState apply_dilation(const Dilation& dilation, const PureState& psi,
                                const std::vector<std::size_t>& out_dims) {
    const std::size_t total = dilation.unitary.dim();
    const std::size_t in = dilation.isometry.cols();
    if (psi.dim() != in)
        throw DimensionMismatch("state dimension does not match dilation input");
    std::vector<cplx> embedded(total);
    for (std::size_t j = 0; j < in; ++j)
        embedded[j] = psi.amplitudes()[j];
    std::vector<cplx> image = dilation.unitary.matrix() * embedded;
    std::vector<std::size_t> dims = out_dims;
    dims.push_back(dilation.env_dim);
    return PureState(std::move(image), std::move(dims));
}

/// Conjugates rho (x) |0><0|_E by the dilation unitary and traces out the
/// environment; equals apply_channel for a faithful dilation.
inline DensityMatrix dilate_and_trace(const Dilation& dilation, const DensityMatrix& rho,
                                      const std::vector<std::size_t>& out_dims) {
    const std::size_t total = dilation.unitary.dim();
    const std::size_t in = dilation.isometry.cols();
    if (rho.dim() != in)
        throw DimensionMismatch("state dimension does not match dilation input");
    std::vector<cplx> ext(total * total);
    for (std::size_t r = 0; r < in; ++r)
        for (std::size_t c = 0; c < in; ++c)
            ext[r * total + c] = rho.matrix()(r, c);
    const ComplexMatrix& u = dilation.unitary.matrix();
    ComplexMatrix evolved = u * ComplexMatrix(total, total, std::move(ext)) * dagger(u);
    DensityMatrix joint(std::move(evolved), {total / dilation.env_dim, dilation.env_dim});
    DensityMatrix reduced = partial_trace(joint, {0});
    return DensityMatrix(reduced.matrix(), out_dims);
}

/// Kraus operators sliced from a Haar-random isometry; CPTP by construction.
inline QuantumChannel random_channel(std::size_t in_dim, std::size_t out_dim,
                                     std::size_t env_dim, std::uint64_t seed) {
    if (in_dim == 0 || out_dim == 0 || env_dim == 0)
        throw DimensionMismatch("channel dimensions must be positive");
    const std::size_t total = out_dim * env_dim;
    if (total < in_dim)
        throw DimensionMismatch("out_dim*env_dim must be at least in_dim for an isometry");
    const Gate big = random_unitary(total, seed);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(env_dim);
    for (std::size_t i = 0; i < env_dim; ++i) {
        std::vector<cplx> e(out_dim * in_dim);
        for (std::size_t o = 0; o < out_dim; ++o)
            for (std::size_t j = 0; j < in_dim; ++j)
                e[o * in_dim + j] = big.matrix()(o * env_dim + i, j);
        kraus.emplace_back(out_dim, in_dim, std::move(e));
    }
    return QuantumChannel(std::move(kraus), {in_dim}, {out_dim});
}

/// Two-qubit gate flipping the second qubit when the first is |1>.
inline Gate cnot() {
    return Gate(ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                              {0.0, 1.0, 0.0, 0.0},
                              {0.0, 0.0, 0.0, 1.0},
                              {0.0, 0.0, 1.0, 0.0}});
}

/// Deletion channel {|0><0|, |0><1|}: resets every qubit state to |0>.
inline QuantumChannel demon_channel() {
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
    kraus.push_back(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
    return QuantumChannel(std::move(kraus), {2}, {2});
}

} // namespace qnogo

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qnogo/eig.hpp"
#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"
#include "qnogo/states.hpp"

namespace qnogo {

/// Least-squares operator mapping each input to its paired output:
/// minimizes the summed squared residual over the pairs. Computed as
/// L = Y X^+ with the pseudo-inverse built from the eigendecomposition of
/// the Gram matrix X^dagger X; singular values below 1e-10 count as zero.
inline ComplexMatrix fit_linear_operator(const std::vector<PureState>& inputs,
                                         const std::vector<PureState>& outputs) {
    if (inputs.empty() || inputs.size() != outputs.size())
        throw DimensionMismatch("need equally many inputs and outputs, at least one pair");
    const std::size_t in_dim = inputs.front().dim();
    const std::size_t out_dim = outputs.front().dim();
    const std::size_t pairs = inputs.size();
    for (const PureState& s : inputs)
        if (s.dim() != in_dim)
            throw DimensionMismatch("inputs have mixed dimensions");
    for (const PureState& s : outputs)
        if (s.dim() != out_dim)
            throw DimensionMismatch("outputs have mixed dimensions");

    std::vector<cplx> xe(in_dim * pairs), ye(out_dim * pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        for (std::size_t i = 0; i < in_dim; ++i)
            xe[i * pairs + k] = inputs[k].amplitudes()[i];
        for (std::size_t i = 0; i < out_dim; ++i)
            ye[i * pairs + k] = outputs[k].amplitudes()[i];
    }
    const ComplexMatrix x(in_dim, pairs, std::move(xe));
    const ComplexMatrix y(out_dim, pairs, std::move(ye));

    const EigenDecomposition gram = hermitian_eig(dagger(x) * x);
    std::vector<cplx> inv(pairs * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        const double g = gram.eigenvalues[i];
        const double sigma = std::sqrt(std::max(g, 0.0));
        inv[i * pairs + i] = sigma < 1e-10 ? 0.0 : 1.0 / g;
    }
    const ComplexMatrix pinv = gram.eigenvectors * ComplexMatrix(pairs, pairs, std::move(inv)) *
                               dagger(gram.eigenvectors) * dagger(x);
    return y * pinv;
}

/// Euclidean distance between L applied to the input and the target output.
inline double fit_residual(const ComplexMatrix& op, const PureState& input,
                           const PureState& target) {
    std::vector<cplx> image = op * input.amplitudes();
    if (image.size() != target.amplitudes().size())
        throw DimensionMismatch("fit residual target has the wrong dimension");
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] -= target.amplitudes()[i];
    return norm2(image);
}

inline double max_training_residual(const ComplexMatrix& op,
                                    const std::vector<PureState>& inputs,
                                    const std::vector<PureState>& outputs) {
    double top = 0.0;
    for (std::size_t k = 0; k < inputs.size(); ++k)
        top = std::max(top, fit_residual(op, inputs[k], outputs[k]));
    return top;
}

} // namespace qnogo

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qnogo/errors.hpp"
#include "qnogo/matrix.hpp"

namespace qnogo {

/// Eigenvalues in descending order; column j of eigenvectors pairs with
/// eigenvalues[j].
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

inline double max_offdiag(const std::vector<cplx>& a, std::size_t n) {
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            top = std::max(top, std::abs(a[i * n + j]));
    return top;
}

} // namespace detail

/// Cyclic complex Jacobi diagonalization. Sweeps pivot over every upper
/// off-diagonal entry until all magnitudes drop below 1e-12; gives up after
/// 100 sweeps.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square())
        throw NotHermitian("eigensolver needs a square matrix");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-9)
                throw NotHermitian("matrix is not Hermitian within 1e-9");

    std::vector<cplx> a(m.entries().begin(), m.entries().end());
    // Symmetrize so rotations operate on an exactly Hermitian copy.
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = cplx(a[i * n + i].real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a[i * n + j] + std::conj(a[j * n + i]));
            a[i * n + j] = avg;
            a[j * n + i] = std::conj(avg);
        }
    }

    std::vector<cplx> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        v[i * n + i] = 1.0;

    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;
    bool converged = detail::max_offdiag(a, n) < kOffTol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double r = std::abs(apq);
                if (r < kOffTol)
                    continue;
                const cplx phase = apq / r;
                const double alpha = a[p * n + p].real();
                const double beta = a[q * n + q].real();
                const double theta = (alpha - beta) / (2.0 * r);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary U differs from identity only in rows/cols p,q:
                //   U(p,p)=c, U(p,q)=-s*phase, U(q,p)=s*conj(phase), U(q,q)=c.
                const cplx upq = -s * phase;
                const cplx uqp = s * std::conj(phase);

                // A <- U^dagger A U: columns first, then rows.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a[i * n + p];
                    const cplx aiq = a[i * n + q];
                    a[i * n + p] = aip * c + aiq * uqp;
                    a[i * n + q] = aip * upq + aiq * c;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a[p * n + j];
                    const cplx aqj = a[q * n + j];
                    a[p * n + j] = c * apj + std::conj(uqp) * aqj;
                    a[q * n + j] = std::conj(upq) * apj + c * aqj;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = cplx(a[p * n + p].real(), 0.0);
                a[q * n + q] = cplx(a[q * n + q].real(), 0.0);

                // V <- V U accumulates the eigenvector basis.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v[i * n + p];
                    const cplx viq = v[i * n + q];
                    v[i * n + p] = vip * c + viq * uqp;
                    v[i * n + q] = vip * upq + viq * c;
                }
            }
        converged = detail::max_offdiag(a, n) < kOffTol;
    }
    if (!converged)
        throw NoConvergence("Jacobi sweep limit reached");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x].real() > a[y * n + y].real();
    });

    std::vector<double> lambda(n);
    std::vector<cplx> sorted(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        lambda[j] = a[order[j] * n + order[j]].real();
        for (std::size_t i = 0; i < n; ++i)
            sorted[i * n + j] = v[i * n + order[j]];
    }
    return EigenDecomposition{std::move(lambda), ComplexMatrix(n, n, std::move(sorted))};
}

} // namespace qnogo

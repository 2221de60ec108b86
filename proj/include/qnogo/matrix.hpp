#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/errors.hpp"

namespace qnogo {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense complex matrix with row-major storage. Value-semantic and immutable
/// after construction; every operation below returns a fresh matrix.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0)
            throw DimensionMismatch("matrix dimensions must be positive");
        if (entries_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
        for (const cplx& z : entries_)
            if (!is_finite(z))
                throw NonFiniteEntry("matrix entry is NaN or Inf");
    }

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
        : ComplexMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, flatten(rows)) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols, std::vector<cplx>(rows * cols));
    }

    static ComplexMatrix identity(std::size_t n) {
        std::vector<cplx> e(n * n);
        for (std::size_t i = 0; i < n; ++i)
            e[i * n + i] = 1.0;
        return ComplexMatrix(n, n, std::move(e));
    }

    static ComplexMatrix column(std::vector<cplx> v) {
        const std::size_t n = v.size();
        return ComplexMatrix(n, 1, std::move(v));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const cplx> entries() const { return entries_; }

  private:
    static std::vector<cplx> flatten(std::initializer_list<std::initializer_list<cplx>> rows) {
        std::vector<cplx> out;
        const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols)
                throw DimensionMismatch("ragged initializer rows");
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> entries_;
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix addition shape mismatch");
    std::vector<cplx> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += b.entries()[k];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix subtraction shape mismatch");
    std::vector<cplx> e(a.entries().begin(), a.entries().end());
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] -= b.entries()[k];
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

inline ComplexMatrix operator*(cplx scale, const ComplexMatrix& m) {
    std::vector<cplx> e(m.entries().begin(), m.entries().end());
    for (cplx& z : e)
        z *= scale;
    return ComplexMatrix(m.rows(), m.cols(), std::move(e));
}

inline ComplexMatrix operator*(const ComplexMatrix& m, cplx scale) { return scale * m; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    std::vector<cplx> e(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                e[i * b.cols() + j] += aik * b(k, j);
        }
    return ComplexMatrix(a.rows(), b.cols(), std::move(e));
}

inline ComplexMatrix dagger(const ComplexMatrix& m) {
    std::vector<cplx> e(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e[j * m.rows() + i] = std::conj(m(i, j));
    return ComplexMatrix(m.cols(), m.rows(), std::move(e));
}

inline cplx trace(const ComplexMatrix& m) {
    if (!m.is_square())
        throw DimensionMismatch("trace needs a square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

/// Kronecker product with block (i,j) equal to a(i,j)*b.
inline ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    std::vector<cplx> e(rows * cols);
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx aij = a(ia, ja);
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    e[(ia * b.rows() + ib) * cols + (ja * b.cols() + jb)] = aij * b(ib, jb);
        }
    return ComplexMatrix(rows, cols, std::move(e));
}

inline double max_abs(const ComplexMatrix& m) {
    double top = 0.0;
    for (const cplx& z : m.entries())
        top = std::max(top, std::abs(z));
    return top;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return max_abs(a - b);
}

inline double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const cplx& z : m.entries())
        s += std::norm(z);
    return std::sqrt(s);
}

inline std::vector<cplx> operator*(const ComplexMatrix& m, std::span<const cplx> v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<cplx> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

inline cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("inner product length mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double norm2(std::span<const cplx> v) {
    double s = 0.0;
    for (const cplx& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

/// Outer product |a><b|.
inline ComplexMatrix outer(std::span<const cplx> a, std::span<const cplx> b) {
    std::vector<cplx> e(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            e[i * b.size() + j] = a[i] * std::conj(b[j]);
    return ComplexMatrix(a.size(), b.size(), std::move(e));
}

} // namespace qnogo

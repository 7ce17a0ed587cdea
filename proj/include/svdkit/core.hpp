#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/errors.hpp"

namespace svdkit {

using ComplexScalar = std::complex<double>;

inline bool is_finite(ComplexScalar z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Dense row-major complex matrix. Entries must stay finite; the data
// constructor enforces this. Zero-sized matrices are allowed so that
// rank-0 truncations stay representable.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<ComplexScalar> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                             " entries, expected " + std::to_string(rows_ * cols_));
        }
        for (const ComplexScalar& z : data_) {
            if (!is_finite(z)) {
                throw InvalidInput("matrix entries must be finite");
            }
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    ComplexScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ComplexScalar& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::vector<ComplexScalar>& data() { return data_; }
    const std::vector<ComplexScalar>& data() const { return data_; }

    bool all_finite() const {
        for (const ComplexScalar& z : data_) {
            if (!is_finite(z)) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ComplexScalar> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(j, i) = std::conj(a(i, j));
        }
    }
    return r;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matrix product: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " do not match");
    }
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const ComplexScalar aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix sum: shapes do not match");
    }
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.data()[i] = a.data()[i] + b.data()[i];
    }
    return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix difference: shapes do not match");
    }
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.data()[i] = a.data()[i] - b.data()[i];
    }
    return r;
}

inline ComplexMatrix operator*(ComplexScalar s, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.data()[i] = s * a.data()[i];
    }
    return r;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    return ComplexScalar(s, 0.0) * a;
}

// Sum of diagonal entries. No decomposition involved.
inline ComplexScalar trace(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("trace: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
    }
    ComplexScalar sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

// sqrt(sum |a_ij|^2) over all entries.
inline double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const ComplexScalar& z : a.data()) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

inline double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const ComplexScalar& z : a.data()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

// max_ij |a_ij - conj(a_ji)|; zero for exactly Hermitian matrices.
inline double hermiticity_error(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermiticity_error: matrix must be square");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

} // namespace svdkit

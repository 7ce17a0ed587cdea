#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include "svdkit/core.hpp"

namespace svdkit::detail {

struct JacobiRotation {
    double cs;
    ComplexScalar sn;
};

// Unitary rotation
//
//   J = [ cs  conj(sn)]
//       [-sn       cs ]
//
// chosen so that J^H M J is diagonal for the Hermitian 2x2 block
//
//   M = [      a   c]
//       [conj(c)   b]
//
// with real a, b. Caller guarantees c != 0.
inline JacobiRotation make_jacobi_rotation(double a, double b, ComplexScalar c) {
    const double abs_c = std::abs(c);
    const double zeta = (a - b) / (2.0 * abs_c);
    const double w = std::sqrt(zeta * zeta + 1.0);
    const double t = zeta > 0.0 ? 1.0 / (zeta + w) : 1.0 / (zeta - w);
    const double cs = 1.0 / std::sqrt(t * t + 1.0);
    const ComplexScalar sn = -t * cs * (std::conj(c) / abs_c);
    return {cs, sn};
}

// Columns (i, j) <- [col_i col_j] * J.
inline void rotate_columns(ComplexMatrix& m, std::size_t i, std::size_t j,
                           const JacobiRotation& rot) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const ComplexScalar x = m(k, i);
        const ComplexScalar y = m(k, j);
        m(k, i) = rot.cs * x - rot.sn * y;
        m(k, j) = std::conj(rot.sn) * x + rot.cs * y;
    }
}

// Rows (i, j) <- J^H * [row_i; row_j].
inline void rotate_rows(ComplexMatrix& m, std::size_t i, std::size_t j,
                        const JacobiRotation& rot) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const ComplexScalar x = m(i, k);
        const ComplexScalar y = m(j, k);
        m(i, k) = rot.cs * x - std::conj(rot.sn) * y;
        m(j, k) = rot.sn * x + rot.cs * y;
    }
}

inline double column_norm2(const ComplexMatrix& m, std::size_t j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        sum += std::norm(m(k, j));
    }
    return sum;
}

// <col_i, col_j> = sum_k conj(m(k,i)) * m(k,j).
inline ComplexScalar column_dot(const ComplexMatrix& m, std::size_t i, std::size_t j) {
    ComplexScalar sum = 0.0;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        sum += std::conj(m(k, i)) * m(k, j);
    }
    return sum;
}

} // namespace svdkit::detail

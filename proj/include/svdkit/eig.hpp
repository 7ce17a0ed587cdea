#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/jacobi.hpp"
#include "svdkit/svd.hpp"

namespace svdkit {

inline constexpr double kHermitianTol = 1e-10;

struct EigOptions {
    double pair_tol = 1e-14;
    int max_sweeps = 60;
};

// Spectral decomposition A = V * diag(eigenvalues) * V^H of a Hermitian
// matrix. Eigenvalues are real and non-increasing; eigenvectors are the
// columns of a unitary matrix.
struct EigResult {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors; // n x n, column k pairs with eigenvalues[k]
};

// Classical two-sided Jacobi. Shares the rotation kernel with the SVD: each
// step diagonalizes one 2x2 principal block and the off-diagonal mass
// decreases monotonically.
inline EigResult hermitian_eig(const ComplexMatrix& a, const EigOptions& opts = {}) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermitian_eig: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
    }
    if (!a.all_finite()) {
        throw InvalidInput("hermitian_eig: matrix entries must be finite");
    }
    const double herm = hermiticity_error(a);
    if (herm > kHermitianTol) {
        throw InvalidInput("hermitian_eig: matrix is not Hermitian (max deviation " +
                           std::to_string(herm) + ")");
    }

    const std::size_t n = a.rows();
    // Work on the Hermitian part; exact for Hermitian input.
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol2 = opts.pair_tol * opts.pair_tol;
    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const ComplexScalar hij = h(i, j);
                const double dii = h(i, i).real();
                const double djj = h(j, j).real();
                if (std::norm(hij) <= tol2 * std::abs(dii * djj)) {
                    continue;
                }
                const detail::JacobiRotation rot =
                    detail::make_jacobi_rotation(dii, djj, hij);
                detail::rotate_columns(h, i, j, rot);
                detail::rotate_rows(h, i, j, rot);
                detail::rotate_columns(v, i, j, rot);
                // The rotation zeroes this pair by construction.
                h(i, j) = 0.0;
                h(j, i) = 0.0;
                h(i, i) = h(i, i).real();
                h(j, j) = h(j, j).real();
                rotated = true;
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw ConvergenceFailure("Jacobi eigensolver did not converge within " +
                                 std::to_string(opts.max_sweeps) + " sweeps");
    }

    std::vector<double> lambda(n);
    for (std::size_t i = 0; i < n; ++i) {
        lambda[i] = h(i, i).real();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return lambda[x] > lambda[y]; });

    EigResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t jj = 0; jj < n; ++jj) {
        result.eigenvalues[jj] = lambda[order[jj]];
        for (std::size_t k = 0; k < n; ++k) {
            result.eigenvectors(k, jj) = v(k, order[jj]);
        }
    }
    return result;
}

// Hermitian PSD square root B with B * B ~= a. Eigenvalues in
// [-neg_tol, 0) are clamped to zero; anything below that is rejected,
// where neg_tol = 1e-10 * max(largest eigenvalue, 1).
inline ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
    const EigResult eig = hermitian_eig(a);
    const std::size_t n = a.rows();
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double neg_tol = 1e-10 * std::max(lambda_max, 1.0);
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < -neg_tol) {
            throw NotPositiveSemidefinite("matrix_sqrt_psd: eigenvalue " +
                                          std::to_string(lambda) +
                                          " is below the negativity tolerance");
        }
        roots[i] = std::sqrt(std::max(lambda, 0.0));
    }
    // B = V * diag(sqrt(lambda)) * V^H, then re-symmetrized.
    ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexScalar sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += eig.eigenvectors(i, k) * roots[k] * std::conj(eig.eigenvectors(j, k));
            }
            b(i, j) = sum;
        }
    }
    ComplexMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = 0.5 * (b(i, j) + std::conj(b(j, i)));
        }
    }
    return sym;
}

// Sum of singular values as a trace. The identity tr(A) = sum sigma_i holds
// exactly for Hermitian PSD matrices (there the singular values are the
// eigenvalues); anything else is rejected.
inline double trace_via_singular_values(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("trace_via_singular_values: matrix must be square");
    }
    if (hermiticity_error(a) > kHermitianTol) {
        throw NotPositiveSemidefinite(
            "trace_via_singular_values: matrix is not Hermitian, so it is not PSD "
            "and the trace identity does not apply");
    }
    const EigResult eig = hermitian_eig(a);
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    const double neg_tol = 1e-10 * std::max(lambda_max, 1.0);
    const double lambda_min = eig.eigenvalues.back();
    if (lambda_min < -neg_tol) {
        throw NotPositiveSemidefinite("trace_via_singular_values: eigenvalue " +
                                      std::to_string(lambda_min) +
                                      " is negative, the trace identity does not apply");
    }
    const SvdResult f = svd(a);
    double sum = 0.0;
    for (double s : f.singular_values) {
        sum += s;
    }
    return sum;
}

// sqrt(sum sigma_i^2); equals the entry-wise Frobenius norm.
inline double frobenius_norm_via_singular_values(const ComplexMatrix& a) {
    const SvdResult f = svd(a);
    double sum = 0.0;
    for (double s : f.singular_values) {
        sum += s * s;
    }
    return std::sqrt(sum);
}

} // namespace svdkit

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

namespace svdkit {

struct SvdOptions {
    // A column pair (i, j) counts as orthogonal when
    // |<col_i, col_j>| <= pair_tol * sqrt(|col_i|^2 * |col_j|^2).
    double pair_tol = 1e-14;
    int max_sweeps = 60;
};

// Thin decomposition A = U * diag(singular_values) * V^H with r = min(m, n).
// Singular values are non-increasing; each column of U has its
// largest-magnitude entry phase-fixed to be real and non-negative.
struct SvdResult {
    ComplexMatrix u;                     // m x r
    std::vector<double> singular_values; // length r
    ComplexMatrix v_dagger;              // r x n

    // Number of singular values above tol * sigma_max.
    std::size_t rank(double tol = 1e-12) const {
        if (singular_values.empty() || singular_values.front() <= 0.0) {
            return 0;
        }
        const double cut = tol * singular_values.front();
        std::size_t r = 0;
        for (double s : singular_values) {
            if (s > cut) {
                ++r;
            }
        }
        return r;
    }
};

namespace detail {

// One-sided Jacobi (Hestenes) on a tall matrix B, m >= n: repeatedly rotates
// column pairs until all pairs are orthogonal relative to their norms. On
// return B holds U * Sigma (columns orthogonal, norms are the singular
// values) and V accumulates the rotations, so that B_in = B_out * V^H.
inline void one_sided_jacobi(ComplexMatrix& b, ComplexMatrix& v, double pair_tol,
                             int max_sweeps) {
    const std::size_t n = b.cols();
    const double tol2 = pair_tol * pair_tol;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const double gii = column_norm2(b, i);
                const double gjj = column_norm2(b, j);
                const ComplexScalar gij = column_dot(b, i, j);
                if (std::norm(gij) <= tol2 * gii * gjj) {
                    continue;
                }
                const JacobiRotation rot = make_jacobi_rotation(gii, gjj, gij);
                rotate_columns(b, i, j, rot);
                rotate_columns(v, i, j, rot);
                rotated = true;
            }
        }
        if (!rotated) {
            return;
        }
    }
    throw ConvergenceFailure("one-sided Jacobi SVD did not converge within " +
                             std::to_string(max_sweeps) + " sweeps");
}

// Replaces zero columns of u (all columns < first_zero are unit and mutually
// orthogonal) by unit vectors orthogonal to everything to their left.
inline void complete_orthonormal_columns(ComplexMatrix& u, std::size_t first_zero) {
    const std::size_t m = u.rows();
    std::vector<ComplexScalar> w(m);
    for (std::size_t j = first_zero; j < u.cols(); ++j) {
        // Candidate standard basis vector with the largest residual after
        // projecting out columns [0, j).
        std::size_t best = 0;
        double best_norm2 = -1.0;
        for (std::size_t cand = 0; cand < m; ++cand) {
            double proj2 = 0.0;
            for (std::size_t c = 0; c < j; ++c) {
                proj2 += std::norm(u(cand, c));
            }
            const double residual2 = 1.0 - proj2;
            if (residual2 > best_norm2) {
                best_norm2 = residual2;
                best = cand;
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            w[k] = (k == best) ? 1.0 : 0.0;
        }
        // Two rounds of modified Gram-Schmidt.
        for (int round = 0; round < 2; ++round) {
            for (std::size_t c = 0; c < j; ++c) {
                ComplexScalar dot = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    dot += std::conj(u(k, c)) * w[k];
                }
                for (std::size_t k = 0; k < m; ++k) {
                    w[k] -= dot * u(k, c);
                }
            }
        }
        double norm2 = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            norm2 += std::norm(w[k]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t k = 0; k < m; ++k) {
            u(k, j) = inv * w[k];
        }
    }
}

} // namespace detail

// One-sided Jacobi SVD. Runs on the taller orientation (the input is
// conjugate-transposed when m < n and the factors mapped back), which keeps
// the rotations working on long columns.
inline SvdResult svd(const ComplexMatrix& a, const SvdOptions& opts = {}) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw InvalidInput("svd: matrix must be non-empty");
    }
    if (!a.all_finite()) {
        throw InvalidInput("svd: matrix entries must be finite");
    }

    const bool transposed = a.rows() < a.cols();
    ComplexMatrix b = transposed ? adjoint(a) : a;
    const std::size_t r = b.cols(); // min(m, n)
    ComplexMatrix v = ComplexMatrix::identity(r);
    detail::one_sided_jacobi(b, v, opts.pair_tol, opts.max_sweeps);

    std::vector<double> sigma(r);
    for (std::size_t j = 0; j < r; ++j) {
        sigma[j] = std::sqrt(detail::column_norm2(b, j));
    }
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    ComplexMatrix u1(b.rows(), r);
    ComplexMatrix v1(r, r);
    std::vector<double> sigma_sorted(r);
    std::size_t first_zero = r;
    for (std::size_t jj = 0; jj < r; ++jj) {
        const std::size_t src = order[jj];
        sigma_sorted[jj] = sigma[src];
        for (std::size_t k = 0; k < r; ++k) {
            v1(k, jj) = v(k, src);
        }
        if (sigma[src] > 0.0) {
            const double inv = 1.0 / sigma[src];
            for (std::size_t k = 0; k < b.rows(); ++k) {
                u1(k, jj) = inv * b(k, src);
            }
        } else {
            first_zero = std::min(first_zero, jj);
        }
    }
    if (first_zero < r) {
        detail::complete_orthonormal_columns(u1, first_zero);
    }

    SvdResult result;
    result.singular_values = std::move(sigma_sorted);
    if (transposed) {
        result.u = std::move(v1);
        result.v_dagger = adjoint(u1);
    } else {
        result.u = std::move(u1);
        result.v_dagger = adjoint(v1);
    }

    // Phase convention: rotate each column of U so its largest-magnitude
    // entry (first such row on ties) is real and non-negative; compensate in
    // the matching row of V^H.
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t kmax = 0;
        double amax = -1.0;
        for (std::size_t k = 0; k < result.u.rows(); ++k) {
            const double mag = std::abs(result.u(k, j));
            if (mag > amax) {
                amax = mag;
                kmax = k;
            }
        }
        if (amax <= 0.0) {
            continue;
        }
        const ComplexScalar phase = result.u(kmax, j) / amax;
        const ComplexScalar conj_phase = std::conj(phase);
        for (std::size_t k = 0; k < result.u.rows(); ++k) {
            result.u(k, j) *= conj_phase;
        }
        for (std::size_t k = 0; k < result.v_dagger.cols(); ++k) {
            result.v_dagger(j, k) *= phase;
        }
    }
    return result;
}

} // namespace svdkit

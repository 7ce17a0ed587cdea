#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/svd.hpp"

namespace svdkit {

// Exact error accounting for a rank truncation. By the Eckart-Young theorem
// ||A - A_k||_F^2 equals the discarded weight.
struct TruncationReport {
    std::size_t kept_rank = 0;
    double discarded_weight = 0.0; // sum of squared dropped singular values
    double relative_error = 0.0;   // sqrt(discarded_weight) / ||A||_F, 0 for A = 0
};

// Slices a computed decomposition down to its leading triplets. max_rank
// caps the kept rank directly; tol drops trailing singular values while
// sqrt(sum of dropped sigma^2) stays within tol * ||A||_F. When both are
// given the stricter one wins.
inline std::pair<SvdResult, TruncationReport>
truncate_factors(const SvdResult& full, std::optional<std::size_t> max_rank,
                 std::optional<double> tol) {
    const std::size_t r = full.singular_values.size();
    double total_weight = 0.0;
    for (double s : full.singular_values) {
        total_weight += s * s;
    }

    std::size_t keep = r;
    if (tol) {
        const double budget = (*tol) * (*tol) * total_weight;
        double dropped = 0.0;
        while (keep > 0) {
            const double s = full.singular_values[keep - 1];
            if (dropped + s * s > budget) {
                break;
            }
            dropped += s * s;
            --keep;
        }
    }
    if (max_rank) {
        keep = std::min(keep, *max_rank);
    }

    double discarded = 0.0;
    for (std::size_t i = keep; i < r; ++i) {
        discarded += full.singular_values[i] * full.singular_values[i];
    }

    TruncationReport report;
    report.kept_rank = keep;
    report.discarded_weight = discarded;
    report.relative_error = total_weight > 0.0 ? std::sqrt(discarded / total_weight) : 0.0;

    SvdResult cut;
    cut.singular_values.assign(full.singular_values.begin(),
                               full.singular_values.begin() + keep);
    cut.u = ComplexMatrix(full.u.rows(), keep);
    for (std::size_t i = 0; i < full.u.rows(); ++i) {
        for (std::size_t j = 0; j < keep; ++j) {
            cut.u(i, j) = full.u(i, j);
        }
    }
    cut.v_dagger = ComplexMatrix(keep, full.v_dagger.cols());
    for (std::size_t i = 0; i < keep; ++i) {
        for (std::size_t j = 0; j < full.v_dagger.cols(); ++j) {
            cut.v_dagger(i, j) = full.v_dagger(i, j);
        }
    }
    return {std::move(cut), report};
}

inline std::pair<SvdResult, TruncationReport>
truncated_svd(const ComplexMatrix& a, std::optional<std::size_t> max_rank,
              std::optional<double> tol, const SvdOptions& opts = {}) {
    if (!max_rank && !tol) {
        throw InvalidInput("truncated_svd: at least one of max_rank, tol is required");
    }
    if (max_rank && *max_rank < 1) {
        throw InvalidInput("truncated_svd: max_rank must be at least 1");
    }
    if (tol && !(*tol > 0.0 && *tol < 1.0)) {
        throw InvalidInput("truncated_svd: tol must lie in (0, 1)");
    }
    return truncate_factors(svd(a, opts), max_rank, tol);
}

} // namespace svdkit

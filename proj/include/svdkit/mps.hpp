#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/tensor.hpp"
#include "svdkit/truncation.hpp"

namespace svdkit {

// Open-boundary matrix product state. Core k has shape
// (bond_{k-1}, d_k, bond_k) with bond_0 = bond_n = 1. All cores except the
// last are left-canonical: their (bond_{k-1} * d_k) x bond_k matricization
// has orthonormal columns.
struct MatrixProductState {
    std::vector<std::size_t> site_dims;
    std::vector<DenseTensor> cores;
    std::vector<std::size_t> bond_dims; // bond_1 .. bond_{n-1}
};

// Sequential-SVD factorization: sweep left to right, matricize at each cut,
// truncate, and absorb Sigma * V^H into the remainder. Untruncated, the
// bond dimensions equal the Schmidt ranks of the corresponding bipartitions
// and contracting the cores reproduces the input.
inline std::pair<MatrixProductState, std::vector<TruncationReport>>
mps_from_state(const DenseTensor& amplitudes, std::optional<std::size_t> max_bond,
               std::optional<double> tol) {
    if (amplitudes.rank() < 2) {
        throw ShapeError("mps_from_state: tensor rank must be at least 2");
    }
    if (max_bond && *max_bond < 1) {
        throw InvalidInput("mps_from_state: max_bond must be at least 1");
    }
    if (tol && !(*tol > 0.0 && *tol < 1.0)) {
        throw InvalidInput("mps_from_state: tol must lie in (0, 1)");
    }
    double norm2 = 0.0;
    for (const ComplexScalar& z : amplitudes.data()) {
        norm2 += std::norm(z);
    }
    const double norm = std::sqrt(norm2);
    if (!std::isfinite(norm)) {
        throw InvalidInput("mps_from_state: tensor norm overflows");
    }
    if (norm == 0.0) {
        throw InvalidInput("mps_from_state: tensor is zero");
    }
    const bool truncating = max_bond.has_value() || tol.has_value();
    if (!truncating && std::abs(norm - 1.0) > 1e-10) {
        throw NotNormalized("mps_from_state: tensor norm is " + std::to_string(norm) +
                            ", expected 1");
    }

    const std::vector<std::size_t>& dims = amplitudes.shape();
    const std::size_t n = dims.size();

    MatrixProductState mps;
    mps.site_dims = dims;
    std::vector<TruncationReport> reports;

    std::size_t left_bond = 1;
    std::size_t remaining = amplitudes.size(); // left_bond * d_k * ... * d_n
    std::vector<ComplexScalar> carry = amplitudes.data();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t rows = left_bond * dims[k];
        const std::size_t cols = remaining / rows;
        const ComplexMatrix m(rows, cols, std::move(carry));

        // Numerically zero directions never enter a bond, so untruncated
        // bond dimensions equal the Schmidt ranks of the bipartitions.
        const SvdResult full = svd(m);
        std::size_t cap = full.rank(1e-12);
        if (max_bond) {
            cap = std::min(cap, *max_bond);
        }
        auto [factors, report] = truncate_factors(full, cap, tol);
        const std::size_t bond = report.kept_rank;

        mps.cores.push_back(
            DenseTensor({left_bond, dims[k], bond}, factors.u.data()));
        mps.bond_dims.push_back(bond);
        reports.push_back(report);

        // carry = diag(sigma) * V^H
        carry.resize(bond * cols);
        for (std::size_t i = 0; i < bond; ++i) {
            const double s = factors.singular_values[i];
            for (std::size_t j = 0; j < cols; ++j) {
                carry[i * cols + j] = s * factors.v_dagger(i, j);
            }
        }
        left_bond = bond;
        remaining = bond * cols;
    }
    mps.cores.push_back(DenseTensor({left_bond, dims[n - 1], 1}, std::move(carry)));

    return {std::move(mps), std::move(reports)};
}

// Contracts the cores in order; output shape is site_dims.
inline DenseTensor mps_to_state(const MatrixProductState& mps) {
    if (mps.cores.empty()) {
        throw ShapeError("mps_to_state: no cores");
    }
    std::vector<std::size_t> dims;
    std::size_t bond = 1;
    for (std::size_t k = 0; k < mps.cores.size(); ++k) {
        const DenseTensor& core = mps.cores[k];
        if (core.rank() != 3) {
            throw ShapeError("mps_to_state: core " + std::to_string(k) +
                             " has rank " + std::to_string(core.rank()) + ", expected 3");
        }
        if (core.shape()[0] != bond) {
            throw ShapeError("mps_to_state: core " + std::to_string(k) +
                             " has left bond " + std::to_string(core.shape()[0]) +
                             ", expected " + std::to_string(bond));
        }
        dims.push_back(core.shape()[1]);
        bond = core.shape()[2];
    }
    if (bond != 1) {
        throw ShapeError("mps_to_state: last core has right bond " +
                         std::to_string(bond) + ", expected 1");
    }
    if (!mps.site_dims.empty() && mps.site_dims != dims) {
        throw ShapeError("mps_to_state: site_dims do not match the cores");
    }

    // Accumulate R (prod(d_1..d_k) x bond_k), extending one site at a time.
    ComplexMatrix r(1, 1);
    r(0, 0) = 1.0;
    for (const DenseTensor& core : mps.cores) {
        const std::size_t d = core.shape()[1];
        const std::size_t right = core.shape()[2];
        const ComplexMatrix step = matricize(core, 1); // bond x (d * right)
        const ComplexMatrix grown = r * step;          // D x (d * right)
        r = ComplexMatrix(grown.rows() * d, right, grown.data());
    }
    return DenseTensor(dims, r.data());
}

} // namespace svdkit

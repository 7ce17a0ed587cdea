#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/eig.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/svd.hpp"

namespace svdkit {

// Hermitian, PSD, trace-1 matrix. The constructor enforces all three so the
// distance and fidelity routines can assume well-formed states.
class DensityMatrix {
public:
    static constexpr double kTol = 1e-10;

    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
        if (matrix_.rows() != matrix_.cols()) {
            throw ShapeError("density matrix is " + std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()) + ", expected square");
        }
        if (!matrix_.all_finite()) {
            throw InvalidInput("density matrix entries must be finite");
        }
        const double herm = hermiticity_error(matrix_);
        if (herm > kTol) {
            throw InvalidInput("density matrix is not Hermitian (max deviation " +
                               std::to_string(herm) + ")");
        }
        const ComplexScalar tr = trace(matrix_);
        if (std::abs(tr - ComplexScalar(1.0)) > kTol) {
            throw InvalidInput("density matrix trace is " + std::to_string(tr.real()) +
                               (tr.imag() < 0 ? "-" : "+") +
                               std::to_string(std::abs(tr.imag())) + "i, expected 1");
        }
        const EigResult eig = hermitian_eig(matrix_);
        if (eig.eigenvalues.back() < -kTol) {
            throw NotPositiveSemidefinite("density matrix has eigenvalue " +
                                          std::to_string(eig.eigenvalues.back()));
        }
    }

    // |psi><psi| for a unit vector psi.
    static DensityMatrix pure(std::span<const ComplexScalar> psi) {
        const std::size_t n = psi.size();
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = psi[i] * std::conj(psi[j]);
            }
        }
        return DensityMatrix(std::move(m));
    }

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

namespace detail {

inline void check_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const char* op) {
    if (rho.dim() != sigma.dim()) {
        throw ShapeError(std::string(op) + ": dimensions " + std::to_string(rho.dim()) +
                         " and " + std::to_string(sigma.dim()) + " do not match");
    }
}

} // namespace detail

// Tr|rho - sigma| = sum of singular values of the (Hermitian) difference.
// No 1/2 factor, so the range is [0, 2]; see trace_distance_halved for the
// textbook convention.
inline double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    detail::check_same_dim(rho, sigma, "trace_distance");
    const SvdResult f = svd(rho.matrix() - sigma.matrix());
    double sum = 0.0;
    for (double s : f.singular_values) {
        sum += s;
    }
    return sum;
}

inline double trace_distance_halved(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return 0.5 * trace_distance(rho, sigma);
}

// sum_i |sigma_i(rho) - sigma_i(sigma)| over the sorted spectra. This is a
// diagnostic, not a distance: it agrees with trace_distance for commuting
// states whose eigenbases align under sorting and generally differs (it is
// for instance zero for any two pure states).
inline double trace_distance_spectral_diff(const DensityMatrix& rho,
                                           const DensityMatrix& sigma) {
    detail::check_same_dim(rho, sigma, "trace_distance_spectral_diff");
    const SvdResult fr = svd(rho.matrix());
    const SvdResult fs = svd(sigma.matrix());
    double sum = 0.0;
    for (std::size_t i = 0; i < fr.singular_values.size(); ++i) {
        sum += std::abs(fr.singular_values[i] - fs.singular_values[i]);
    }
    return sum;
}

struct SpectralDiffReport {
    double trace_distance = 0.0; // canonical Tr|rho - sigma|
    double spectral_diff = 0.0;  // sum_i |sigma_i(rho) - sigma_i(sigma)|
    double discrepancy = 0.0;    // |trace_distance - spectral_diff|
};

inline SpectralDiffReport spectral_diff_report(const DensityMatrix& rho,
                                               const DensityMatrix& sigma) {
    SpectralDiffReport r;
    r.trace_distance = trace_distance(rho, sigma);
    r.spectral_diff = trace_distance_spectral_diff(rho, sigma);
    r.discrepancy = std::abs(r.trace_distance - r.spectral_diff);
    return r;
}

// Uhlmann fidelity F = Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
// With G = sqrt(sigma) * sqrt(rho) one has G^H G = sqrt(rho) sigma sqrt(rho),
// so Tr sqrt(...) is the sum of the singular values of G. Going through the
// SVD keeps near-zero directions at absolute error ~eps instead of the
// sqrt(eps) an eigendecomposition of G^H G would give them.
inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    detail::check_same_dim(rho, sigma, "fidelity");
    const ComplexMatrix g =
        matrix_sqrt_psd(sigma.matrix()) * matrix_sqrt_psd(rho.matrix());
    const SvdResult f = svd(g);
    double sum = 0.0;
    for (double s : f.singular_values) {
        sum += s;
    }
    return std::clamp(sum, 0.0, 1.0);
}

// Much of the literature reports F^2; derived accessor for interoperability.
inline double fidelity_squared(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double f = fidelity(rho, sigma);
    return f * f;
}

// |<psi|phi>| for unit vectors; agrees with fidelity(|psi><psi|, |phi><phi|).
inline double fidelity_pure(std::span<const ComplexScalar> psi,
                            std::span<const ComplexScalar> phi) {
    if (psi.size() != phi.size()) {
        throw ShapeError("fidelity_pure: vector lengths " + std::to_string(psi.size()) +
                         " and " + std::to_string(phi.size()) + " do not match");
    }
    double norm_psi = 0.0;
    double norm_phi = 0.0;
    ComplexScalar overlap = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        norm_psi += std::norm(psi[i]);
        norm_phi += std::norm(phi[i]);
        overlap += std::conj(psi[i]) * phi[i];
    }
    if (std::abs(std::sqrt(norm_psi) - 1.0) > 1e-10 ||
        std::abs(std::sqrt(norm_phi) - 1.0) > 1e-10) {
        throw NotNormalized("fidelity_pure: states must have unit norm");
    }
    return std::abs(overlap);
}

} // namespace svdkit

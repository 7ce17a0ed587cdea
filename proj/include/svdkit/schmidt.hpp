#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/svd.hpp"

namespace svdkit {

// Pure state of a bipartite system, amplitudes row-major over (a, b).
// Unit norm is enforced at construction unless auto-normalization is
// requested; silent normalization hides data bugs.
class StateVector {
public:
    static constexpr double kNormTol = 1e-10;

    StateVector(std::size_t dim_a, std::size_t dim_b, std::vector<ComplexScalar> amplitudes,
                bool auto_normalize = false)
        : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
        if (dim_a_ == 0 || dim_b_ == 0) {
            throw InvalidInput("state dimensions must be positive");
        }
        if (amplitudes_.size() != dim_a_ * dim_b_) {
            throw ShapeError("state has " + std::to_string(amplitudes_.size()) +
                             " amplitudes, expected " + std::to_string(dim_a_ * dim_b_));
        }
        double norm2 = 0.0;
        for (const ComplexScalar& z : amplitudes_) {
            if (!is_finite(z)) {
                throw InvalidInput("state amplitudes must be finite");
            }
            norm2 += std::norm(z);
        }
        const double norm = std::sqrt(norm2);
        if (!std::isfinite(norm)) {
            throw InvalidInput("state norm overflows");
        }
        if (norm == 0.0) {
            throw InvalidInput("state is the zero vector");
        }
        if (auto_normalize) {
            const double inv = 1.0 / norm;
            for (ComplexScalar& z : amplitudes_) {
                z *= inv;
            }
        } else if (std::abs(norm - 1.0) > kNormTol) {
            throw NotNormalized("state norm is " + std::to_string(norm) +
                                ", expected 1 within " + std::to_string(kNormTol));
        }
    }

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const std::vector<ComplexScalar>& amplitudes() const { return amplitudes_; }

    ComplexScalar amplitude(std::size_t a, std::size_t b) const {
        return amplitudes_[a * dim_b_ + b];
    }

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<ComplexScalar> amplitudes_;
};

// |Psi> = sum_i sigma_i |u_i> (x) |v_i> over the kept coefficients
// (sigma_i > tol * sigma_max). Weights lambda_i = sigma_i^2 are the reduced
// density matrix eigenvalues and sum to 1 for a normalized state.
struct SchmidtDecomposition {
    std::vector<double> coefficients; // sigma_i, non-increasing
    ComplexMatrix left_vectors;       // d_A x rank, column i is |u_i>
    ComplexMatrix right_vectors;      // d_B x rank, column i is |v_i>
    std::size_t rank = 0;
    std::vector<double> weights;      // lambda_i = sigma_i^2
    double tol = 0.0;
};

inline SchmidtDecomposition schmidt_decompose(const StateVector& state, double tol = 1e-12) {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw InvalidInput("schmidt_decompose: tol must lie in (0, 1)");
    }
    const ComplexMatrix m(state.dim_a(), state.dim_b(), state.amplitudes());
    const SvdResult f = svd(m);

    const double sigma_max = f.singular_values.front();
    std::size_t rank = 0;
    for (double s : f.singular_values) {
        if (s > tol * sigma_max) {
            ++rank;
        }
    }

    SchmidtDecomposition d;
    d.rank = rank;
    d.tol = tol;
    d.coefficients.assign(f.singular_values.begin(), f.singular_values.begin() + rank);
    d.weights.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        d.weights[i] = d.coefficients[i] * d.coefficients[i];
    }
    d.left_vectors = ComplexMatrix(state.dim_a(), rank);
    for (std::size_t a = 0; a < state.dim_a(); ++a) {
        for (std::size_t i = 0; i < rank; ++i) {
            d.left_vectors(a, i) = f.u(a, i);
        }
    }
    // |v_i>[b] = (V^H)(i, b): the right kets are the rows of V^H read as
    // column vectors, without conjugation.
    d.right_vectors = ComplexMatrix(state.dim_b(), rank);
    for (std::size_t b = 0; b < state.dim_b(); ++b) {
        for (std::size_t i = 0; i < rank; ++i) {
            d.right_vectors(b, i) = f.v_dagger(i, b);
        }
    }
    return d;
}

inline std::size_t schmidt_rank(const StateVector& state, double tol = 1e-12) {
    return schmidt_decompose(state, tol).rank;
}

// Entangled iff the Schmidt rank is strictly greater than 1.
inline bool is_entangled(const StateVector& state, double tol = 1e-12) {
    return schmidt_rank(state, tol) > 1;
}

} // namespace svdkit

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"

namespace svdkit {

inline std::size_t shape_product(const std::vector<std::size_t>& shape) {
    std::size_t p = 1;
    for (std::size_t d : shape) {
        p *= d;
    }
    return p;
}

// Dense row-major complex tensor. Rank 0 is a scalar holding one entry.
class DenseTensor {
public:
    DenseTensor() : data_(1) {}

    explicit DenseTensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(checked_size(shape_)) {}

    DenseTensor(std::vector<std::size_t> shape, std::vector<ComplexScalar> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != checked_size(shape_)) {
            throw ShapeError("tensor data has " + std::to_string(data_.size()) +
                             " entries, expected " + std::to_string(shape_product(shape_)));
        }
        for (const ComplexScalar& z : data_) {
            if (!is_finite(z)) {
                throw InvalidInput("tensor entries must be finite");
            }
        }
    }

    std::size_t rank() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }

    ComplexScalar& operator[](std::size_t flat) { return data_[flat]; }
    const ComplexScalar& operator[](std::size_t flat) const { return data_[flat]; }

    std::vector<ComplexScalar>& data() { return data_; }
    const std::vector<ComplexScalar>& data() const { return data_; }

private:
    static std::size_t checked_size(const std::vector<std::size_t>& shape) {
        for (std::size_t d : shape) {
            if (d == 0) {
                throw InvalidInput("tensor dimensions must be positive");
            }
        }
        return shape_product(shape);
    }

    std::vector<std::size_t> shape_;
    std::vector<ComplexScalar> data_;
};

// Same row-major data under new shape metadata.
inline DenseTensor reshape(const DenseTensor& t, std::vector<std::size_t> new_shape) {
    if (shape_product(new_shape) != t.size()) {
        throw ShapeError("reshape: cannot view " + std::to_string(t.size()) +
                         " entries as a tensor of " +
                         std::to_string(shape_product(new_shape)) + " entries");
    }
    return DenseTensor(std::move(new_shape), t.data());
}

// Matrix with rows = prod(shape[0..split)) and cols = prod(shape[split..));
// the row-major data is reinterpreted in place.
inline ComplexMatrix matricize(const DenseTensor& t, std::size_t split) {
    if (split == 0 || split >= t.rank()) {
        throw ShapeError("matricize: split " + std::to_string(split) +
                         " is outside (0, " + std::to_string(t.rank()) + ")");
    }
    std::size_t rows = 1;
    for (std::size_t k = 0; k < split; ++k) {
        rows *= t.shape()[k];
    }
    return ComplexMatrix(rows, t.size() / rows, t.data());
}

inline DenseTensor tensor_from_matrix(const ComplexMatrix& m) {
    return DenseTensor({m.rows(), m.cols()}, m.data());
}

// Contraction of the last `axes` dimensions of a against the first `axes`
// dimensions of b; axes = 0 is the outer product.
inline DenseTensor tensordot(const DenseTensor& a, const DenseTensor& b, std::size_t axes) {
    if (axes > a.rank() || axes > b.rank()) {
        throw ShapeError("tensordot: axes " + std::to_string(axes) +
                         " exceeds a tensor rank");
    }
    std::size_t inner = 1;
    for (std::size_t k = 0; k < axes; ++k) {
        const std::size_t da = a.shape()[a.rank() - axes + k];
        const std::size_t db = b.shape()[k];
        if (da != db) {
            throw ShapeError("tensordot: contracted dimension " + std::to_string(k) +
                             " has size " + std::to_string(da) + " in a but " +
                             std::to_string(db) + " in b");
        }
        inner *= da;
    }

    std::vector<std::size_t> out_shape;
    out_shape.reserve(a.rank() + b.rank() - 2 * axes);
    for (std::size_t k = 0; k + axes < a.rank(); ++k) {
        out_shape.push_back(a.shape()[k]);
    }
    for (std::size_t k = axes; k < b.rank(); ++k) {
        out_shape.push_back(b.shape()[k]);
    }

    const std::size_t m = a.size() / inner;
    const std::size_t n = b.size() / inner;
    DenseTensor out(std::move(out_shape));
    // Row-major layout makes this a plain (m x inner) * (inner x n) product.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            const ComplexScalar aik = a[i * inner + k];
            for (std::size_t j = 0; j < n; ++j) {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return out;
}

} // namespace svdkit

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svdkit/errors.hpp"
#include "svdkit/tensor.hpp"

namespace svdkit {

// Parsed index-notation expression `operand ("," operand)* "->" output` with
// labels drawn from a-z. A label repeated within one operand selects the
// generalized diagonal; labels absent from the output are summed over.
struct ContractionSpec {
    std::vector<std::string> input_indices;
    std::string output_indices;
    // Dimension bound to each label, filled when the spec is evaluated
    // against concrete tensors. Zero means unbound.
    std::array<std::size_t, 26> label_dims{};
};

inline ContractionSpec parse_contraction(std::string_view spec) {
    const auto arrow = spec.find("->");
    if (arrow == std::string_view::npos) {
        throw ParseError("contraction spec '" + std::string(spec) +
                         "': missing \"->\" (explicit output is required)");
    }
    const std::string_view lhs = spec.substr(0, arrow);
    const std::string_view rhs = spec.substr(arrow + 2);

    ContractionSpec result;
    std::string operand;
    const auto flush_operand = [&]() {
        if (operand.empty()) {
            throw ParseError("contraction spec '" + std::string(spec) +
                             "': empty operand");
        }
        result.input_indices.push_back(operand);
        operand.clear();
    };
    for (char ch : lhs) {
        if (ch == ',') {
            flush_operand();
        } else if (ch >= 'a' && ch <= 'z') {
            operand.push_back(ch);
        } else {
            throw ParseError("contraction spec '" + std::string(spec) +
                             "': illegal character '" + std::string(1, ch) + "'");
        }
    }
    flush_operand();

    std::array<bool, 26> bound{};
    for (const std::string& in : result.input_indices) {
        for (char ch : in) {
            bound[static_cast<std::size_t>(ch - 'a')] = true;
        }
    }
    std::array<bool, 26> seen{};
    for (char ch : rhs) {
        if (ch < 'a' || ch > 'z') {
            throw ParseError("contraction spec '" + std::string(spec) +
                             "': illegal character '" + std::string(1, ch) +
                             "' in output");
        }
        const auto idx = static_cast<std::size_t>(ch - 'a');
        if (seen[idx]) {
            throw ParseError("contraction spec '" + std::string(spec) +
                             "': duplicate output label '" + std::string(1, ch) + "'");
        }
        if (!bound[idx]) {
            throw ParseError("contraction spec '" + std::string(spec) +
                             "': output label '" + std::string(1, ch) +
                             "' does not appear in any input");
        }
        seen[idx] = true;
        result.output_indices.push_back(ch);
    }
    return result;
}

namespace detail {

// Binds every label to one dimension, checking consistency across all
// occurrences.
inline std::array<std::size_t, 26> bind_label_dims(const ContractionSpec& spec,
                                                   std::span<const DenseTensor> tensors) {
    if (spec.input_indices.size() != tensors.size()) {
        throw ShapeError("contract: spec has " +
                         std::to_string(spec.input_indices.size()) + " operands but " +
                         std::to_string(tensors.size()) + " tensors were given");
    }
    std::array<std::size_t, 26> dims{};
    for (std::size_t op = 0; op < tensors.size(); ++op) {
        const std::string& labels = spec.input_indices[op];
        if (labels.size() != tensors[op].rank()) {
            throw ShapeError("contract: operand " + std::to_string(op) + " has " +
                             std::to_string(labels.size()) +
                             " labels but the tensor has rank " +
                             std::to_string(tensors[op].rank()));
        }
        for (std::size_t pos = 0; pos < labels.size(); ++pos) {
            const auto idx = static_cast<std::size_t>(labels[pos] - 'a');
            const std::size_t d = tensors[op].shape()[pos];
            if (dims[idx] == 0) {
                dims[idx] = d;
            } else if (dims[idx] != d) {
                throw ShapeError("contract: label '" + std::string(1, labels[pos]) +
                                 "' binds dimension " + std::to_string(dims[idx]) +
                                 " and " + std::to_string(d));
            }
        }
    }
    return dims;
}

} // namespace detail

// Naive full-loop evaluation: for every output multi-index, sum the product
// of operand entries over all assignments of the summed labels.
inline DenseTensor contract(const ContractionSpec& spec,
                            std::span<const DenseTensor> tensors) {
    const std::array<std::size_t, 26> dims = detail::bind_label_dims(spec, tensors);

    // Summed labels in order of first appearance.
    std::string summed;
    for (const std::string& in : spec.input_indices) {
        for (char ch : in) {
            if (spec.output_indices.find(ch) == std::string::npos &&
                summed.find(ch) == std::string::npos) {
                summed.push_back(ch);
            }
        }
    }

    // Flat-index coefficient of each label per operand: the sum of the
    // row-major strides at the positions where the label occurs, so repeated
    // labels walk the generalized diagonal.
    const std::size_t n_ops = tensors.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> coeff(n_ops);
    for (std::size_t op = 0; op < n_ops; ++op) {
        const std::string& labels = spec.input_indices[op];
        const auto& shape = tensors[op].shape();
        std::array<std::size_t, 26> per_label{};
        std::size_t stride = 1;
        for (std::size_t pos = labels.size(); pos-- > 0;) {
            per_label[static_cast<std::size_t>(labels[pos] - 'a')] += stride;
            stride *= shape[pos];
        }
        for (std::size_t l = 0; l < 26; ++l) {
            if (per_label[l] != 0) {
                coeff[op].emplace_back(l, per_label[l]);
            }
        }
    }

    std::vector<std::size_t> out_shape;
    for (char ch : spec.output_indices) {
        out_shape.push_back(dims[static_cast<std::size_t>(ch - 'a')]);
    }
    DenseTensor out(std::move(out_shape));

    std::array<std::size_t, 26> assign{};
    std::vector<std::size_t> out_idx(spec.output_indices.size(), 0);
    std::vector<std::size_t> sum_idx(summed.size(), 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        for (std::size_t k = 0; k < out_idx.size(); ++k) {
            assign[static_cast<std::size_t>(spec.output_indices[k] - 'a')] = out_idx[k];
        }

        ComplexScalar acc = 0.0;
        std::fill(sum_idx.begin(), sum_idx.end(), 0);
        bool more = true;
        while (more) {
            for (std::size_t k = 0; k < sum_idx.size(); ++k) {
                assign[static_cast<std::size_t>(summed[k] - 'a')] = sum_idx[k];
            }
            ComplexScalar term = 1.0;
            for (std::size_t op = 0; op < n_ops; ++op) {
                std::size_t flat_op = 0;
                for (const auto& [label, c] : coeff[op]) {
                    flat_op += c * assign[label];
                }
                term *= tensors[op][flat_op];
            }
            acc += term;

            more = false;
            for (std::size_t k = sum_idx.size(); k-- > 0;) {
                if (++sum_idx[k] < dims[static_cast<std::size_t>(summed[k] - 'a')]) {
                    more = true;
                    break;
                }
                sum_idx[k] = 0;
            }
        }
        out[flat] = acc;

        for (std::size_t k = out_idx.size(); k-- > 0;) {
            if (++out_idx[k] < dims[static_cast<std::size_t>(spec.output_indices[k] - 'a')]) {
                break;
            }
            out_idx[k] = 0;
        }
    }
    return out;
}

inline DenseTensor contract(std::string_view spec, std::span<const DenseTensor> tensors) {
    return contract(parse_contraction(spec), tensors);
}

// Spec with label_dims filled in from concrete tensors.
inline ContractionSpec bind_contraction(ContractionSpec spec,
                                        std::span<const DenseTensor> tensors) {
    spec.label_dims = detail::bind_label_dims(spec, tensors);
    return spec;
}

} // namespace svdkit

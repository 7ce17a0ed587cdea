#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "svdkit/core.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/metrics.hpp"
#include "svdkit/schmidt.hpp"
#include "svdkit/tensor.hpp"

namespace svdkit::io {

// On-disk representation: a JSON object with
//   format_version  1
//   kind            "tensor" | "matrix" | "state" | "density"
//   shape           array of positive integers ([] for a scalar)
//   data            row-major array of [re, im] pairs, one per entry
//   metadata        optional string-to-string object
// Doubles are written in shortest round-trip decimal form, so save followed
// by load reproduces values bit for bit.
struct TensorFile {
    int format_version = 1;
    std::string kind;
    std::vector<std::size_t> shape;
    std::vector<ComplexScalar> data;
    std::map<std::string, std::string> metadata;
};

namespace detail {

inline bool known_kind(const std::string& kind) {
    return kind == "tensor" || kind == "matrix" || kind == "state" || kind == "density";
}

} // namespace detail

inline TensorFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
    if (!j.is_object()) {
        throw FormatError("'" + path + "': top-level value must be an object");
    }

    TensorFile f;
    const auto version = j.find("format_version");
    if (version == j.end() || !version->is_number_integer()) {
        throw FormatError("'" + path + "': missing integer field 'format_version'");
    }
    f.format_version = version->get<int>();
    if (f.format_version != 1) {
        throw FormatError("'" + path + "': unsupported format_version " +
                          std::to_string(f.format_version));
    }

    const auto kind = j.find("kind");
    if (kind == j.end() || !kind->is_string()) {
        throw FormatError("'" + path + "': missing string field 'kind'");
    }
    f.kind = kind->get<std::string>();
    if (!detail::known_kind(f.kind)) {
        throw FormatError("'" + path + "': unknown kind '" + f.kind + "'");
    }

    const auto shape = j.find("shape");
    if (shape == j.end() || !shape->is_array()) {
        throw FormatError("'" + path + "': missing array field 'shape'");
    }
    for (const auto& d : *shape) {
        if (!d.is_number_unsigned()) {
            throw FormatError("'" + path + "': shape entries must be non-negative integers");
        }
        const auto dim = d.get<std::size_t>();
        if (dim == 0) {
            throw InvalidInput("'" + path + "': shape dimensions must be positive");
        }
        f.shape.push_back(dim);
    }

    const auto data = j.find("data");
    if (data == j.end() || !data->is_array()) {
        throw FormatError("'" + path + "': missing array field 'data'");
    }
    f.data.reserve(data->size());
    for (std::size_t k = 0; k < data->size(); ++k) {
        const auto& pair = (*data)[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw FormatError("'" + path + "': data[" + std::to_string(k) +
                              "] must be a [re, im] pair of numbers");
        }
        const ComplexScalar z(pair[0].get<double>(), pair[1].get<double>());
        if (!is_finite(z)) {
            throw InvalidInput("'" + path + "': data[" + std::to_string(k) +
                               "] is not finite");
        }
        f.data.push_back(z);
    }
    const std::size_t expected = shape_product(f.shape);
    if (f.data.size() != expected) {
        throw InvalidInput("'" + path + "': data has " + std::to_string(f.data.size()) +
                           " entries but the shape requires " + std::to_string(expected));
    }

    const auto metadata = j.find("metadata");
    if (metadata != j.end()) {
        if (!metadata->is_object()) {
            throw FormatError("'" + path + "': metadata must be an object");
        }
        for (const auto& [key, value] : metadata->items()) {
            if (!value.is_string()) {
                throw FormatError("'" + path + "': metadata values must be strings");
            }
            f.metadata[key] = value.get<std::string>();
        }
    }
    return f;
}

inline void save_file(const TensorFile& f, const std::string& path) {
    nlohmann::ordered_json j;
    j["format_version"] = f.format_version;
    j["kind"] = f.kind;
    j["shape"] = f.shape;
    auto data = nlohmann::ordered_json::array();
    for (const ComplexScalar& z : f.data) {
        if (!is_finite(z)) {
            throw InvalidInput("'" + path + "': refusing to write non-finite data");
        }
        data.push_back({z.real(), z.imag()});
    }
    j["data"] = std::move(data);
    if (!f.metadata.empty()) {
        j["metadata"] = f.metadata;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

// -- typed views ------------------------------------------------------------

inline DenseTensor as_tensor(const TensorFile& f) {
    return DenseTensor(f.shape, f.data);
}

inline ComplexMatrix as_matrix(const TensorFile& f) {
    if (f.shape.size() != 2) {
        throw ShapeError("file holds a rank-" + std::to_string(f.shape.size()) +
                         " tensor, expected a rank-2 matrix");
    }
    return ComplexMatrix(f.shape[0], f.shape[1], f.data);
}

inline StateVector as_state(const TensorFile& f, std::size_t dim_a, std::size_t dim_b,
                            bool auto_normalize = false) {
    return StateVector(dim_a, dim_b, f.data, auto_normalize);
}

inline DensityMatrix as_density(const TensorFile& f) {
    return DensityMatrix(as_matrix(f));
}

// -- typed loads and saves ----------------------------------------------------

inline DenseTensor load_tensor(const std::string& path) {
    return as_tensor(load_file(path));
}

inline ComplexMatrix load_matrix(const std::string& path) {
    return as_matrix(load_file(path));
}

inline StateVector load_state(const std::string& path, std::size_t dim_a,
                              std::size_t dim_b, bool auto_normalize = false) {
    return as_state(load_file(path), dim_a, dim_b, auto_normalize);
}

inline DensityMatrix load_density(const std::string& path) {
    return as_density(load_file(path));
}

inline void save_tensor(const DenseTensor& t, const std::string& path,
                        const std::string& kind = "tensor",
                        std::map<std::string, std::string> metadata = {}) {
    TensorFile f;
    f.kind = kind;
    f.shape = t.shape();
    f.data = t.data();
    f.metadata = std::move(metadata);
    save_file(f, path);
}

inline void save_matrix(const ComplexMatrix& m, const std::string& path,
                        const std::string& kind = "matrix") {
    TensorFile f;
    f.kind = kind;
    f.shape = {m.rows(), m.cols()};
    f.data = m.data();
    save_file(f, path);
}

inline void save_real_vector(const std::vector<double>& v, const std::string& path) {
    TensorFile f;
    f.kind = "tensor";
    f.shape = {v.size()};
    f.data.reserve(v.size());
    for (double x : v) {
        f.data.emplace_back(x, 0.0);
    }
    save_file(f, path);
}

} // namespace svdkit::io

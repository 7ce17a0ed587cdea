// Command-line surface over the svdkit library. One subcommand per
// operation; numeric output is line-oriented `key value` pairs in shortest
// round-trip decimal form.
//
// Exit codes: 0 success, 2 usage error, 3 input/format error, 4 numerical
// failure (non-convergence), 5 invariant violation.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <svdkit/svdkit.hpp>

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string fmt(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += fmt(values[i]);
    }
    return out;
}

std::string fmt(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

void emit(const std::string& key, const std::string& value) {
    std::cout << key << ' ' << value << '\n';
}

struct UsageError {
    std::string message;
};

std::pair<std::size_t, std::size_t> bipartite_dims(const std::vector<std::size_t>& dims) {
    if (dims.size() != 2) {
        throw UsageError{"--dims expects exactly two comma-separated values"};
    }
    return {dims[0], dims[1]};
}

void save_factors(const svdkit::SvdResult& f, const std::string& prefix) {
    if (f.singular_values.empty()) {
        return; // nothing kept, nothing representable on disk
    }
    svdkit::io::save_matrix(f.u, prefix + ".u");
    svdkit::io::save_real_vector(f.singular_values, prefix + ".s");
    svdkit::io::save_matrix(f.v_dagger, prefix + ".vh");
}

void emit_tensor_shape(const svdkit::DenseTensor& t) {
    emit("output_rank", std::to_string(t.rank()));
    if (t.rank() > 0) {
        emit("output_shape", fmt(t.shape()));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SVD toolkit for quantum states and small tensor networks"};
    app.require_subcommand(1);

    std::string in_a;
    std::string in_b;
    std::string out_path;
    std::string out_prefix;
    std::string spec_text;
    std::vector<std::string> inputs;
    std::vector<std::size_t> dims;
    double tol = 1e-12;
    std::optional<std::size_t> opt_rank;
    std::optional<double> opt_tol;
    std::size_t axes = 0;
    std::uint64_t seed = 0;
    int max_sweeps = svdkit::SvdOptions{}.max_sweeps;
    bool normalize = false;
    bool halved = false;
    bool diagnostic = false;
    bool squared = false;
    bool via_svd = false;

    auto* cmd_svd = app.add_subcommand("svd", "decompose a matrix as U Sigma V^H");
    cmd_svd->add_option("input", in_a, "matrix file")->required();
    cmd_svd->add_option("--out-prefix", out_prefix, "writes <p>.u, <p>.s, <p>.vh")
        ->required();
    cmd_svd->add_option("--max-sweeps", max_sweeps, "Jacobi sweep budget");

    auto* cmd_schmidt =
        app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite pure state");
    cmd_schmidt->add_option("input", in_a, "state file")->required();
    cmd_schmidt->add_option("--dims", dims, "subsystem dimensions dA,dB")
        ->required()
        ->delimiter(',');
    cmd_schmidt->add_option("--tol", tol, "relative coefficient cutoff");
    cmd_schmidt->add_flag("--normalize", normalize, "normalize the state on load");

    auto* cmd_rank = app.add_subcommand("rank", "Schmidt rank of a bipartite pure state");
    cmd_rank->add_option("input", in_a, "state file")->required();
    cmd_rank->add_option("--dims", dims, "subsystem dimensions dA,dB")
        ->required()
        ->delimiter(',');
    cmd_rank->add_option("--tol", tol, "relative coefficient cutoff");

    auto* cmd_tracedist =
        app.add_subcommand("tracedist", "trace distance Tr|rho - sigma| between states");
    cmd_tracedist->add_option("a", in_a, "density matrix file")->required();
    cmd_tracedist->add_option("b", in_b, "density matrix file")->required();
    cmd_tracedist->add_flag("--half", halved, "also print the halved convention");
    cmd_tracedist->add_flag("--diagnostic", diagnostic,
                            "also print the spectral-difference value and discrepancy");

    auto* cmd_fidelity = app.add_subcommand("fidelity", "Uhlmann fidelity between states");
    cmd_fidelity->add_option("a", in_a, "density matrix file")->required();
    cmd_fidelity->add_option("b", in_b, "density matrix file")->required();
    cmd_fidelity->add_flag("--squared", squared, "also print the squared fidelity");

    auto* cmd_frob =
        app.add_subcommand("frob", "Frobenius norm via entries and via singular values");
    cmd_frob->add_option("input", in_a, "matrix file")->required();

    auto* cmd_trace = app.add_subcommand("trace", "trace of a square matrix");
    cmd_trace->add_option("input", in_a, "matrix file")->required();
    cmd_trace->add_flag("--via-svd", via_svd,
                        "also print the PSD singular-value sum (rejects non-PSD input)");

    auto* cmd_contract =
        app.add_subcommand("contract", "evaluate an index-notation contraction");
    cmd_contract->add_option("--spec", spec_text, "expression such as \"ijk,jkl->il\"")
        ->required();
    cmd_contract->add_option("inputs", inputs, "tensor files, one per operand")
        ->required();
    cmd_contract->add_option("--out", out_path, "result tensor file")->required();

    auto* cmd_tensordot = app.add_subcommand("tensordot", "contract trailing against leading axes");
    cmd_tensordot->add_option("a", in_a, "tensor file")->required();
    cmd_tensordot->add_option("b", in_b, "tensor file")->required();
    cmd_tensordot->add_option("--axes", axes, "number of contracted axes")->required();
    cmd_tensordot->add_option("--out", out_path, "result tensor file")->required();

    auto* cmd_truncate = app.add_subcommand("truncate", "rank- or tolerance-truncated SVD");
    cmd_truncate->add_option("input", in_a, "matrix file")->required();
    cmd_truncate->add_option("--rank", opt_rank, "maximum kept rank");
    cmd_truncate->add_option("--tol", opt_tol, "relative Frobenius error budget in (0,1)");
    cmd_truncate->add_option("--out-prefix", out_prefix, "writes <p>.u, <p>.s, <p>.vh")
        ->required();

    auto* cmd_mps = app.add_subcommand("mps", "factor a state tensor into matrix product form");
    cmd_mps->add_option("input", in_a, "state tensor file")->required();
    cmd_mps->add_option("--max-bond", opt_rank, "maximum bond dimension");
    cmd_mps->add_option("--tol", opt_tol, "per-cut relative error budget in (0,1)");
    cmd_mps->add_option("--out-prefix", out_prefix, "writes <p>.core0, <p>.core1, ...")
        ->required();

    auto* cmd_random = app.add_subcommand("random-state", "seeded random normalized state");
    cmd_random->add_option("--dims", dims, "tensor dimensions d1,d2,...")
        ->required()
        ->delimiter(',');
    cmd_random->add_option("--seed", seed, "64-bit seed")->required();
    cmd_random->add_option("--out", out_path, "output state file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_svd)) {
            svdkit::SvdOptions opts;
            opts.max_sweeps = max_sweeps;
            const svdkit::SvdResult f = svdkit::svd(svdkit::io::load_matrix(in_a), opts);
            save_factors(f, out_prefix);
            emit("rank", std::to_string(f.rank()));
            emit("singular_values", fmt(f.singular_values));
        } else if (app.got_subcommand(cmd_schmidt)) {
            const auto [da, db] = bipartite_dims(dims);
            const svdkit::StateVector state = svdkit::io::load_state(in_a, da, db, normalize);
            const svdkit::SchmidtDecomposition d = svdkit::schmidt_decompose(state, tol);
            emit("rank", std::to_string(d.rank));
            emit("coefficients", fmt(d.coefficients));
            emit("weights", fmt(d.weights));
            emit("entangled", d.rank > 1 ? "yes" : "no");
        } else if (app.got_subcommand(cmd_rank)) {
            const auto [da, db] = bipartite_dims(dims);
            const svdkit::StateVector state = svdkit::io::load_state(in_a, da, db);
            emit("rank", std::to_string(svdkit::schmidt_rank(state, tol)));
        } else if (app.got_subcommand(cmd_tracedist)) {
            const svdkit::DensityMatrix rho = svdkit::io::load_density(in_a);
            const svdkit::DensityMatrix sigma = svdkit::io::load_density(in_b);
            const double d = svdkit::trace_distance(rho, sigma);
            emit("trace_distance", fmt(d));
            if (halved) {
                emit("trace_distance_halved", fmt(0.5 * d));
            }
            if (diagnostic) {
                const auto report = svdkit::spectral_diff_report(rho, sigma);
                emit("spectral_diff", fmt(report.spectral_diff));
                emit("discrepancy", fmt(report.discrepancy));
            }
        } else if (app.got_subcommand(cmd_fidelity)) {
            const double f = svdkit::fidelity(svdkit::io::load_density(in_a),
                                              svdkit::io::load_density(in_b));
            emit("fidelity", fmt(f));
            if (squared) {
                emit("fidelity_squared", fmt(f * f));
            }
        } else if (app.got_subcommand(cmd_frob)) {
            const svdkit::ComplexMatrix m = svdkit::io::load_matrix(in_a);
            const double via_entries = svdkit::frobenius_norm(m);
            const double via_sigma = svdkit::frobenius_norm_via_singular_values(m);
            emit("frobenius_entries", fmt(via_entries));
            emit("frobenius_singular_values", fmt(via_sigma));
            emit("difference", fmt(std::abs(via_entries - via_sigma)));
        } else if (app.got_subcommand(cmd_trace)) {
            const svdkit::ComplexMatrix m = svdkit::io::load_matrix(in_a);
            const svdkit::ComplexScalar tr = svdkit::trace(m);
            emit("trace_re", fmt(tr.real()));
            emit("trace_im", fmt(tr.imag()));
            if (via_svd) {
                emit("trace_singular_value_sum", fmt(svdkit::trace_via_singular_values(m)));
            }
        } else if (app.got_subcommand(cmd_contract)) {
            const svdkit::ContractionSpec spec = svdkit::parse_contraction(spec_text);
            std::vector<svdkit::DenseTensor> tensors;
            tensors.reserve(inputs.size());
            for (const std::string& path : inputs) {
                tensors.push_back(svdkit::io::load_tensor(path));
            }
            const svdkit::DenseTensor out = svdkit::contract(spec, tensors);
            svdkit::io::save_tensor(out, out_path);
            emit_tensor_shape(out);
        } else if (app.got_subcommand(cmd_tensordot)) {
            const svdkit::DenseTensor out = svdkit::tensordot(
                svdkit::io::load_tensor(in_a), svdkit::io::load_tensor(in_b), axes);
            svdkit::io::save_tensor(out, out_path);
            emit_tensor_shape(out);
        } else if (app.got_subcommand(cmd_truncate)) {
            const auto [f, report] =
                svdkit::truncated_svd(svdkit::io::load_matrix(in_a), opt_rank, opt_tol);
            save_factors(f, out_prefix);
            emit("kept_rank", std::to_string(report.kept_rank));
            emit("discarded_weight", fmt(report.discarded_weight));
            emit("relative_error", fmt(report.relative_error));
        } else if (app.got_subcommand(cmd_mps)) {
            const auto [mps, reports] =
                svdkit::mps_from_state(svdkit::io::load_tensor(in_a), opt_rank, opt_tol);
            for (std::size_t k = 0; k < mps.cores.size(); ++k) {
                svdkit::io::save_tensor(mps.cores[k],
                                        out_prefix + ".core" + std::to_string(k));
            }
            emit("sites", std::to_string(mps.site_dims.size()));
            emit("bond_dims", fmt(mps.bond_dims));
            std::vector<std::size_t> kept;
            std::vector<double> weights;
            std::vector<double> errors;
            for (const auto& report : reports) {
                kept.push_back(report.kept_rank);
                weights.push_back(report.discarded_weight);
                errors.push_back(report.relative_error);
            }
            emit("cut_kept_rank", fmt(kept));
            emit("cut_discarded_weight", fmt(weights));
            emit("cut_relative_error", fmt(errors));
        } else if (app.got_subcommand(cmd_random)) {
            if (dims.empty()) {
                throw UsageError{"--dims expects at least one dimension"};
            }
            const svdkit::DenseTensor t = svdkit::random_state(dims, seed);
            svdkit::io::save_tensor(t, out_path, "state",
                                    {{"seed", std::to_string(seed)}});
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 2;
    } catch (const svdkit::ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const svdkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const svdkit::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const svdkit::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const svdkit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const svdkit::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

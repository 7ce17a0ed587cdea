// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits with the number of failed criteria.
//
// Usage: acceptance <cli-path> <fixtures-dir> <golden-dir>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <svdkit/svdkit.hpp>

#include "test_util.hpp"

namespace fs = std::filesystem;
using svdkit::ComplexMatrix;
using svdkit::ComplexScalar;
using svdkit::DenseTensor;
using svdkit::DensityMatrix;
using svdkit::SvdResult;

namespace {

std::string g_cli;
fs::path g_fixtures;
fs::path g_golden;
fs::path g_tmp;

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& message) {
        if (!ok) {
            failures.push_back(message);
        }
    }
};

double rel_reconstruction_error(const ComplexMatrix& a, const SvdResult& f) {
    return testutil::reconstruction_error(a, f);
}

// ---------------------------------------------------------------------------
// Shared random-matrix corpus for criteria 1 and 2.

struct CorpusStats {
    double worst_reconstruction = 0.0;
    double worst_orthonormality = 0.0;
    bool sigma_ordered = true;
    double worst_frobenius_identity = 0.0;
    double seconds = 0.0;
};

CorpusStats run_svd_corpus() {
    CorpusStats stats;
    testutil::Rng rng(20240001);
    const auto start = std::chrono::steady_clock::now();
    for (int it = 0; it < 200; ++it) {
        const std::size_t m = rng.integer(1, 64);
        const std::size_t n = rng.integer(1, 64);
        ComplexMatrix a;
        if (it % 4 == 3) {
            // Rank-deficient via an explicit low-rank product.
            const std::size_t r = rng.integer(1, std::min(m, n));
            a = testutil::naive_matmul(
                testutil::random_matrix(m, r, rng.integer(0, 1u << 30)),
                testutil::random_matrix(r, n, rng.integer(0, 1u << 30)));
        } else {
            a = testutil::random_matrix(m, n, rng.integer(0, 1u << 30));
        }
        const SvdResult f = svdkit::svd(a);

        stats.worst_reconstruction =
            std::max(stats.worst_reconstruction, rel_reconstruction_error(a, f));
        stats.worst_orthonormality =
            std::max({stats.worst_orthonormality, testutil::orthonormality_error(f.u),
                      testutil::orthonormality_error(svdkit::adjoint(f.v_dagger))});
        for (std::size_t i = 0; i + 1 < f.singular_values.size(); ++i) {
            stats.sigma_ordered = stats.sigma_ordered &&
                                  f.singular_values[i] >= f.singular_values[i + 1];
        }
        stats.sigma_ordered = stats.sigma_ordered && f.singular_values.back() >= 0.0;

        double sum = 0.0;
        for (double s : f.singular_values) {
            sum += s * s;
        }
        const double via_entries = svdkit::frobenius_norm(a);
        const double gap = std::abs(via_entries - std::sqrt(sum));
        if (via_entries > 0.0) {
            stats.worst_frobenius_identity =
                std::max(stats.worst_frobenius_identity, gap / via_entries);
        } else {
            stats.worst_frobenius_identity = std::max(stats.worst_frobenius_identity, gap);
        }
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
    return stats;
}

const CorpusStats& corpus_stats() {
    static const CorpusStats stats = run_svd_corpus();
    return stats;
}

// ---------------------------------------------------------------------------
// Criteria 1-3: core decomposition identities.

void criterion_svd_correctness(Checker& c) {
    const CorpusStats& s = corpus_stats();
    c.require(s.worst_reconstruction <= 1e-10,
              "reconstruction error " + std::to_string(s.worst_reconstruction));
    c.require(s.worst_orthonormality <= 1e-11,
              "orthonormality residual " + std::to_string(s.worst_orthonormality));
    c.require(s.sigma_ordered, "singular values not sorted non-negative");
    c.require(s.seconds < 30.0, "corpus took " + std::to_string(s.seconds) + " s");
}

void criterion_frobenius_identity(Checker& c) {
    const CorpusStats& s = corpus_stats();
    c.require(s.worst_frobenius_identity <= 1e-10,
              "identity gap " + std::to_string(s.worst_frobenius_identity));
}

void criterion_psd_trace_identity(Checker& c) {
    testutil::Rng rng(20240003);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = rng.integer(1, 12);
        const ComplexMatrix a = testutil::random_psd(n, rng.integer(0, 1u << 30));
        const double tr = svdkit::trace(a).real();
        const double via_sigma = svdkit::trace_via_singular_values(a);
        if (std::abs(via_sigma - tr) > 1e-10 * tr) {
            c.require(false, "trace gap " + std::to_string(std::abs(via_sigma - tr)) +
                                 " on case " + std::to_string(it));
            return;
        }
    }
    const ComplexMatrix counter(2, 2, {ComplexScalar(0), ComplexScalar(1), ComplexScalar(0),
                                       ComplexScalar(0)});
    bool rejected = false;
    try {
        svdkit::trace_via_singular_values(counter);
    } catch (const svdkit::NotPositiveSemidefinite&) {
        rejected = true;
    }
    c.require(rejected, "non-PSD counterexample was not rejected");
}

// ---------------------------------------------------------------------------
// Criteria 4-6: state metrics.

DensityMatrix seeded_density(std::size_t dim, std::uint64_t seed) {
    return DensityMatrix(testutil::random_density(dim, seed));
}

void criterion_trace_distance_metric(Checker& c) {
    testutil::Rng rng(20240004);
    for (int it = 0; it < 100; ++it) {
        const std::size_t dim = rng.integer(2, 8);
        const DensityMatrix rho = seeded_density(dim, rng.integer(0, 1u << 30));
        const DensityMatrix sigma = seeded_density(dim, rng.integer(0, 1u << 30));
        const DensityMatrix tau = seeded_density(dim, rng.integer(0, 1u << 30));
        const double d_rs = svdkit::trace_distance(rho, sigma);
        if (d_rs != svdkit::trace_distance(sigma, rho)) {
            c.require(false, "symmetry broken on case " + std::to_string(it));
            return;
        }
        if (!(d_rs >= 0.0 && d_rs <= 2.0)) {
            c.require(false, "distance out of [0,2]: " + std::to_string(d_rs));
            return;
        }
        if (svdkit::trace_distance(rho, rho) > 1e-10) {
            c.require(false, "D(rho,rho) above 1e-10");
            return;
        }
        const double lhs = d_rs;
        const double rhs =
            svdkit::trace_distance(rho, tau) + svdkit::trace_distance(tau, sigma);
        if (lhs > rhs + 1e-9) {
            c.require(false, "triangle inequality violated by " + std::to_string(lhs - rhs));
            return;
        }
    }

    ComplexMatrix a(2, 2);
    a(0, 0) = 0.75;
    a(1, 1) = 0.25;
    ComplexMatrix b(2, 2);
    b(0, 0) = 0.5;
    b(1, 1) = 0.5;
    const double d = svdkit::trace_distance(DensityMatrix(a), DensityMatrix(b));
    c.require(std::abs(d - 0.5) <= 1e-12,
              "commuting diagonal pair gave " + std::to_string(d));
}

void criterion_spectral_diff_diagnostic(Checker& c) {
    // Commuting diagonal pairs (sorted spectra): zero discrepancy.
    testutil::Rng rng(20240005);
    for (int it = 0; it < 20; ++it) {
        const std::size_t dim = rng.integer(2, 6);
        std::vector<double> p(dim), q(dim);
        double sp = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            p[i] = rng.uniform() + 1e-3;
            q[i] = rng.uniform() + 1e-3;
            sp += p[i];
            sq += q[i];
        }
        for (std::size_t i = 0; i < dim; ++i) {
            p[i] /= sp;
            q[i] /= sq;
        }
        std::sort(p.rbegin(), p.rend());
        std::sort(q.rbegin(), q.rend());
        ComplexMatrix mp(dim, dim), mq(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            mp(i, i) = p[i];
            mq(i, i) = q[i];
        }
        const auto report =
            svdkit::spectral_diff_report(DensityMatrix(mp), DensityMatrix(mq));
        if (report.discrepancy > 1e-12) {
            c.require(false, "commuting discrepancy " + std::to_string(report.discrepancy));
            return;
        }
    }

    // diag(1,0) against |+><+|. Closed-form eigen-oracle for the difference:
    // eigenvalues +-sqrt(0.25*(a-b)^2 + |c|^2) around trace/2, here +-1/sqrt(2),
    // so the canonical distance is sqrt(2) while both spectra are (1, 0).
    ComplexMatrix zero_proj(2, 2);
    zero_proj(0, 0) = 1.0;
    ComplexMatrix plus_proj(2, 2);
    plus_proj(0, 0) = plus_proj(0, 1) = plus_proj(1, 0) = plus_proj(1, 1) = 0.5;
    const DensityMatrix rho{zero_proj};
    const DensityMatrix sigma{plus_proj};

    const ComplexMatrix diff = rho.matrix() - sigma.matrix();
    const double mean = 0.5 * (diff(0, 0).real() + diff(1, 1).real());
    const double radius = std::sqrt(0.25 * std::pow(diff(0, 0).real() - diff(1, 1).real(), 2) +
                                    std::norm(diff(0, 1)));
    const double oracle_distance = std::abs(mean + radius) + std::abs(mean - radius);

    const auto report = svdkit::spectral_diff_report(rho, sigma);
    c.require(report.spectral_diff <= 1e-12,
              "spectral diff " + std::to_string(report.spectral_diff));
    c.require(std::abs(report.trace_distance - oracle_distance) <= 1e-9,
              "trace distance " + std::to_string(report.trace_distance) +
                  " vs oracle " + std::to_string(oracle_distance));
    c.require(std::abs(report.discrepancy - oracle_distance) <= 1e-9,
              "discrepancy " + std::to_string(report.discrepancy) + " vs oracle " +
                  std::to_string(oracle_distance));
}

void criterion_fidelity(Checker& c) {
    testutil::Rng rng(20240006);
    for (int it = 0; it < 50; ++it) {
        const std::size_t dim = rng.integer(2, 6);
        const DensityMatrix rho = seeded_density(dim, rng.integer(0, 1u << 30));
        const double self = svdkit::fidelity(rho, rho);
        if (std::abs(self - 1.0) > 1e-9) {
            c.require(false, "F(rho,rho) = " + std::to_string(self));
            return;
        }
        const DensityMatrix sigma = seeded_density(dim, rng.integer(0, 1u << 30));
        const double f = svdkit::fidelity(rho, sigma);
        if (!(f >= 0.0 && f <= 1.0)) {
            c.require(false, "fidelity out of range: " + std::to_string(f));
            return;
        }
    }
    for (int it = 0; it < 50; ++it) {
        const std::size_t dim = rng.integer(2, 6);
        const auto psi = testutil::random_unit_vector(dim, rng.integer(0, 1u << 30));
        const auto phi = testutil::random_unit_vector(dim, rng.integer(0, 1u << 30));
        const double direct = svdkit::fidelity_pure(psi, phi);
        const double uhlmann =
            svdkit::fidelity(DensityMatrix::pure(psi), DensityMatrix::pure(phi));
        if (std::abs(direct - uhlmann) > 1e-8) {
            c.require(false, "pure-state gap " + std::to_string(std::abs(direct - uhlmann)));
            return;
        }
    }
    ComplexMatrix half(2, 2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    ComplexMatrix zero_proj(2, 2);
    zero_proj(0, 0) = 1.0;
    const double f = svdkit::fidelity(DensityMatrix(half), DensityMatrix(zero_proj));
    c.require(std::abs(f - 1.0 / std::sqrt(2.0)) <= 1e-9,
              "closed form gave " + std::to_string(f));
}

// ---------------------------------------------------------------------------
// Criterion 7: Schmidt suite.

void criterion_schmidt(Checker& c) {
    testutil::Rng rng(20240007);
    for (int it = 0; it < 50; ++it) {
        const std::size_t da = rng.integer(2, 6);
        const std::size_t db = rng.integer(2, 6);
        const auto u = testutil::random_unit_vector(da, rng.integer(0, 1u << 30));
        const auto v = testutil::random_unit_vector(db, rng.integer(0, 1u << 30));
        std::vector<ComplexScalar> amps;
        amps.reserve(da * db);
        for (const auto& x : u) {
            for (const auto& y : v) {
                amps.push_back(x * y);
            }
        }
        const svdkit::StateVector s(da, db, amps, true);
        if (svdkit::schmidt_rank(s) != 1 || svdkit::is_entangled(s)) {
            c.require(false, "product state not rank 1 on case " + std::to_string(it));
            return;
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const svdkit::StateVector bell(2, 2,
                                   {ComplexScalar(inv_sqrt2), ComplexScalar(0),
                                    ComplexScalar(0), ComplexScalar(inv_sqrt2)});
    const auto bd = svdkit::schmidt_decompose(bell);
    c.require(bd.rank == 2, "Bell rank " + std::to_string(bd.rank));
    c.require(std::abs(bd.coefficients[0] - inv_sqrt2) <= 1e-12 &&
                  std::abs(bd.coefficients[1] - inv_sqrt2) <= 1e-12,
              "Bell coefficients off");

    for (int it = 0; it < 20; ++it) {
        const std::size_t da = rng.integer(2, 5);
        const std::size_t db = rng.integer(2, 5);
        testutil::Rng amp_rng(rng.integer(0, 1u << 30));
        std::vector<ComplexScalar> amps(da * db);
        for (auto& z : amps) {
            z = amp_rng.complex_normal();
        }
        const svdkit::StateVector s(da, db, amps, true);
        const auto d = svdkit::schmidt_decompose(s);
        double total = 0.0;
        for (double w : d.weights) {
            total += w;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            c.require(false, "weights sum " + std::to_string(total));
            return;
        }
        double err2 = 0.0;
        for (std::size_t a = 0; a < da; ++a) {
            for (std::size_t b = 0; b < db; ++b) {
                ComplexScalar sum = 0.0;
                for (std::size_t i = 0; i < d.rank; ++i) {
                    sum += d.coefficients[i] * d.left_vectors(a, i) * d.right_vectors(b, i);
                }
                err2 += std::norm(sum - s.amplitude(a, b));
            }
        }
        if (std::sqrt(err2) > 1e-10) {
            c.require(false, "reconstruction error " + std::to_string(std::sqrt(err2)));
            return;
        }
    }

    // Local-unitary invariance of the coefficient spectrum.
    testutil::Rng amp_rng(424242);
    std::vector<ComplexScalar> amps(12);
    for (auto& z : amps) {
        z = amp_rng.complex_normal();
    }
    const svdkit::StateVector base(3, 4, amps, true);
    const auto base_d = svdkit::schmidt_decompose(base);
    for (int it = 0; it < 20; ++it) {
        const ComplexMatrix ua = testutil::random_unitary(3, rng.integer(0, 1u << 30));
        const ComplexMatrix ub = testutil::random_unitary(4, rng.integer(0, 1u << 30));
        std::vector<ComplexScalar> rotated(12, ComplexScalar(0));
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                for (std::size_t ap = 0; ap < 3; ++ap) {
                    for (std::size_t bp = 0; bp < 4; ++bp) {
                        rotated[a * 4 + b] += ua(a, ap) * ub(b, bp) * base.amplitude(ap, bp);
                    }
                }
            }
        }
        const svdkit::StateVector rs(3, 4, rotated, true);
        const auto d = svdkit::schmidt_decompose(rs);
        if (d.rank != base_d.rank) {
            c.require(false, "rank changed under local unitaries");
            return;
        }
        for (std::size_t i = 0; i < d.rank; ++i) {
            if (std::abs(d.coefficients[i] - base_d.coefficients[i]) > 1e-10) {
                c.require(false, "spectrum moved by " +
                                     std::to_string(std::abs(d.coefficients[i] -
                                                             base_d.coefficients[i])));
                return;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: contraction engine vs brute-force oracle.

// Fully independent evaluator: iterates over every assignment of every label
// and scatter-adds into the output.
DenseTensor oracle_contract(const svdkit::ContractionSpec& spec,
                            const std::vector<DenseTensor>& tensors) {
    std::map<char, std::size_t> dims;
    for (std::size_t op = 0; op < tensors.size(); ++op) {
        for (std::size_t pos = 0; pos < spec.input_indices[op].size(); ++pos) {
            dims[spec.input_indices[op][pos]] = tensors[op].shape()[pos];
        }
    }
    std::vector<std::size_t> out_shape;
    for (char ch : spec.output_indices) {
        out_shape.push_back(dims.at(ch));
    }
    DenseTensor out(out_shape);

    std::vector<char> labels;
    std::size_t assignments = 1;
    for (const auto& [label, dim] : dims) {
        labels.push_back(label);
        assignments *= dim;
    }
    for (std::size_t code = 0; code < assignments; ++code) {
        std::map<char, std::size_t> assign;
        std::size_t rest = code;
        for (char label : labels) {
            assign[label] = rest % dims.at(label);
            rest /= dims.at(label);
        }
        ComplexScalar term = 1.0;
        for (std::size_t op = 0; op < tensors.size(); ++op) {
            std::size_t flat = 0;
            for (char ch : spec.input_indices[op]) {
                flat = flat * dims.at(ch) + assign.at(ch);
            }
            term *= tensors[op][flat];
        }
        std::size_t out_flat = 0;
        for (char ch : spec.output_indices) {
            out_flat = out_flat * dims.at(ch) + assign.at(ch);
        }
        out[out_flat] += term;
    }
    return out;
}

void criterion_contraction(Checker& c) {
    testutil::Rng rng(20240008);
    const std::string pool = "abcdef";
    for (int it = 0; it < 200; ++it) {
        const std::size_t n_ops = rng.integer(1, 3);
        std::vector<std::string> operands;
        std::string used;
        for (std::size_t op = 0; op < n_ops; ++op) {
            const std::size_t rank = rng.integer(1, 3);
            std::string labels;
            for (std::size_t k = 0; k < rank; ++k) {
                labels.push_back(pool[rng.integer(0, pool.size() - 1)]);
            }
            operands.push_back(labels);
            for (char ch : labels) {
                if (used.find(ch) == std::string::npos) {
                    used.push_back(ch);
                }
            }
        }
        // Random subset of the used labels, in random order, as the output.
        std::string output;
        for (char ch : used) {
            if (rng.uniform() < 0.5) {
                output.push_back(ch);
            }
        }
        for (std::size_t i = output.size(); i > 1; --i) {
            std::swap(output[i - 1], output[rng.integer(0, i - 1)]);
        }

        std::string text;
        for (std::size_t op = 0; op < n_ops; ++op) {
            if (op > 0) {
                text += ',';
            }
            text += operands[op];
        }
        text += "->";
        text += output;

        const svdkit::ContractionSpec spec = svdkit::parse_contraction(text);
        std::map<char, std::size_t> dims;
        for (char ch : used) {
            dims[ch] = rng.integer(1, 4);
        }
        std::vector<DenseTensor> tensors;
        for (const std::string& labels : operands) {
            std::vector<std::size_t> shape;
            for (char ch : labels) {
                shape.push_back(dims[ch]);
            }
            tensors.push_back(testutil::random_tensor(shape, rng.integer(0, 1u << 30)));
        }
        const DenseTensor got = svdkit::contract(spec, tensors);
        const DenseTensor want = oracle_contract(spec, tensors);
        for (std::size_t k = 0; k < got.size(); ++k) {
            if (std::abs(got[k] - want[k]) > 1e-12) {
                c.require(false, "spec '" + text + "' deviates at entry " +
                                     std::to_string(k));
                return;
            }
        }
    }

    for (int it = 0; it < 50; ++it) {
        const std::size_t m = rng.integer(1, 5);
        const std::size_t k = rng.integer(1, 5);
        const std::size_t n = rng.integer(1, 5);
        const DenseTensor a = testutil::random_tensor({m, k}, rng.integer(0, 1u << 30));
        const DenseTensor b = testutil::random_tensor({k, n}, rng.integer(0, 1u << 30));
        const std::vector<DenseTensor> ts{a, b};
        const DenseTensor via_spec = svdkit::contract("ij,jk->ik", ts);
        const DenseTensor via_dot = svdkit::tensordot(a, b, 1);
        for (std::size_t idx = 0; idx < via_spec.size(); ++idx) {
            if (std::abs(via_spec[idx] - via_dot[idx]) > 1e-12) {
                c.require(false, "contract and tensordot disagree");
                return;
            }
        }
    }

    const std::vector<std::string> malformed = {
        "",     "ij",      "ij,jk->im", "->i",      "ij,->i",
        "iJ->i", "i j->ij", "ij->ii",    "ij->i-",   "ij,jk",
    };
    for (const std::string& text : malformed) {
        bool rejected = false;
        try {
            svdkit::parse_contraction(text);
        } catch (const svdkit::ParseError&) {
            rejected = true;
        }
        if (!rejected) {
            c.require(false, "parser accepted '" + text + "'");
        }
    }
}

// ---------------------------------------------------------------------------
// Criteria 9-10: truncation and MPS.

void criterion_eckart_young(Checker& c) {
    testutil::Rng rng(20240009);
    for (int it = 0; it < 50; ++it) {
        const ComplexMatrix a = testutil::random_matrix(8, 8, rng.integer(0, 1u << 30));
        const SvdResult full = svdkit::svd(a);
        for (std::size_t k = 1; k <= 8; ++k) {
            const auto [cut, report] = svdkit::truncate_factors(full, k, std::nullopt);
            const ComplexMatrix approx = testutil::reconstruct(cut);
            double err2 = 0.0;
            for (std::size_t idx = 0; idx < a.size(); ++idx) {
                err2 += std::norm(a.data()[idx] - approx.data()[idx]);
            }
            double tail = 0.0;
            for (std::size_t i = k; i < 8; ++i) {
                tail += full.singular_values[i] * full.singular_values[i];
            }
            const double gap = std::abs(err2 - tail);
            const bool ok = tail > 0.0 ? gap <= 1e-9 * tail : err2 <= 1e-18;
            if (!ok) {
                c.require(false, "case " + std::to_string(it) + " k=" + std::to_string(k) +
                                     " gap " + std::to_string(gap));
                return;
            }
        }
    }
}

void criterion_mps(Checker& c) {
    testutil::Rng rng(20240010);

    for (int it = 0; it < 20; ++it) {
        testutil::Rng amp_rng(rng.integer(0, 1u << 30));
        DenseTensor t({2, 2, 2, 2});
        double norm2 = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            t[k] = amp_rng.complex_normal();
            norm2 += std::norm(t[k]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t k = 0; k < t.size(); ++k) {
            t[k] *= inv;
        }

        const auto [mps, reports] = svdkit::mps_from_state(t, std::nullopt, std::nullopt);
        const DenseTensor back = svdkit::mps_to_state(mps);
        double err2 = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) {
            err2 += std::norm(back[k] - t[k]);
        }
        if (std::sqrt(err2) > 1e-10) {
            c.require(false, "round-trip error " + std::to_string(std::sqrt(err2)));
            return;
        }
        for (std::size_t cut = 1; cut < 4; ++cut) {
            const ComplexMatrix m = svdkit::matricize(t, cut);
            const svdkit::StateVector s(m.rows(), m.cols(), t.data());
            if (mps.bond_dims[cut - 1] != svdkit::schmidt_rank(s)) {
                c.require(false, "bond " + std::to_string(cut) + " is " +
                                     std::to_string(mps.bond_dims[cut - 1]) +
                                     ", Schmidt rank " +
                                     std::to_string(svdkit::schmidt_rank(s)));
                return;
            }
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<ComplexScalar> ghz(8, ComplexScalar(0));
    ghz[0] = inv_sqrt2;
    ghz[7] = inv_sqrt2;
    const auto [ghz_mps, ghz_reports] =
        svdkit::mps_from_state(DenseTensor({2, 2, 2}, ghz), std::nullopt, std::nullopt);
    c.require(ghz_mps.bond_dims == std::vector<std::size_t>({2, 2}),
              "GHZ bond dims not (2,2)");

    std::vector<ComplexScalar> product(8, ComplexScalar(0));
    product[0] = 1.0;
    const auto [prod_mps, prod_reports] =
        svdkit::mps_from_state(DenseTensor({2, 2, 2}, product), std::nullopt, std::nullopt);
    c.require(prod_mps.bond_dims == std::vector<std::size_t>({1, 1}),
              "product-state bond dims not (1,1)");
}

// ---------------------------------------------------------------------------
// Criterion 11: CLI and file format.

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string out_path = (g_tmp / "stdout.txt").string();
    const std::string err_path = (g_tmp / "stderr.txt").string();
    const std::string command = g_cli + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(command.c_str());
    CliResult result;
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    std::ifstream in(out_path);
    std::ostringstream text;
    text << in.rdbuf();
    result.output = text.str();
    return result;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void criterion_cli(Checker& c) {
    const auto start = std::chrono::steady_clock::now();

    // save -> load is the identity, library route and CLI route.
    const DenseTensor t = testutil::random_tensor({2, 3, 2}, 77);
    const std::string round_trip_path = (g_tmp / "round_trip.json").string();
    svdkit::io::save_tensor(t, round_trip_path);
    const DenseTensor back = svdkit::io::load_tensor(round_trip_path);
    bool identical = back.shape() == t.shape();
    for (std::size_t k = 0; identical && k < t.size(); ++k) {
        identical = back[k] == t[k];
    }
    c.require(identical, "library save->load not bit-identical");

    const std::string cli_state_path = (g_tmp / "cli_state.json").string();
    const CliResult rnd = run_cli("random-state --dims 2,2,2 --seed 7 --out " + cli_state_path);
    c.require(rnd.exit_code == 0, "random-state exited " + std::to_string(rnd.exit_code));
    const DenseTensor direct = svdkit::random_state({2, 2, 2}, 7);
    const DenseTensor loaded = svdkit::io::load_tensor(cli_state_path);
    bool stream_identical = loaded.shape() == direct.shape();
    for (std::size_t k = 0; stream_identical && k < direct.size(); ++k) {
        stream_identical = loaded[k] == direct[k];
    }
    c.require(stream_identical, "CLI random-state file differs from the library stream");

    // Golden standard-output files.
    const std::string bell = (g_fixtures / "bell_state.json").string();
    const CliResult schmidt_out = run_cli("schmidt " + bell + " --dims 2,2");
    c.require(schmidt_out.exit_code == 0, "schmidt exited " +
                                              std::to_string(schmidt_out.exit_code));
    c.require(schmidt_out.output == read_file(g_golden / "schmidt_bell.txt"),
              "schmidt output differs from golden file");

    const CliResult tracedist_out =
        run_cli("tracedist " + (g_fixtures / "rho_diag10.json").string() + " " +
                (g_fixtures / "sigma_plus.json").string() + " --diagnostic");
    c.require(tracedist_out.exit_code == 0,
              "tracedist exited " + std::to_string(tracedist_out.exit_code));
    c.require(tracedist_out.output == read_file(g_golden / "tracedist_diagnostic.txt"),
              "tracedist output differs from golden file");

    const CliResult frob_out =
        run_cli("frob " + (g_fixtures / "random_matrix_seed42.json").string());
    c.require(frob_out.exit_code == 0, "frob exited " + std::to_string(frob_out.exit_code));
    c.require(frob_out.output == read_file(g_golden / "frob_seed42.txt"),
              "frob output differs from golden file");

    // Documented exit codes, one fixture per class.
    const CliResult usage = run_cli("schmidt");
    c.require(usage.exit_code == 2, "usage error exited " + std::to_string(usage.exit_code));

    const CliResult format =
        run_cli("frob " + (g_fixtures / "bad_syntax.json").string());
    c.require(format.exit_code == 3,
              "format error exited " + std::to_string(format.exit_code));

    const CliResult numerical =
        run_cli("svd " + (g_fixtures / "random_matrix_seed42.json").string() +
                " --max-sweeps 1 --out-prefix " + (g_tmp / "nc").string());
    c.require(numerical.exit_code == 4,
              "non-convergence exited " + std::to_string(numerical.exit_code));

    const CliResult invariant =
        run_cli("schmidt " + (g_fixtures / "unnormalized_state.json").string() +
                " --dims 2,2");
    c.require(invariant.exit_code == 5,
              "invariant violation exited " + std::to_string(invariant.exit_code));

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(seconds < 60.0, "CLI suite took " + std::to_string(seconds) + " s");
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::fprintf(stderr, "usage: acceptance <cli-path> <fixtures-dir> <golden-dir>\n");
        return 64;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];
    g_golden = argv[3];
    g_tmp = fs::temp_directory_path() / "svdkit_acceptance";
    fs::create_directories(g_tmp);

    struct Entry {
        const char* name;
        std::function<void(Checker&)> run;
    };
    const std::vector<Entry> criteria = {
        {"01 svd-correctness", criterion_svd_correctness},
        {"02 frobenius-identity", criterion_frobenius_identity},
        {"03 psd-trace-identity", criterion_psd_trace_identity},
        {"04 trace-distance-metric", criterion_trace_distance_metric},
        {"05 spectral-diff-diagnostic", criterion_spectral_diff_diagnostic},
        {"06 fidelity", criterion_fidelity},
        {"07 schmidt-suite", criterion_schmidt},
        {"08 contraction-oracle", criterion_contraction},
        {"09 eckart-young", criterion_eckart_young},
        {"10 mps-round-trip", criterion_mps},
        {"11 cli-and-format", criterion_cli},
    };

    int failed = 0;
    for (const Entry& entry : criteria) {
        Checker checker;
        try {
            entry.run(checker);
        } catch (const std::exception& e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        if (checker.failures.empty()) {
            std::printf("PASS %s\n", entry.name);
        } else {
            ++failed;
            std::printf("FAIL %s\n", entry.name);
            for (const std::string& message : checker.failures) {
                std::printf("     %s\n", message.c_str());
            }
        }
    }
    fs::remove_all(g_tmp);
    return failed;
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mars/model.hpp"
#include "mars/runner.hpp"

namespace mars {

// ---------------------------------------------------------------------------
// G-set / rudy graph format: a header line "n m" followed by m edge lines
// "u v w" with 1-based endpoints and integer weights (missing weight = 1).
// Lines starting with '#' or '%' are comments.
// ---------------------------------------------------------------------------

struct GsetEdge {
    int u = 0;  // 1-based, as in the file
    int v = 0;
    long long w = 1;
};

struct GsetGraph {
    int n_vertices = 0;
    std::vector<GsetEdge> edges;
};

bool operator==(const GsetEdge& a, const GsetEdge& b);
bool operator==(const GsetGraph& a, const GsetGraph& b);

GsetGraph parse_gset(std::istream& in);
GsetGraph load_gset(const std::string& path);
void write_gset(const GsetGraph& g, std::ostream& out);

// J_uv = J_vu = w for every edge, zero elsewhere, zero field. The index
// shift to 0-based happens here and nowhere else.
IsingProblem gset_to_problem(const GsetGraph& g);

// ---------------------------------------------------------------------------
// SK instances: J_ij = J_ji ~ N(0,1) i.i.d. for i < j, zero diagonal, zero
// field. Sampler: mt19937_64 seeded via splitmix64, basic Box-Muller
// (see rng.hpp); frozen for reproducibility of seeded instances.
// ---------------------------------------------------------------------------

IsingProblem generate_sk(int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Dense matrix text format: first line n, then n rows of n reals. Carries
// the couplings only (refused for problems with a nonzero field).
// ---------------------------------------------------------------------------

void write_matrix(const IsingProblem& p, std::ostream& out);
void write_matrix_file(const IsingProblem& p, const std::string& path);
IsingProblem read_matrix(std::istream& in);
IsingProblem read_matrix_file(const std::string& path);

// Content auto-detection: a first data line of two integers is a G-set
// header, a single integer is a matrix header.
enum class InstanceFormat { GsetGraph, DenseMatrix };
InstanceFormat detect_format(std::istream& in);

struct LoadedProblem {
    IsingProblem problem;
    InstanceFormat format;
};

LoadedProblem load_problem(const std::string& path,
                           std::optional<InstanceFormat> forced = std::nullopt);

// FNV-1a over the canonical content (size, ordered nonzero couplings of the
// upper triangle, nonzero field entries); representation independent.
std::uint64_t problem_hash(const IsingProblem& p);

// ---------------------------------------------------------------------------
// Result documents: versioned JSON holding the problem identity, the full
// solver parameter record, the batch statistics and (optionally) per-run
// records. Timestamps and timing fields can be suppressed to make the
// output a pure function of (problem, params, seed).
// ---------------------------------------------------------------------------

inline constexpr int kResultDocVersion = 1;

// How much per-run material a document carries. Summary documents cannot
// feed the histogram command.
enum class DocDetail { Summary, Energies, Full };

struct ResultDocument {
    int version = kResultDocVersion;
    std::string problem_id;       // path or generator tag
    std::uint64_t problem_hash = 0;
    int problem_size = 0;
    std::string solver;
    SolverParams params;
    BatchStats stats;
    DocDetail detail = DocDetail::Energies;
    bool include_volatile = true; // timestamp + timing fields written
    std::string timestamp;        // ISO-8601, empty when volatile suppressed
};

ResultDocument make_result_document(const std::string& problem_id, const IsingProblem& problem,
                                    const SolverParams& params, const BatchStats& stats,
                                    DocDetail detail = DocDetail::Full,
                                    bool include_volatile = true);

// JSON views of solver parameter records (shared by result documents and the
// bench config file).
nlohmann::json solver_params_to_json(const SolverParams& params);
SolverParams solver_params_from_json(const std::string& solver, const nlohmann::json& j);

std::string result_document_to_string(const ResultDocument& doc);
ResultDocument result_document_from_string(const std::string& text);

void save_result(const ResultDocument& doc, const std::string& path);
ResultDocument load_result(const std::string& path);

// Throws IntegrityError when the document was produced for a different
// problem than `p`.
void verify_result_document(const ResultDocument& doc, const IsingProblem& p);

bool operator==(const ResultDocument& a, const ResultDocument& b);

}  // namespace mars

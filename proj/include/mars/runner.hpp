#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "mars/model.hpp"
#include "mars/solvers.hpp"

namespace mars {

// Which solver a batch drives, together with its parameter record.
using SolverParams = std::variant<MarsParams, SaParams, MfaParams, NmfaParams, SimCimParams>;

const char* solver_name(const SolverParams& params);

struct BatchSpec {
    SolverParams params;
    std::int64_t runs = 1;       // ignored by MARS GridSweep (grid count wins)
    std::uint64_t base_seed = 0;
    int workers = 0;             // 0 = auto-detect hardware concurrency
};

// Number of runs the spec will actually execute (grid count for GridSweep).
std::int64_t effective_runs(const BatchSpec& spec);

struct BatchStats {
    double best_energy = 0.0;
    double mean_energy = 0.0;
    double best_cut = 0.0;
    double mean_cut = 0.0;
    std::int64_t hit_count = 0;           // runs matching best_energy within tolerance
    double success_probability = 0.0;     // hit_count / completed runs
    double total_seconds = 0.0;
    double mean_seconds_per_run = 0.0;    // solver time only, loading excluded
    RunResult best_result;
    std::vector<double> energies;         // completed runs, in run-index order
    std::int64_t completed_runs = 0;
    std::int64_t skipped_runs = 0;
    std::int64_t failed_runs = 0;
    std::vector<RunResult> runs;          // every slot, including skipped/failed
};

// Called after each finished run with (run index, best energy so far).
// Invocations are serialized; do not block for long.
using ProgressFn = std::function<void(std::int64_t, double)>;

// Executes the batch over a fixed-size worker pool pulling run indices from
// a shared queue. Each run gets a deterministic sub-seed derived from
// (base_seed, run index), so the statistics are identical for any worker
// count; only the timing fields vary. Diverged runs are recorded and
// excluded from the statistics; a batch where every run failed throws.
BatchStats run_batch(const IsingProblem& problem, const BatchSpec& spec,
                     const ProgressFn& progress = {});

// Generic core of run_batch: `run` maps a run index to its result. Exposed
// so tests can drive the pool with synthetic runs.
BatchStats run_batch_with(const IsingProblem& problem,
                          const std::function<RunResult(std::int64_t)>& run,
                          std::int64_t runs, int workers, const ProgressFn& progress = {});

// Fraction of completed runs whose energy lies within `tolerance` of
// `reference_energy` (an oracle or best-known value).
double success_probability(const BatchStats& stats, double reference_energy, double tolerance);

struct Histogram {
    std::vector<double> bin_edges;        // ascending, counts.size() + 1 entries
    std::vector<std::int64_t> counts;
};

// Equal-width bins spanning [min, max]; right-open intervals except the
// last. A degenerate sample (min == max) yields one unit-width bin centered
// on the value.
Histogram histogram(const std::vector<double>& samples, std::int64_t bins);

struct ComparisonRow {
    std::string solver;
    bool failed = false;
    std::string error;
    BatchStats stats;
};

struct Comparison {
    std::vector<ComparisonRow> rows;
    int winner = -1;  // index into rows; -1 when every row failed
};

// One batch per spec; the winner has the lowest best energy, ties broken by
// lower mean energy, then by listing order.
Comparison compare_solvers(const IsingProblem& problem, const std::vector<BatchSpec>& specs,
                           const ProgressFn& progress = {});

int pick_winner(const std::vector<ComparisonRow>& rows, double tolerance);

}  // namespace mars

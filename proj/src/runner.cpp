#include "mars/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "mars/errors.hpp"
#include "mars/rng.hpp"

namespace mars {

namespace {

using Clock = std::chrono::steady_clock;

int resolve_workers(int requested, std::int64_t runs) {
    int w = requested;
    if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
    if (w <= 0) w = 1;
    return static_cast<int>(std::min<std::int64_t>(w, std::max<std::int64_t>(runs, 1)));
}

void validate_params(const SolverParams& params) {
    std::visit([](const auto& p) { validate(p); }, params);
}

RunResult execute_run(const IsingProblem& problem, const SolverParams& params,
                      std::uint64_t base_seed, std::int64_t index) {
    if (const auto* mp = std::get_if<MarsParams>(&params)) {
        const MarsRunPlan plan = mars_run_plan(*mp, base_seed, index);
        if (plan.skipped) {
            RunResult r;
            r.status = RunStatus::Skipped;
            r.start_temp = plan.start_temp;
            return r;
        }
        try {
            return mars_descent(problem, plan.start_temp, *mp, plan.seed);
        } catch (const DivergedError& e) {
            RunResult r;
            r.status = RunStatus::Diverged;
            r.start_temp = plan.start_temp;
            r.descent_iters = e.sweeps;
            r.error = e.what();
            r.spins = round_spins(e.partial_state);
            r.energy = energy(problem, r.spins);
            r.cut = cut_value(problem, r.spins);
            return r;
        }
    }
    const std::uint64_t seed = sub_seed(base_seed, static_cast<std::uint64_t>(index));
    if (const auto* sp = std::get_if<SaParams>(&params)) return sa_run(problem, *sp, seed);
    if (const auto* fp = std::get_if<MfaParams>(&params)) return mfa_run(problem, *fp, seed);
    if (const auto* np = std::get_if<NmfaParams>(&params)) return nmfa_run(problem, *np, seed);
    return simcim_run(problem, std::get<SimCimParams>(params), seed);
}

}  // namespace

const char* solver_name(const SolverParams& params) {
    switch (params.index()) {
        case 0: return "mars";
        case 1: return "sa";
        case 2: return "mfa";
        case 3: return "nmfa";
        default: return "simcim";
    }
}

std::int64_t effective_runs(const BatchSpec& spec) {
    if (const auto* mp = std::get_if<MarsParams>(&spec.params))
        return mars_run_count(*mp, spec.runs);
    if (spec.runs < 1) throw InputError("batch needs runs >= 1");
    return spec.runs;
}

BatchStats run_batch_with(const IsingProblem& problem,
                          const std::function<RunResult(std::int64_t)>& run,
                          std::int64_t runs, int workers, const ProgressFn& progress) {
    if (runs < 1) throw InputError("batch needs runs >= 1");
    const auto t0 = Clock::now();

    BatchStats stats;
    stats.runs.resize(static_cast<std::size_t>(runs));

    const int pool_size = resolve_workers(workers, runs);
    std::atomic<std::int64_t> next{0};
    std::mutex progress_mutex;
    double best_so_far = std::numeric_limits<double>::infinity();

    auto worker = [&] {
        for (;;) {
            const std::int64_t idx = next.fetch_add(1, std::memory_order_relaxed);
            if (idx >= runs) return;
            RunResult r;
            try {
                r = run(idx);
            } catch (const std::exception& e) {
                r.status = RunStatus::Diverged;
                r.error = e.what();
            }
            stats.runs[static_cast<std::size_t>(idx)] = std::move(r);
            if (progress) {
                const RunResult& stored = stats.runs[static_cast<std::size_t>(idx)];
                std::lock_guard lock(progress_mutex);
                if (stored.status == RunStatus::Ok && stored.energy < best_so_far)
                    best_so_far = stored.energy;
                progress(idx, best_so_far);
            }
        }
    };

    if (pool_size == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(pool_size));
        for (int w = 0; w < pool_size; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Aggregate in run-index order so the statistics are independent of the
    // scheduling order above.
    double cut_sum = 0.0;
    double energy_sum = 0.0;
    double run_seconds = 0.0;
    std::int64_t best_index = -1;
    for (std::int64_t i = 0; i < runs; ++i) {
        const RunResult& r = stats.runs[static_cast<std::size_t>(i)];
        if (r.status == RunStatus::Skipped) {
            ++stats.skipped_runs;
            continue;
        }
        if (r.status == RunStatus::Diverged) {
            ++stats.failed_runs;
            continue;
        }
        ++stats.completed_runs;
        stats.energies.push_back(r.energy);
        energy_sum += r.energy;
        cut_sum += r.cut;
        run_seconds += r.elapsed_seconds;
        if (best_index < 0 || r.energy < stats.best_energy) {
            stats.best_energy = r.energy;
            best_index = i;
        }
        if (stats.best_cut < r.cut || stats.completed_runs == 1) stats.best_cut = r.cut;
    }
    if (stats.completed_runs == 0)
        throw Error("batch failed: no run completed (" + std::to_string(stats.failed_runs) +
                    " diverged, " + std::to_string(stats.skipped_runs) + " skipped)");

    stats.best_result = stats.runs[static_cast<std::size_t>(best_index)];
    stats.mean_energy = energy_sum / static_cast<double>(stats.completed_runs);
    stats.mean_cut = cut_sum / static_cast<double>(stats.completed_runs);
    const double tol = problem.energy_equality_tolerance();
    for (double e : stats.energies)
        if (std::abs(e - stats.best_energy) <= tol) ++stats.hit_count;
    stats.success_probability =
        static_cast<double>(stats.hit_count) / static_cast<double>(stats.completed_runs);
    stats.mean_seconds_per_run = run_seconds / static_cast<double>(stats.completed_runs);
    stats.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return stats;
}

BatchStats run_batch(const IsingProblem& problem, const BatchSpec& spec,
                     const ProgressFn& progress) {
    validate_params(spec.params);  // parameter errors belong to the caller, not to run records
    const std::int64_t runs = effective_runs(spec);
    auto runner = [&](std::int64_t index) {
        return execute_run(problem, spec.params, spec.base_seed, index);
    };
    return run_batch_with(problem, runner, runs, spec.workers, progress);
}

double success_probability(const BatchStats& stats, double reference_energy, double tolerance) {
    if (tolerance < 0.0) throw InputError("tolerance must be >= 0");
    if (stats.energies.empty()) return 0.0;
    std::int64_t hits = 0;
    for (double e : stats.energies)
        if (std::abs(e - reference_energy) <= tolerance) ++hits;
    return static_cast<double>(hits) / static_cast<double>(stats.energies.size());
}

Histogram histogram(const std::vector<double>& samples, std::int64_t bins) {
    if (samples.empty()) throw InputError("histogram needs at least one sample");
    if (bins < 1) throw InputError("histogram needs bins >= 1");

    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *lo_it, hi = *hi_it;
    Histogram h;
    if (lo == hi) {
        h.bin_edges = {lo - 0.5, lo + 0.5};
        h.counts = {static_cast<std::int64_t>(samples.size())};
        return h;
    }
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (std::int64_t k = 0; k <= bins; ++k)
        h.bin_edges[static_cast<std::size_t>(k)] =
            lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
    h.bin_edges.front() = lo;
    h.bin_edges.back() = hi;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double x : samples) {
        auto k = static_cast<std::int64_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        k = std::clamp<std::int64_t>(k, 0, bins - 1);
        // keep intervals right-open except the last
        while (k > 0 && x < h.bin_edges[static_cast<std::size_t>(k)]) --k;
        while (k < bins - 1 && x >= h.bin_edges[static_cast<std::size_t>(k) + 1]) ++k;
        ++h.counts[static_cast<std::size_t>(k)];
    }
    return h;
}

int pick_winner(const std::vector<ComparisonRow>& rows, double tolerance) {
    int winner = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[static_cast<std::size_t>(i)].failed) continue;
        if (winner < 0) {
            winner = i;
            continue;
        }
        const BatchStats& a = rows[static_cast<std::size_t>(i)].stats;
        const BatchStats& b = rows[static_cast<std::size_t>(winner)].stats;
        if (a.best_energy < b.best_energy - tolerance) {
            winner = i;
        } else if (std::abs(a.best_energy - b.best_energy) <= tolerance &&
                   a.mean_energy < b.mean_energy - tolerance) {
            winner = i;
        }
    }
    return winner;
}

Comparison compare_solvers(const IsingProblem& problem, const std::vector<BatchSpec>& specs,
                           const ProgressFn& progress) {
    if (specs.empty()) throw InputError("compare_solvers needs at least one spec");
    Comparison cmp;
    cmp.rows.reserve(specs.size());
    for (const BatchSpec& spec : specs) {
        ComparisonRow row;
        row.solver = solver_name(spec.params);
        try {
            row.stats = run_batch(problem, spec, progress);
        } catch (const std::exception& e) {
            row.failed = true;
            row.error = e.what();
        }
        cmp.rows.push_back(std::move(row));
    }
    cmp.winner = pick_winner(cmp.rows, problem.energy_equality_tolerance());
    return cmp;
}

}  // namespace mars

// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any gating criterion fails.
//
// Criterion 2 and the G_1 half of criterion 3 need the canonical G-set
// instance G_1 (800 vertices, 19176 edges). The file is looked up as
// $MARS_GSET_DIR/G1 and then <source>/tests/data/G1; see README for the
// download location. Without it those checks fail with an explanation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mars/io.hpp"
#include "mars/model.hpp"
#include "mars/rng.hpp"
#include "mars/runner.hpp"
#include "mars/solvers.hpp"

using namespace mars;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[criterion %d] %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::optional<std::string> find_g1() {
    std::vector<fs::path> candidates;
    if (const char* dir = std::getenv("MARS_GSET_DIR")) candidates.emplace_back(fs::path(dir) / "G1");
    candidates.emplace_back(fs::path(MARS_SOURCE_DIR) / "tests" / "data" / "G1");
    for (const auto& c : candidates)
        if (fs::exists(c)) return c.string();
    return std::nullopt;
}

constexpr const char* kG1Hint =
    "canonical G_1 file not found; place it at tests/data/G1 or set MARS_GSET_DIR "
    "(source: the Stanford G-set distribution, file 'G1', 800 vertices / 19176 edges)";

// 1. Oracle equivalence: MARS grid sweep recovers the exact ground state on
//    >= 95 of 100 seeded SK(14) instances.
void criterion1() {
    const auto t0 = Clock::now();
    MarsParams mp;
    mp.t_min = 0.0;
    mp.t_max = 10.0;
    mp.t_step = 0.1;
    mp.c_step = 1.0;
    mp.d_min = 1e-4;
    int hits = 0;
    for (std::uint64_t i = 1; i <= 100; ++i) {
        const auto p = generate_sk(14, 900000 + i);
        const auto gs = brute_force_ground_state(p, 26, ExecPolicy::OpenMP);
        BatchSpec spec;
        spec.params = mp;
        spec.base_seed = i;
        spec.workers = 0;
        const auto stats = run_batch(p, spec);
        if (std::abs(stats.best_energy - gs.energy) <= 1e-9) ++hits;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "oracle ground state on %d/100 SK(14) instances (need >= 95), %.1fs",
                  hits, seconds_since(t0));
    report(1, hits >= 95, buf);
}

// 2. G-set regression: MARS on G_1, 1000 restarts over T in [0,30], best cut
//    >= 11500 (within 1.1%% of the best known 11623).
void criterion2(const std::optional<std::string>& g1_path) {
    if (!g1_path) {
        report(2, false, kG1Hint);
        return;
    }
    const auto t0 = Clock::now();
    const auto graph = load_gset(*g1_path);
    if (graph.n_vertices != 800 || graph.edges.size() != 19176) {
        report(2, false,
               "file at " + *g1_path + " is not the canonical G_1 (has " +
                   std::to_string(graph.n_vertices) + " vertices / " +
                   std::to_string(graph.edges.size()) +
                   " edges, expected 800 / 19176); the 11500 bound only makes sense there");
        return;
    }
    const auto problem = gset_to_problem(graph);
    MarsParams mp;
    mp.t_min = 0.0;
    mp.t_max = 30.0;
    mp.start_mode = StartMode::UniformRandom;
    BatchSpec spec;
    spec.params = mp;
    spec.runs = 1000;
    spec.base_seed = 20260808;
    spec.workers = 0;
    const auto stats = run_batch(problem, spec);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "G_1 best cut %.0f over %lld restarts (need >= 11500; best known 11623), %.1fs",
                  stats.best_cut, static_cast<long long>(stats.completed_runs), seconds_since(t0));
    report(2, stats.best_cut >= 11500.0, buf);

    if (std::getenv("MARS_ACCEPT_STRETCH")) {
        spec.runs = 10000;
        const auto big = run_batch(problem, spec);
        std::printf("[criterion 2 stretch, non-gating] best cut %.0f over 10^4 restarts "
                    "(target 11600)\n",
                    big.best_cut);
    }
}

// 3. Cut-energy identity on 10^4 random configurations of G_1 and SK(500).
void criterion3(const std::optional<std::string>& g1_path) {
    const auto t0 = Clock::now();
    Rng rng(123);
    auto max_deviation = [&](const IsingProblem& p) {
        std::vector<SpinConfig> configs;
        configs.reserve(10000);
        for (int k = 0; k < 10000; ++k) {
            SpinConfig s(static_cast<std::size_t>(p.size()));
            for (auto& v : s) v = rng.coin_spin();
            configs.push_back(std::move(s));
        }
        double worst = 0.0;
        const double total = p.coupling_sum();
        for (const auto& s : configs) {
            const double identity = 4.0 * cut_value(p, s, ExecPolicy::OpenMP) +
                                    coupling_term(p, s, ExecPolicy::OpenMP);
            worst = std::max(worst, std::abs(identity - total));
        }
        return worst;
    };

    const double sk_dev = max_deviation(generate_sk(500, 31337));
    const bool sk_ok = sk_dev <= 1e-6;

    if (!g1_path) {
        char buf[240];
        std::snprintf(buf, sizeof buf, "SK(500) max |4*cut + coupling - total| = %.3g (<= 1e-6: %s); %s",
                      sk_dev, sk_ok ? "yes" : "NO", kG1Hint);
        report(3, false, buf);
        return;
    }
    const auto g1 = load_gset(*g1_path);
    if (g1.n_vertices != 800 || g1.edges.size() != 19176) {
        report(3, false, "file at " + *g1_path + " is not the canonical G_1 (800/19176)");
        return;
    }
    const double g1_dev = max_deviation(gset_to_problem(g1));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "max |4*cut + coupling - total|: SK(500) %.3g, G_1 %.3g (need <= 1e-6), %.1fs",
                  sk_dev, g1_dev, seconds_since(t0));
    report(3, sk_ok && g1_dev <= 1e-6, buf);
}

// 4. Baseline sanity vs the exact oracle on 100 seeded SK(12) instances.
//    SA >= 90, MFA >= 70; NMFA and SimCIM thresholds calibrated once against
//    the oracle (both >= 70 with the shipped defaults) and pinned here.
void criterion4() {
    const auto t0 = Clock::now();
    SaParams sa;
    sa.t_init = 5.0;
    sa.t_final = 0.01;
    sa.schedule = CoolingSchedule::Geometric;
    sa.sweeps = 100000;
    const MfaParams mfa;
    const NmfaParams nmfa = nmfa_defaults(1000);
    const SimCimParams simcim = simcim_defaults(1000);

    int sa_hits = 0, mfa_hits = 0, nmfa_hits = 0, simcim_hits = 0;
    for (std::uint64_t i = 1; i <= 100; ++i) {
        const auto p = generate_sk(12, 31000 + i);
        const auto gs = brute_force_ground_state(p);
        const double tol = 1e-9;
        if (std::abs(sa_run(p, sa, i).energy - gs.energy) <= tol) ++sa_hits;
        if (std::abs(mfa_run(p, mfa, i).energy - gs.energy) <= tol) ++mfa_hits;
        if (std::abs(nmfa_run(p, nmfa, i).energy - gs.energy) <= tol) ++nmfa_hits;
        if (std::abs(simcim_run(p, simcim, i).energy - gs.energy) <= tol) ++simcim_hits;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "SA %d/100 (>=90), MFA %d/100 (>=70), NMFA %d/100 (>=70), SimCIM %d/100 (>=70), %.1fs",
                  sa_hits, mfa_hits, nmfa_hits, simcim_hits, seconds_since(t0));
    report(4, sa_hits >= 90 && mfa_hits >= 70 && nmfa_hits >= 70 && simcim_hits >= 70, buf);
}

// 5. Starting-temperature range: on a fresh SK(500), the mean MARS energy
//    over 10^3 runs with T in [10,20] beats T in [0,10].
void criterion5() {
    const auto t0 = Clock::now();
    const auto p = generate_sk(500, 20260807);
    auto mean_for = [&](double lo, double hi) {
        MarsParams mp;
        mp.t_min = lo;
        mp.t_max = hi;
        mp.start_mode = StartMode::UniformRandom;
        BatchSpec spec;
        spec.params = mp;
        spec.runs = 1000;
        spec.base_seed = 17;
        spec.workers = 0;
        return run_batch(p, spec).mean_energy;
    };
    const double mean_high = mean_for(10.0, 20.0);
    const double mean_low = mean_for(0.0, 10.0);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "SK(500) mean energy: T[10,20] %.2f vs T[0,10] %.2f (must be strictly lower), %.1fs",
                  mean_high, mean_low, seconds_since(t0));
    report(5, mean_high < mean_low, buf);
}

// 6. SA budget trend on a fixed SK(200): energies non-increasing across
//    {1e3, 1e4, 1e5} sweeps and strictly better at 1e5 than at 1e3.
//    (SA regularly saturates between 1e4 and 1e5 at this size, so consecutive
//    budgets may tie at the optimum; inversions are failures.)
void criterion6() {
    const auto t0 = Clock::now();
    const auto p = generate_sk(200, 1);
    auto best_for = [&](std::int64_t sweeps) {
        SaParams sp;
        sp.t_init = 5.0;
        sp.t_final = 0.01;
        sp.sweeps = sweeps;
        BatchSpec spec;
        spec.params = sp;
        spec.runs = 5;
        spec.base_seed = 7;
        spec.workers = 0;
        return run_batch(p, spec).best_energy;
    };
    const double b3 = best_for(1000);
    const double b4 = best_for(10000);
    const double b5 = best_for(100000);
    const bool pass = b3 >= b4 && b4 >= b5 && b3 > b5;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "SK(200) best energy by budget: 1e3 %.3f, 1e4 %.3f, 1e5 %.3f "
                  "(non-increasing, 1e5 strictly best), %.1fs",
                  b3, b4, b5, seconds_since(t0));
    report(6, pass, buf);
}

// 7. Determinism and parallel invariance: identical statistics for
//    workers in {1,2,8}; volatile-free result documents byte-identical.
void criterion7() {
    const auto t0 = Clock::now();
    const auto p = generate_sk(60, 99);
    MarsParams mp;
    mp.t_min = 0.0;
    mp.t_max = 16.0;
    mp.t_step = 0.25;
    auto stats_for = [&](int workers) {
        BatchSpec spec;
        spec.params = mp;
        spec.base_seed = 41;
        spec.workers = workers;
        return run_batch(p, spec);
    };
    const auto s1 = stats_for(1);
    const auto s2 = stats_for(2);
    const auto s8 = stats_for(8);
    const bool stats_ok = s1.energies == s2.energies && s1.energies == s8.energies &&
                          s1.best_energy == s2.best_energy && s1.best_energy == s8.best_energy &&
                          s1.mean_energy == s2.mean_energy && s1.mean_energy == s8.mean_energy &&
                          s1.hit_count == s2.hit_count && s1.hit_count == s8.hit_count &&
                          s1.best_result.spins == s2.best_result.spins &&
                          s1.best_result.spins == s8.best_result.spins;

    const std::string doc1 = result_document_to_string(
        make_result_document("sk60", p, mp, stats_for(2), DocDetail::Full, false));
    const std::string doc2 = result_document_to_string(
        make_result_document("sk60", p, mp, stats_for(8), DocDetail::Full, false));
    const bool docs_ok = doc1 == doc2;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "workers {1,2,8} stats identical: %s; volatile-free documents byte-identical: %s, %.1fs",
                  stats_ok ? "yes" : "NO", docs_ok ? "yes" : "NO", seconds_since(t0));
    report(7, stats_ok && docs_ok, buf);
}

// 8. Throughput: with >= 4 hardware threads, a 200-run MARS batch on SK(500)
//    with 4 workers takes <= 0.6x the 1-worker wall clock. On smaller hosts
//    the assertion is out of scope; the measured ratio is still printed.
void criterion8() {
    const auto p = generate_sk(500, 5150);
    MarsParams mp;
    mp.t_min = 5.0;
    mp.t_max = 15.0;
    mp.start_mode = StartMode::UniformRandom;
    BatchSpec spec;
    spec.params = mp;
    spec.runs = 200;
    spec.base_seed = 3;

    const unsigned hw = std::thread::hardware_concurrency();
    if (hw >= 4) {
        spec.workers = 1;
        const auto t1 = Clock::now();
        run_batch(p, spec);
        const double serial = seconds_since(t1);
        spec.workers = 4;
        const auto t4 = Clock::now();
        run_batch(p, spec);
        const double quad = seconds_since(t4);
        char buf[160];
        std::snprintf(buf, sizeof buf, "4 workers %.1fs vs 1 worker %.1fs, ratio %.2f (need <= 0.6)",
                      quad, serial, quad / serial);
        report(8, quad <= 0.6 * serial, buf);
        return;
    }

    // informational measurement with the widest pool this host offers
    spec.runs = 60;
    spec.workers = 1;
    const auto t1 = Clock::now();
    run_batch(p, spec);
    const double serial = seconds_since(t1);
    spec.workers = static_cast<int>(std::max(2u, hw));
    const auto t2 = Clock::now();
    run_batch(p, spec);
    const double multi = seconds_since(t2);
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "not asserted: host has %u hardware threads (< 4); criterion is scoped to >=4-core "
                  "hosts. informational %d-worker ratio %.2f (%.1fs vs %.1fs)",
                  hw, spec.workers, multi / serial, multi, serial);
    report(8, true, buf);
}

}  // namespace

int main() {
    const auto g1 = find_g1();
    std::printf("mars acceptance suite (hardware threads: %u; G_1: %s)\n",
                std::thread::hardware_concurrency(), g1 ? g1->c_str() : "not found");
    criterion1();
    criterion2(g1);
    criterion3(g1);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}

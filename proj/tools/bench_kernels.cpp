// Times the serial reference kernels against their OpenMP counterparts and
// the batch runner at several worker counts. Informational; correctness of
// the parallel paths is asserted in the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "mars/io.hpp"
#include "mars/model.hpp"
#include "mars/rng.hpp"
#include "mars/runner.hpp"
#include "mars/solvers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& fn, int reps = 1) {
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(Clock::now() - t0).count() / reps;
}

mars::SpinConfig random_config(int n, mars::Rng& rng) {
    mars::SpinConfig s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.coin_spin();
    return s;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel kernels fall back to serial\n");
#endif

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial(s)", "openmp(s)", "speedup");

    {
        const auto p = mars::generate_sk(2000, 7);
        mars::Rng rng(11);
        const auto cfg = random_config(p.size(), rng);
        volatile double sink = 0.0;
        const double ts = time_of([&] { sink = mars::energy(p, cfg, mars::ExecPolicy::Serial); }, 20);
        const double tp = time_of([&] { sink = mars::energy(p, cfg, mars::ExecPolicy::OpenMP); }, 20);
        (void)sink;
        std::printf("%-34s %10.6f %10.6f %7.2fx\n", "energy SK(2000)", ts, tp, ts / tp);
    }
    {
        const auto p = mars::generate_sk(500, 7);
        mars::Rng rng(12);
        std::vector<mars::SpinConfig> configs;
        for (int k = 0; k < 4096; ++k) configs.push_back(random_config(p.size(), rng));
        const double ts =
            time_of([&] { mars::batch_energies(p, configs, mars::ExecPolicy::Serial); }, 3);
        const double tp =
            time_of([&] { mars::batch_energies(p, configs, mars::ExecPolicy::OpenMP); }, 3);
        std::printf("%-34s %10.6f %10.6f %7.2fx\n", "batch energies 4096 x SK(500)", ts, tp,
                    ts / tp);
    }
    {
        const auto p = mars::generate_sk(20, 7);
        const double ts = time_of(
            [&] { mars::brute_force_ground_state(p, 26, mars::ExecPolicy::Serial); });
        const double tp = time_of(
            [&] { mars::brute_force_ground_state(p, 26, mars::ExecPolicy::OpenMP); });
        std::printf("%-34s %10.6f %10.6f %7.2fx\n", "brute force SK(20)", ts, tp, ts / tp);
    }
    {
        const auto p = mars::generate_sk(300, 7);
        mars::BatchSpec spec;
        mars::MarsParams mp;
        mp.t_min = 0.0;
        mp.t_max = 15.0;
        mp.start_mode = mars::StartMode::UniformRandom;
        spec.params = mp;
        spec.runs = 50;
        spec.base_seed = 3;
        spec.workers = 1;
        const double t1 = time_of([&] { mars::run_batch(p, spec); });
        spec.workers = 0;  // auto
        const double tn = time_of([&] { mars::run_batch(p, spec); });
        std::printf("%-34s %10.6f %10.6f %7.2fx\n", "mars batch 50 x SK(300), pool", t1, tn,
                    t1 / tn);
    }
    return 0;
}

#include "mars/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mars/errors.hpp"

namespace mars {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kTempFloor = 1e-12;

// Stream tag separating the starting-temperature draw from the descent's
// own random stream (UniformRandom mode).
constexpr std::uint64_t kStartTempTag = 0x74656d7073746172ull;

void finish_result(const IsingProblem& p, const ContinuousState& s, RunResult& r) {
    r.spins = round_spins(s);
    r.energy = energy(p, r.spins);
    r.cut = cut_value(p, r.spins);
}

}  // namespace

// --- parameter validation ---

void validate(const MarsParams& p) {
    if (!(p.t_min >= 0.0)) throw InputError("mars: t_min must be >= 0");
    if (!(p.t_max > p.t_min)) throw InputError("mars: t_max must exceed t_min");
    if (!(p.t_step > 0.0)) throw InputError("mars: t_step must be positive");
    if (!(p.c_step > 0.0)) throw InputError("mars: c_step must be positive");
    if (!(p.d_min > 0.0)) throw InputError("mars: d_min must be positive");
}

std::int64_t mars_grid_count(const MarsParams& p) {
    const double slots = std::floor((p.t_max - p.t_min) / p.t_step);
    if (!(slots >= 0.0) || slots > 1e9)
        throw InputError("mars: grid of " + std::to_string(slots) + " temperatures is not usable");
    return static_cast<std::int64_t>(slots) + 1;
}

double mars_grid_temp(const MarsParams& p, std::int64_t k) {
    return p.t_min + static_cast<double>(k) * p.t_step;
}

void validate(const SaParams& p) {
    // t_init == t_final is tolerated as the degenerate fixed-temperature chain.
    if (!(p.t_init >= p.t_final) || !(p.t_final >= 0.0))
        throw InputError("sa: need t_init >= t_final >= 0");
    if (p.sweeps < 1) throw InputError("sa: sweeps must be >= 1");
    if (p.schedule == CoolingSchedule::Geometric && p.geometric_ratio != 0.0 &&
        !(p.geometric_ratio > 0.0 && p.geometric_ratio < 1.0))
        throw InputError("sa: geometric ratio must lie in (0,1)");
    if (p.schedule == CoolingSchedule::Geometric && p.geometric_ratio == 0.0 &&
        p.t_final <= 0.0 && p.t_init != p.t_final)
        throw InputError("sa: auto geometric ratio needs t_final > 0 (use the linear schedule)");
}

double sa_temperature(const SaParams& p, std::int64_t sweep) {
    if (p.t_init == p.t_final) return p.t_init;
    if (p.schedule == CoolingSchedule::Linear) {
        if (p.sweeps == 1) return p.t_init;
        const double f = static_cast<double>(sweep) / static_cast<double>(p.sweeps - 1);
        return p.t_init + (p.t_final - p.t_init) * f;
    }
    double ratio = p.geometric_ratio;
    if (ratio == 0.0)
        ratio = p.sweeps > 1 ? std::pow(p.t_final / p.t_init, 1.0 / static_cast<double>(p.sweeps - 1))
                             : 1.0;
    return std::max(p.t_final, p.t_init * std::pow(ratio, static_cast<double>(sweep)));
}

void validate(const MfaParams& p) {
    if (!(p.t_init >= p.t_final) || !(p.t_final >= 0.0))
        throw InputError("mfa: need t_init >= t_final >= 0");
    if (!(p.t_decay > 0.0 && p.t_decay < 1.0)) throw InputError("mfa: t_decay must lie in (0,1)");
    if (!(p.init_noise_sigma >= 0.0)) throw InputError("mfa: init_noise_sigma must be >= 0");
    if (p.max_relax_iters < 1) throw InputError("mfa: max_relax_iters must be >= 1");
}

void validate(const NmfaParams& p) {
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw InputError("nmfa: alpha must lie in (0,1]");
    if (!(p.noise_sigma >= 0.0)) throw InputError("nmfa: noise_sigma must be >= 0");
    if (p.iters < 1) throw InputError("nmfa: iters must be >= 1");
    if (p.schedule.empty()) throw InputError("nmfa: temperature schedule must not be empty");
    for (double t : p.schedule)
        if (!(t >= 0.0)) throw InputError("nmfa: schedule temperatures must be >= 0");
}

void validate(const SimCimParams& p) {
    if (!(p.step_size > 0.0)) throw InputError("simcim: step_size must be positive");
    if (!(p.noise_sigma >= 0.0)) throw InputError("simcim: noise_sigma must be >= 0");
    if (p.iters < 1) throw InputError("simcim: iters must be >= 1");
    if (p.pump_schedule.empty()) throw InputError("simcim: pump schedule must not be empty");
}

std::vector<double> linear_schedule(double from, double to, std::int64_t points) {
    if (points < 1) throw InputError("schedule needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = from;
        return out;
    }
    for (std::int64_t k = 0; k < points; ++k)
        out[static_cast<std::size_t>(k)] =
            from + (to - from) * static_cast<double>(k) / static_cast<double>(points - 1);
    return out;
}

double schedule_at(const std::vector<double>& schedule, std::int64_t k, std::int64_t iters) {
    const auto len = static_cast<std::int64_t>(schedule.size());
    if (len == iters) return schedule[static_cast<std::size_t>(k)];
    const std::int64_t idx = std::min(len - 1, k * len / iters);
    return schedule[static_cast<std::size_t>(idx)];
}

NmfaParams nmfa_defaults(std::int64_t iters) {
    NmfaParams p;
    p.iters = iters;
    p.noise_sigma = 0.15;
    p.alpha = 0.15;
    p.schedule = linear_schedule(2.0, 0.02, 64);
    return p;
}

SimCimParams simcim_defaults(std::int64_t iters) {
    SimCimParams p;
    p.iters = iters;
    p.step_size = 0.1;
    p.noise_sigma = 0.03;
    p.pump_schedule = linear_schedule(-2.0, 1.0, 64);
    return p;
}

// --- MARS ---

double tanh_trial(double phi, double t) {
    if (t < kTempFloor) return phi > 0.0 ? -1.0 : (phi < 0.0 ? 1.0 : 0.0);
    return -std::tanh(phi / t);
}

double mars_relax_sweep(const IsingProblem& p, ContinuousState& s, double t) {
    const int n = p.size();
    const std::vector<double>& h = p.field();
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = p.row_dot(i, s.data()) + h[i];
        const double trial = tanh_trial(phi, t);
        d = std::max(d, std::abs(trial - s[i]));
        s[i] = trial;
    }
    return d;
}

std::int64_t relax_to_fixed_point(const IsingProblem& p, ContinuousState& s, double t,
                                  double d_min, std::int64_t& budget) {
    std::int64_t sweeps = 0;
    double d;
    do {
        if (budget <= 0)
            throw DivergedError("relaxation exceeded the sweep cap at T = " + std::to_string(t),
                                s, sweeps);
        --budget;
        d = mars_relax_sweep(p, s, t);
        ++sweeps;
    } while (d > d_min);
    return sweeps;
}

RunResult mars_descent(const IsingProblem& p, double start_temp, const MarsParams& params,
                       std::uint64_t seed) {
    validate(params);
    if (!(start_temp > 0.0)) throw InputError("mars: start_temp must be positive");
    const auto t0 = Clock::now();

    Rng rng(seed);
    const int n = p.size();
    ContinuousState s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = rng.uniform_open_sym();

    RunResult r;
    r.start_temp = start_temp;
    std::int64_t budget = kMarsSweepCap;
    double t_t = start_temp;
    while (t_t > 0.0) {
        t_t -= params.c_step;
        r.descent_iters += relax_to_fixed_point(p, s, t_t, params.d_min, budget);
    }
    finish_result(p, s, r);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

std::int64_t mars_run_count(const MarsParams& params, std::int64_t requested_runs) {
    validate(params);
    if (params.start_mode == StartMode::GridSweep) {
        const std::int64_t count = mars_grid_count(params);
        // only slot 0 can sit at t = 0; every later slot is >= t_step > 0
        if (count == 1 && !(params.t_min > 0.0))
            throw InputError("mars: the temperature grid contains no positive starting temperature");
        return count;
    }
    if (requested_runs < 1) throw InputError("mars: UniformRandom mode needs runs >= 1");
    return requested_runs;
}

MarsRunPlan mars_run_plan(const MarsParams& params, std::uint64_t base_seed, std::int64_t index) {
    MarsRunPlan plan;
    plan.seed = sub_seed(base_seed, static_cast<std::uint64_t>(index));
    if (params.start_mode == StartMode::GridSweep) {
        plan.start_temp = mars_grid_temp(params, index);
        plan.skipped = !(plan.start_temp > 0.0);
    } else {
        Rng temp_rng(splitmix64(plan.seed ^ kStartTempTag));
        plan.start_temp = params.t_min + temp_rng.uniform_open01() * (params.t_max - params.t_min);
        plan.skipped = false;
    }
    return plan;
}

std::vector<RunResult> mars_sweep(const IsingProblem& p, const MarsParams& params,
                                  std::uint64_t seed, std::int64_t runs) {
    const std::int64_t count = mars_run_count(params, runs);
    std::vector<RunResult> out(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        const MarsRunPlan plan = mars_run_plan(params, seed, k);
        if (plan.skipped) {
            out[static_cast<std::size_t>(k)].status = RunStatus::Skipped;
            out[static_cast<std::size_t>(k)].start_temp = plan.start_temp;
            continue;
        }
        try {
            out[static_cast<std::size_t>(k)] = mars_descent(p, plan.start_temp, params, plan.seed);
        } catch (const DivergedError& e) {
            RunResult& r = out[static_cast<std::size_t>(k)];
            r.status = RunStatus::Diverged;
            r.start_temp = plan.start_temp;
            r.descent_iters = e.sweeps;
            r.error = e.what();
            r.spins = round_spins(e.partial_state);
            r.energy = energy(p, r.spins);
            r.cut = cut_value(p, r.spins);
        }
    }
    return out;
}

// --- simulated annealing ---

bool metropolis_accept(double d_e, double t, double u) {
    if (d_e < 0.0) return true;
    if (t <= 0.0) return false;
    return u < std::exp(-d_e / t);
}

RunResult sa_run(const IsingProblem& p, const SaParams& params, std::uint64_t seed) {
    validate(params);
    const auto t0 = Clock::now();
    Rng rng(seed);
    const int n = p.size();

    SpinConfig spins(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) spins[static_cast<std::size_t>(i)] = rng.coin_spin();

    double e = energy(p, spins);
    SpinConfig best = spins;
    double best_e = e;

    for (std::int64_t sweep = 0; sweep < params.sweeps; ++sweep) {
        const double t = sa_temperature(params, sweep);
        for (int a = 0; a < n; ++a) {
            const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const double d_e = flip_delta(p, spins, i);
            const double u = rng.uniform_open01();
            if (metropolis_accept(d_e, t, u)) {
                spins[static_cast<std::size_t>(i)] =
                    static_cast<std::int8_t>(-spins[static_cast<std::size_t>(i)]);
                e += d_e;
                if (e < best_e) {
                    best_e = e;
                    best = spins;
                }
            }
        }
    }

    RunResult r;
    r.spins = std::move(best);
    r.energy = energy(p, r.spins);  // exact re-evaluation, not the drifting accumulator
    r.cut = cut_value(p, r.spins);
    r.start_temp = params.t_init;
    r.descent_iters = params.sweeps;
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

// --- mean-field annealing ---

double mfa_spin_average(double phi, double t) {
    if (t < kTempFloor) return phi > 0.0 ? 0.0 : (phi < 0.0 ? 1.0 : 0.5);
    const double x = phi / t;
    if (x > 700.0) return 0.0;
    if (x < -700.0) return 1.0;
    return 1.0 / (1.0 + std::exp(x));
}

RunResult mfa_run(const IsingProblem& p, const MfaParams& params, std::uint64_t seed) {
    validate(params);
    const auto t0 = Clock::now();
    Rng rng(seed);
    const int n = p.size();
    const std::vector<double>& h = p.field();

    // Fixed-point threshold shared with the MARS default d_min.
    constexpr double kFixedPointTol = 1e-4;

    ContinuousState avg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        avg[static_cast<std::size_t>(i)] =
            std::clamp(0.5 + params.init_noise_sigma * rng.gaussian(), 0.0, 1.0);

    // The mean field is built from the mean spin values m_j = 2<s_j> - 1,
    // so the [0,1] averages drive the +-1 Hamiltonian without a row-sum bias.
    ContinuousState mean_spin(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        mean_spin[static_cast<std::size_t>(i)] = 2.0 * avg[static_cast<std::size_t>(i)] - 1.0;

    RunResult r;
    r.start_temp = params.t_init;
    const double t_floor = std::max(params.t_final, kTempFloor);
    for (double t = params.t_init; t >= t_floor; t *= params.t_decay) {
        for (std::int64_t pass = 0; pass < params.max_relax_iters; ++pass) {
            double dmax = 0.0;
            for (int k = 0; k < n; ++k) {
                const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                const double phi =
                    h[static_cast<std::size_t>(i)] + 2.0 * p.row_dot(i, mean_spin.data());
                const double next = mfa_spin_average(phi, t);
                dmax = std::max(dmax, std::abs(next - avg[static_cast<std::size_t>(i)]));
                avg[static_cast<std::size_t>(i)] = next;
                mean_spin[static_cast<std::size_t>(i)] = 2.0 * next - 1.0;
            }
            ++r.descent_iters;
            if (dmax <= kFixedPointTol) break;
        }
    }

    // Threshold the [0,1] averages at 1/2 (exact midpoint rounds up).
    finish_result(p, mean_spin, r);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

// --- noisy mean-field annealing ---

std::vector<double> nmfa_normalizers(const IsingProblem& p) {
    const int n = p.size();
    std::vector<double> norms(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const double hi = p.field()[static_cast<std::size_t>(i)];
        norms[static_cast<std::size_t>(i)] = std::sqrt(hi * hi + p.row_sumsq(i));
    }
    return norms;
}

void nmfa_step(const IsingProblem& p, ContinuousState& s, const std::vector<double>& norms,
               double t, double alpha, double noise_sigma, Rng& rng) {
    const int n = p.size();
    const std::vector<double>& h = p.field();
    std::vector<double> trial(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double raw = h[static_cast<std::size_t>(i)] + p.row_dot(i, s.data());
        const double norm = norms[static_cast<std::size_t>(i)];
        double phi = norm > 0.0 ? raw / norm : 0.0;
        if (noise_sigma > 0.0) phi += noise_sigma * rng.gaussian();
        trial[static_cast<std::size_t>(i)] = tanh_trial(phi, t);
    }
    for (int i = 0; i < n; ++i)
        s[static_cast<std::size_t>(i)] =
            alpha * trial[static_cast<std::size_t>(i)] + (1.0 - alpha) * s[static_cast<std::size_t>(i)];
}

RunResult nmfa_run(const IsingProblem& p, const NmfaParams& params, std::uint64_t seed) {
    validate(params);
    const auto t0 = Clock::now();
    Rng rng(seed);
    const std::vector<double> norms = nmfa_normalizers(p);

    ContinuousState s(static_cast<std::size_t>(p.size()), 0.0);
    RunResult r;
    r.start_temp = params.schedule.front();
    for (std::int64_t k = 0; k < params.iters; ++k) {
        const double t = schedule_at(params.schedule, k, params.iters);
        nmfa_step(p, s, norms, t, params.alpha, params.noise_sigma, rng);
        ++r.descent_iters;
    }
    finish_result(p, s, r);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

// --- SimCIM ---

void simcim_step(const IsingProblem& p, ContinuousState& x, double pump, double step_size,
                 double noise_sigma, Rng& rng) {
    const int n = p.size();
    std::vector<double> grad(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        grad[static_cast<std::size_t>(j)] = -0.5 * p.row_dot(j, x.data());
    for (int j = 0; j < n; ++j) {
        double next = x[static_cast<std::size_t>(j)] +
                      step_size * (pump * x[static_cast<std::size_t>(j)] +
                                   grad[static_cast<std::size_t>(j)]);
        if (noise_sigma > 0.0) next += noise_sigma * rng.gaussian();
        x[static_cast<std::size_t>(j)] = std::clamp(next, -1.0, 1.0);
    }
}

RunResult simcim_run(const IsingProblem& p, const SimCimParams& params, std::uint64_t seed) {
    validate(params);
    const auto t0 = Clock::now();
    Rng rng(seed);

    ContinuousState x(static_cast<std::size_t>(p.size()), 0.0);
    RunResult r;
    r.start_temp = params.pump_schedule.front();
    for (std::int64_t k = 0; k < params.iters; ++k) {
        const double pump = schedule_at(params.pump_schedule, k, params.iters);
        simcim_step(p, x, pump, params.step_size, params.noise_sigma, rng);
        ++r.descent_iters;
    }
    finish_result(p, x, r);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

}  // namespace mars

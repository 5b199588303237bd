#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mars/model.hpp"
#include "mars/rng.hpp"

namespace mars {

class Rng;

// ---------------------------------------------------------------------------
// Parameter records. One record per solver; populated by the CLI/config layer.
// ---------------------------------------------------------------------------

enum class StartMode { GridSweep, UniformRandom };

struct MarsParams {
    double t_min = 0.0;    // lower bound of the starting-temperature range
    double t_max = 30.0;   // upper bound
    double t_step = 1.0;   // grid spacing of starting temperatures
    double c_step = 1.0;   // cooling decrement per outer iteration
    double d_min = 1e-4;   // convergence threshold on the max spin change
    StartMode start_mode = StartMode::GridSweep;
};

void validate(const MarsParams& p);

// GridSweep descent count: floor((t_max - t_min) / t_step) + 1, evaluated
// literally in doubles. Slot k starts at t_min + k * t_step; a slot at
// temperature <= 0 is recorded as a skipped no-op.
std::int64_t mars_grid_count(const MarsParams& p);
double mars_grid_temp(const MarsParams& p, std::int64_t k);

enum class CoolingSchedule { Linear, Geometric };

struct SaParams {
    double t_init = 5.0;
    double t_final = 0.01;
    CoolingSchedule schedule = CoolingSchedule::Geometric;
    // Geometric ratio in (0,1); 0 means "derive so t_final is reached on the
    // last sweep" (requires t_final > 0).
    double geometric_ratio = 0.0;
    std::int64_t sweeps = 100000;  // one sweep = n single-flip attempts
};

void validate(const SaParams& p);
double sa_temperature(const SaParams& p, std::int64_t sweep);

struct MfaParams {
    double t_init = 2.0;
    double t_final = 0.01;
    double t_decay = 0.9;          // multiplicative cooling factor in (0,1)
    double init_noise_sigma = 0.1; // sigma of the Gaussian delta at init
    std::int64_t max_relax_iters = 100;  // sweep cap per temperature
};

void validate(const MfaParams& p);

struct NmfaParams {
    double noise_sigma = 0.15;
    double alpha = 0.15;
    std::vector<double> schedule;  // temperature sequence, stretched over iters
    std::int64_t iters = 1000;
};

void validate(const NmfaParams& p);
// Documented placeholder defaults, calibrated against the small-N exact
// oracle (see tests); schedule is a linear ramp stretched over `iters`.
NmfaParams nmfa_defaults(std::int64_t iters = 1000);

struct SimCimParams {
    double step_size = 0.1;
    double noise_sigma = 0.03;
    std::vector<double> pump_schedule;  // stretched over iters
    std::int64_t iters = 1000;
};

void validate(const SimCimParams& p);
SimCimParams simcim_defaults(std::int64_t iters = 1000);

// Evenly spaced sequence from `from` to `to` inclusive.
std::vector<double> linear_schedule(double from, double to, std::int64_t points);

// Schedule value for iteration k of `iters` when the stored sequence has a
// different length: the sequence is stretched/compressed by index.
double schedule_at(const std::vector<double>& schedule, std::int64_t k, std::int64_t iters);

// ---------------------------------------------------------------------------
// Run results
// ---------------------------------------------------------------------------

enum class RunStatus { Ok, Skipped, Diverged };

struct RunResult {
    RunStatus status = RunStatus::Ok;
    double energy = 0.0;   // Eq.-exact energy of `spins`
    double cut = 0.0;      // cut value of the same configuration
    SpinConfig spins;
    double start_temp = 0.0;
    std::int64_t descent_iters = 0;  // inner relaxation sweeps executed
    double elapsed_seconds = 0.0;
    std::string error;     // set when status == Diverged
};

// ---------------------------------------------------------------------------
// Solvers. Each is a pure function of (problem, params, seed): identical
// inputs give bit-identical results except elapsed_seconds. All keep their
// working state private; a shared problem may be solved concurrently.
// ---------------------------------------------------------------------------

// Hard cap on relaxation sweeps per descent; exceeding it raises
// DivergedError carrying the partial state.
inline constexpr std::int64_t kMarsSweepCap = 1'000'000;

// One mean-field descent: random state in (-1,1), T_t = start_temp, then
// while T_t > 0 { T_t -= c_step; relax to a fixed point at T_t }. The final
// pass lands at T_t <= 0 where the trial value saturates to -sign(Phi),
// which is the quench. Spins are updated sequentially in index order
// (Gauss-Seidel); see mars_relax_sweep.
RunResult mars_descent(const IsingProblem& p, double start_temp, const MarsParams& params,
                       std::uint64_t seed);

// The restart schedule: GridSweep emits one descent per grid temperature
// (ignoring `runs`), UniformRandom draws `runs` starting temperatures from
// (t_min, t_max). Sub-seeds are derived per run index; see mars_run_plan.
std::vector<RunResult> mars_sweep(const IsingProblem& p, const MarsParams& params,
                                  std::uint64_t seed, std::int64_t runs = 1);

// Deterministic per-index plan shared by mars_sweep and the batch runner.
struct MarsRunPlan {
    bool skipped = false;
    double start_temp = 0.0;
    std::uint64_t seed = 0;
};

std::int64_t mars_run_count(const MarsParams& params, std::int64_t requested_runs);
MarsRunPlan mars_run_plan(const MarsParams& params, std::uint64_t base_seed, std::int64_t index);

// Metropolis single-spin-flip chain; returns the best configuration ever
// visited, not the final one.
RunResult sa_run(const IsingProblem& p, const SaParams& params, std::uint64_t seed);

// Mean-field annealing with the logistic [0,1] spin-average encoding:
// Phi_i = h_i + 2 sum_j J_ij m_j with m_j = 2<s_j> - 1 the mean spin value,
// <s_i> = 1 / (1 + exp(Phi_i / T)); randomly selected spins relaxed to a
// fixed point per temperature, cooled geometrically by t_decay.
RunResult mfa_run(const IsingProblem& p, const MfaParams& params, std::uint64_t seed);

// Noisy mean-field annealing: normalized field plus Gaussian noise,
// synchronous convex-combination update.
RunResult nmfa_run(const IsingProblem& p, const NmfaParams& params, std::uint64_t seed);

// Clamped gradient dynamics with a pump schedule (reconstruction of the
// published one-line description; fully parameterized).
RunResult simcim_run(const IsingProblem& p, const SimCimParams& params, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Step-level pieces, exposed for tests and reuse.
// ---------------------------------------------------------------------------

// -tanh(phi / t); below t = 1e-12 the limit -sign(phi) is used (0 for phi = 0).
double tanh_trial(double phi, double t);

// One Gauss-Seidel relaxation pass of the MARS update at temperature t:
// spins are rewritten in ascending index order, each seeing its
// predecessors' fresh values. Returns max_i |s_i' - s_i|.
double mars_relax_sweep(const IsingProblem& p, ContinuousState& s, double t);

// Sweeps until the max change is <= d_min, decrementing `budget` per sweep;
// throws DivergedError when the budget runs out. Returns sweeps executed.
std::int64_t relax_to_fixed_point(const IsingProblem& p, ContinuousState& s, double t,
                                  double d_min, std::int64_t& budget);

// Metropolis acceptance for energy change dE at temperature t, given a
// uniform draw u in (0,1). At t <= 0 only strictly improving moves pass.
bool metropolis_accept(double d_e, double t, double u);

// <s> = 1 / (1 + exp(phi / t)) with overflow guards; t < 1e-12 degenerates
// to the 0/1 step (1/2 at phi = 0).
double mfa_spin_average(double phi, double t);

// One synchronous NMFA update of the whole state. `norms` holds the
// precomputed per-spin normalizers sqrt(h_i^2 + sum_j J_ij^2); a zero
// normalizer yields a zero normalized field. Noise is drawn per spin in
// index order.
void nmfa_step(const IsingProblem& p, ContinuousState& s, const std::vector<double>& norms,
               double t, double alpha, double noise_sigma, Rng& rng);

std::vector<double> nmfa_normalizers(const IsingProblem& p);

// One synchronous SimCIM update: X_j <- clamp(X_j + step * (pump * X_j + F_j)
// + noise, [-1, 1]) with F_j = -(1/2) sum_k J_jk X_k.
void simcim_step(const IsingProblem& p, ContinuousState& x, double pump, double step_size,
                 double noise_sigma, Rng& rng);

}  // namespace mars

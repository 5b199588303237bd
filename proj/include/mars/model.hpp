#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mars/errors.hpp"

namespace mars {

// Spins are stored as exact -1/+1 bytes.
using SpinConfig = std::vector<std::int8_t>;

// Per-spin real values in [-1, 1]; the working state of the continuous solvers.
using ContinuousState = std::vector<double>;

// How much work kernels may spread across OpenMP threads. Serial is the
// reference path; results of the parallel path are checked against it in the
// test suite and in the bench tool.
enum class ExecPolicy { Serial, OpenMP };

// Symmetric coupling matrix J (zero diagonal) plus external field h.
// Immutable once built; safe to share read-only across threads.
//
// Storage is dense row-major for dense instances (SK matrices) and a CSR
// adjacency for graphs below kSparseDensityThreshold. Both back the same
// evaluation contract; callers never see the difference.
class IsingProblem {
  public:
    static constexpr double kSparseDensityThreshold = 0.05;

    struct Edge {
        int u, v;   // 0-based, u != v
        double w;
    };

    // Dense construction. `couplings` is n*n row-major; must be symmetric
    // with zero diagonal. `field` may be empty (treated as all zero).
    static IsingProblem dense(int n, std::vector<double> couplings,
                              std::vector<double> field = {});

    // Builds from an explicit edge list; picks adjacency storage when the
    // edge density is below kSparseDensityThreshold, dense otherwise.
    static IsingProblem from_edges(int n, const std::vector<Edge>& edges,
                                   std::vector<double> field = {});

    int size() const { return n_; }
    const std::vector<double>& field() const { return field_; }
    bool has_field() const { return has_field_; }
    bool uses_adjacency() const { return !dense_storage_; }

    // True when every coupling and field entry is an exact integer.
    bool integral() const { return integral_; }

    // Sum over all ordered pairs: sum_{i,j} J_ij (used by the cut identity).
    double coupling_sum() const { return coupling_sum_; }

    // Number of stored nonzero couplings over ordered pairs.
    std::int64_t nonzeros() const { return nnz_; }

    double coupling(int i, int j) const;

    // sum_j J_ij * values[j] for a real-valued state.
    double row_dot(int i, const double* values) const;

    // sum_j J_ij * spins[j] for a discrete configuration.
    double row_dot_spins(int i, const std::int8_t* spins) const;

    // sum_j J_ij^2 for one row.
    double row_sumsq(int i) const;

    // Dense copy of row i (zeros included).
    std::vector<double> row_values(int i) const;

    // Visits every stored nonzero upper-triangle coupling in ascending
    // (i, j) order — the canonical enumeration used by hashing and export.
    void visit_upper(const std::function<void(int, int, double)>& fn) const;

    // Absolute tolerance for "same energy" on this problem: exact for
    // integral instances, 1e-9 otherwise.
    double energy_equality_tolerance() const { return integral_ ? 0.0 : 1e-9; }

    const std::vector<double>& dense_data() const { return dense_; }

  private:
    IsingProblem() = default;
    void finalize_metadata();

    int n_ = 0;
    bool dense_storage_ = true;
    bool has_field_ = false;
    bool integral_ = true;
    double coupling_sum_ = 0.0;
    std::int64_t nnz_ = 0;
    std::vector<double> dense_;        // n*n when dense_storage_
    std::vector<int> adj_offsets_;     // n+1 when adjacency
    std::vector<int> adj_index_;
    std::vector<double> adj_weight_;
    std::vector<double> field_;        // always length n
};

// --- model operations (Eq.-faithful evaluation) ---

// H(sigma) = sum_i sum_{j != i} J_ij s_i s_j + sum_i h_i s_i. The ordered
// double sum counts every unordered pair twice; all reported energies use
// this convention.
double energy(const IsingProblem& p, const SpinConfig& spins,
              ExecPolicy policy = ExecPolicy::Serial);

// sum_{i,j} J_ij s_i s_j (the coupling term of the energy, ordered pairs).
double coupling_term(const IsingProblem& p, const SpinConfig& spins,
                     ExecPolicy policy = ExecPolicy::Serial);

// Cut weight of the partition induced by sign(sigma):
// (1/4) sum_{i,j} J_ij - (1/4) sum_{i,j} J_ij s_i s_j.
double cut_value(const IsingProblem& p, const SpinConfig& spins,
                 ExecPolicy policy = ExecPolicy::Serial);

// Mean-field term Phi_i = sum_j J_ij s_j (field h_i deliberately excluded;
// solvers add their own field/normalization per their update rule).
double local_field(const IsingProblem& p, const ContinuousState& state, int i);

// Energy change of flipping spin i, computed in O(N):
// -2 s_i (2 sum_{j != i} J_ij s_j + h_i).
double flip_delta(const IsingProblem& p, const SpinConfig& spins, int i);

// Sign rounding; exact zeros map to +1.
SpinConfig round_spins(const ContinuousState& state);

struct GroundState {
    double energy;
    SpinConfig spins;
};

// Exhaustive 2^n scan (Gray-code walk). Ties are broken toward the
// lexicographically smallest spin pattern with -1 ordered before +1.
// Refuses n > max_n.
GroundState brute_force_ground_state(const IsingProblem& p, int max_n = 26,
                                     ExecPolicy policy = ExecPolicy::Serial);

// Energies of many configurations at once (parallel over configurations;
// each energy is evaluated by the serial kernel, so results are bit-equal
// to per-config serial calls).
std::vector<double> batch_energies(const IsingProblem& p,
                                   const std::vector<SpinConfig>& configs,
                                   ExecPolicy policy = ExecPolicy::Serial);

// |a - b| within the problem's equality tolerance.
bool energy_equal(const IsingProblem& p, double a, double b);

inline void require_spin_dims(const IsingProblem& p, const SpinConfig& s) {
    if (static_cast<int>(s.size()) != p.size())
        throw InputError("spin configuration length " + std::to_string(s.size()) +
                         " does not match problem size " + std::to_string(p.size()));
}

}  // namespace mars

#include "mars/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mars {

namespace {

bool is_integral_value(double v) { return std::nearbyint(v) == v && std::isfinite(v); }

}  // namespace

void IsingProblem::finalize_metadata() {
    coupling_sum_ = 0.0;
    nnz_ = 0;
    integral_ = true;
    if (dense_storage_) {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const double w = dense_[static_cast<std::size_t>(i) * n_ + j];
                coupling_sum_ += w;
                if (w != 0.0) ++nnz_;
                if (integral_ && !is_integral_value(w)) integral_ = false;
            }
        }
    } else {
        for (std::size_t k = 0; k < adj_weight_.size(); ++k) {
            coupling_sum_ += adj_weight_[k];
            ++nnz_;
            if (integral_ && !is_integral_value(adj_weight_[k])) integral_ = false;
        }
    }
    has_field_ = false;
    for (double h : field_) {
        if (h != 0.0) has_field_ = true;
        if (integral_ && !is_integral_value(h)) integral_ = false;
    }
}

IsingProblem IsingProblem::dense(int n, std::vector<double> couplings,
                                 std::vector<double> field) {
    if (n <= 0) throw InputError("problem size must be positive");
    if (couplings.size() != static_cast<std::size_t>(n) * n)
        throw InputError("coupling matrix must be n*n");
    if (field.empty()) field.assign(n, 0.0);
    if (field.size() != static_cast<std::size_t>(n))
        throw InputError("field length must equal n");
    for (int i = 0; i < n; ++i) {
        if (couplings[static_cast<std::size_t>(i) * n + i] != 0.0)
            throw InputError("coupling diagonal must be zero (row " + std::to_string(i) + ")");
        for (int j = i + 1; j < n; ++j) {
            if (couplings[static_cast<std::size_t>(i) * n + j] !=
                couplings[static_cast<std::size_t>(j) * n + i])
                throw InputError("coupling matrix must be symmetric (entries " +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    IsingProblem p;
    p.n_ = n;
    p.dense_storage_ = true;
    p.dense_ = std::move(couplings);
    p.field_ = std::move(field);
    p.finalize_metadata();
    return p;
}

IsingProblem IsingProblem::from_edges(int n, const std::vector<Edge>& edges,
                                      std::vector<double> field) {
    if (n <= 0) throw InputError("problem size must be positive");
    if (field.empty()) field.assign(n, 0.0);
    if (field.size() != static_cast<std::size_t>(n))
        throw InputError("field length must equal n");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("self-coupling is not allowed");
    }
    const double max_pairs = 0.5 * static_cast<double>(n) * (n - 1);
    const double density = max_pairs > 0 ? static_cast<double>(edges.size()) / max_pairs : 1.0;

    IsingProblem p;
    p.n_ = n;
    p.field_ = std::move(field);
    if (density >= kSparseDensityThreshold) {
        p.dense_storage_ = true;
        p.dense_.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (const Edge& e : edges) {
            p.dense_[static_cast<std::size_t>(e.u) * n + e.v] += e.w;
            p.dense_[static_cast<std::size_t>(e.v) * n + e.u] += e.w;
        }
    } else {
        p.dense_storage_ = false;
        std::vector<int> degree(n, 0);
        for (const Edge& e : edges) {
            ++degree[e.u];
            ++degree[e.v];
        }
        p.adj_offsets_.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) p.adj_offsets_[i + 1] = p.adj_offsets_[i] + degree[i];
        p.adj_index_.resize(2 * edges.size());
        p.adj_weight_.resize(2 * edges.size());
        std::vector<int> cursor(p.adj_offsets_.begin(), p.adj_offsets_.end() - 1);
        for (const Edge& e : edges) {
            p.adj_index_[cursor[e.u]] = e.v;
            p.adj_weight_[cursor[e.u]++] = e.w;
            p.adj_index_[cursor[e.v]] = e.u;
            p.adj_weight_[cursor[e.v]++] = e.w;
        }
        // Canonical neighbor order per row.
        for (int i = 0; i < n; ++i) {
            const int lo = p.adj_offsets_[i], hi = p.adj_offsets_[i + 1];
            std::vector<std::pair<int, double>> row;
            row.reserve(static_cast<std::size_t>(hi - lo));
            for (int k = lo; k < hi; ++k) row.emplace_back(p.adj_index_[k], p.adj_weight_[k]);
            std::sort(row.begin(), row.end());
            for (int k = lo; k < hi; ++k) {
                p.adj_index_[k] = row[static_cast<std::size_t>(k - lo)].first;
                p.adj_weight_[k] = row[static_cast<std::size_t>(k - lo)].second;
            }
        }
    }
    p.finalize_metadata();
    return p;
}

double IsingProblem::coupling(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("coupling index out of range");
    if (dense_storage_) return dense_[static_cast<std::size_t>(i) * n_ + j];
    for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
        if (adj_index_[k] == j) return adj_weight_[k];
    return 0.0;
}

double IsingProblem::row_dot(int i, const double* values) const {
    double acc = 0.0;
    if (dense_storage_) {
        const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) acc += row[j] * values[j];
    } else {
        for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
            acc += adj_weight_[k] * values[adj_index_[k]];
    }
    return acc;
}

double IsingProblem::row_dot_spins(int i, const std::int8_t* spins) const {
    double acc = 0.0;
    if (dense_storage_) {
        const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) acc += row[j] * spins[j];
    } else {
        for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
            acc += adj_weight_[k] * spins[adj_index_[k]];
    }
    return acc;
}

double IsingProblem::row_sumsq(int i) const {
    double acc = 0.0;
    if (dense_storage_) {
        const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) acc += row[j] * row[j];
    } else {
        for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
            acc += adj_weight_[k] * adj_weight_[k];
    }
    return acc;
}

std::vector<double> IsingProblem::row_values(int i) const {
    std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
    if (dense_storage_) {
        const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
        out.assign(row, row + n_);
    } else {
        for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
            out[static_cast<std::size_t>(adj_index_[k])] = adj_weight_[k];
    }
    return out;
}

void IsingProblem::visit_upper(const std::function<void(int, int, double)>& fn) const {
    if (dense_storage_) {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double w = dense_[static_cast<std::size_t>(i) * n_ + j];
                if (w != 0.0) fn(i, j, w);
            }
    } else {
        for (int i = 0; i < n_; ++i)
            for (int k = adj_offsets_[i]; k < adj_offsets_[i + 1]; ++k)
                if (adj_index_[k] > i) fn(i, adj_index_[k], adj_weight_[k]);
    }
}

double coupling_term(const IsingProblem& p, const SpinConfig& spins, ExecPolicy policy) {
    require_spin_dims(p, spins);
    const int n = p.size();
    double total = 0.0;
#ifdef _OPENMP
    if (policy == ExecPolicy::OpenMP) {
#pragma omp parallel for reduction(+ : total) schedule(static)
        for (int i = 0; i < n; ++i) total += spins[i] * p.row_dot_spins(i, spins.data());
        return total;
    }
#else
    (void)policy;
#endif
    for (int i = 0; i < n; ++i) total += spins[i] * p.row_dot_spins(i, spins.data());
    return total;
}

double energy(const IsingProblem& p, const SpinConfig& spins, ExecPolicy policy) {
    double total = coupling_term(p, spins, policy);
    const std::vector<double>& h = p.field();
    for (int i = 0; i < p.size(); ++i) total += h[i] * spins[i];
    return total;
}

double cut_value(const IsingProblem& p, const SpinConfig& spins, ExecPolicy policy) {
    return 0.25 * (p.coupling_sum() - coupling_term(p, spins, policy));
}

double local_field(const IsingProblem& p, const ContinuousState& state, int i) {
    if (static_cast<int>(state.size()) != p.size())
        throw InputError("state length does not match problem size");
    if (i < 0 || i >= p.size()) throw InputError("spin index out of range");
    return p.row_dot(i, state.data());
}

double flip_delta(const IsingProblem& p, const SpinConfig& spins, int i) {
    require_spin_dims(p, spins);
    if (i < 0 || i >= p.size()) throw InputError("spin index out of range");
    const double row = p.row_dot_spins(i, spins.data());
    return -2.0 * spins[i] * (2.0 * row + p.field()[i]);
}

SpinConfig round_spins(const ContinuousState& state) {
    SpinConfig out(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) out[i] = state[i] < 0.0 ? int8_t{-1} : int8_t{1};
    return out;
}

namespace {

// -1 before +1, position by position.
bool lex_less(const SpinConfig& a, const SpinConfig& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct ScanBest {
    double energy;
    SpinConfig spins;
};

// Walks configurations `first..last` (exclusive) of the Gray-code order,
// updating the energy incrementally with one O(N) flip per step.
ScanBest gray_scan_range(const IsingProblem& p, std::uint64_t first, std::uint64_t last) {
    const int n = p.size();
    SpinConfig cur(n);
    const std::uint64_t g = first ^ (first >> 1);
    for (int i = 0; i < n; ++i) cur[i] = (g >> i) & 1u ? int8_t{1} : int8_t{-1};
    double e = energy(p, cur);

    ScanBest best{e, cur};
    for (std::uint64_t c = first + 1; c < last; ++c) {
        const int bit = std::countr_zero(c);
        e += flip_delta(p, cur, bit);
        cur[bit] = static_cast<std::int8_t>(-cur[bit]);
        if (e < best.energy || (e == best.energy && lex_less(cur, best.spins))) {
            best.energy = e;
            best.spins = cur;
        }
    }
    return best;
}

ScanBest merge_best(ScanBest a, ScanBest b) {
    if (b.energy < a.energy) return b;
    if (b.energy == a.energy && lex_less(b.spins, a.spins)) return b;
    return a;
}

}  // namespace

GroundState brute_force_ground_state(const IsingProblem& p, int max_n, ExecPolicy policy) {
    const int n = p.size();
    if (n > max_n)
        throw InputError("brute force refused: n = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(max_n));
    const std::uint64_t total = std::uint64_t{1} << n;

    ScanBest best{0.0, {}};
#ifdef _OPENMP
    if (policy == ExecPolicy::OpenMP && n >= 16) {
        const int chunks = std::max(1, omp_get_max_threads() * 8);
        const std::uint64_t step = (total + chunks - 1) / chunks;
        std::vector<ScanBest> partial(chunks, ScanBest{0.0, {}});
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < chunks; ++c) {
            const std::uint64_t lo = step * c;
            const std::uint64_t hi = std::min(total, lo + step);
            if (lo < hi) partial[c] = gray_scan_range(p, lo, hi);
        }
        best = partial[0];
        for (int c = 1; c < chunks; ++c)
            if (!partial[c].spins.empty()) best = merge_best(best, partial[c]);
    } else
#endif
    {
        (void)policy;
        best = gray_scan_range(p, 0, total);
    }

    // Report the exact double sum, not the incrementally accumulated value.
    return GroundState{energy(p, best.spins), std::move(best.spins)};
}

std::vector<double> batch_energies(const IsingProblem& p, const std::vector<SpinConfig>& configs,
                                   ExecPolicy policy) {
    std::vector<double> out(configs.size());
#ifdef _OPENMP
    if (policy == ExecPolicy::OpenMP) {
        const std::int64_t m = static_cast<std::int64_t>(configs.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < m; ++k) out[k] = energy(p, configs[k]);
        return out;
    }
#else
    (void)policy;
#endif
    for (std::size_t k = 0; k < configs.size(); ++k) out[k] = energy(p, configs[k]);
    return out;
}

bool energy_equal(const IsingProblem& p, double a, double b) {
    return std::abs(a - b) <= p.energy_equality_tolerance();
}

}  // namespace mars

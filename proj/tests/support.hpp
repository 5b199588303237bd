#pragma once

// Test-side oracles, kept independent of the library's evaluation path.

#include <cstdint>
#include <vector>

#include "mars/model.hpp"
#include "mars/rng.hpp"

namespace testsupport {

// Direct double-loop evaluation of the ordered-sum Hamiltonian.
inline double naive_energy(const mars::IsingProblem& p, const mars::SpinConfig& s) {
    const int n = p.size();
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) e += p.coupling(i, j) * s[static_cast<std::size_t>(i)] *
                             s[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i)
        e += p.field()[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
    return e;
}

// Exhaustive minimum by plain binary counting (no Gray code, no increments).
inline double naive_ground_energy(const mars::IsingProblem& p) {
    const int n = p.size();
    double best = 0.0;
    bool first = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        mars::SpinConfig s(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            s[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? int8_t{1} : int8_t{-1};
        const double e = naive_energy(p, s);
        if (first || e < best) {
            best = e;
            first = false;
        }
    }
    return best;
}

inline mars::SpinConfig random_config(int n, mars::Rng& rng) {
    mars::SpinConfig s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.coin_spin();
    return s;
}

// Small dense random instance with Gaussian couplings.
inline mars::IsingProblem random_gaussian(int n, std::uint64_t seed) {
    mars::Rng rng(seed);
    std::vector<double> j(static_cast<std::size_t>(n) * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double w = rng.gaussian();
            j[static_cast<std::size_t>(a) * n + b] = w;
            j[static_cast<std::size_t>(b) * n + a] = w;
        }
    return mars::IsingProblem::dense(n, std::move(j));
}

// Random instance with small integer couplings and field.
inline mars::IsingProblem random_integer(int n, std::uint64_t seed, bool with_field) {
    mars::Rng rng(seed);
    std::vector<double> j(static_cast<std::size_t>(n) * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double w = static_cast<double>(static_cast<int>(rng.below(7)) - 3);
            j[static_cast<std::size_t>(a) * n + b] = w;
            j[static_cast<std::size_t>(b) * n + a] = w;
        }
    std::vector<double> h(static_cast<std::size_t>(n), 0.0);
    if (with_field)
        for (auto& v : h) v = static_cast<double>(static_cast<int>(rng.below(5)) - 2);
    return mars::IsingProblem::dense(n, std::move(j), std::move(h));
}

}  // namespace testsupport

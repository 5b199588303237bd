#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mars/errors.hpp"
#include "mars/model.hpp"
#include "mars/rng.hpp"
#include "support.hpp"

using namespace mars;

namespace {

IsingProblem two_spin(double j12, double h1 = 0.0, double h2 = 0.0) {
    return IsingProblem::dense(2, {0.0, j12, j12, 0.0}, {h1, h2});
}

IsingProblem unit_triangle() {
    return IsingProblem::dense(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
}

}  // namespace

TEST_CASE("energy: ordered double sum counts each pair twice") {
    const auto p = two_spin(1.0);
    CHECK(energy(p, {1, 1}) == doctest::Approx(2.0));
    CHECK(energy(p, {1, -1}) == doctest::Approx(-2.0));
    const auto pf = two_spin(1.0, 1.0, 1.0);
    CHECK(energy(pf, {1, 1}) == doctest::Approx(4.0));
}

TEST_CASE("energy: dimension mismatch is an input error") {
    const auto p = two_spin(1.0);
    CHECK_THROWS_AS(energy(p, {1, 1, 1}), InputError);
    CHECK_THROWS_AS(cut_value(p, {1}), InputError);
}

TEST_CASE("cut_value: unit edge and triangle") {
    const auto p = two_spin(1.0);
    CHECK(cut_value(p, {1, -1}) == doctest::Approx(1.0));
    CHECK(cut_value(p, {1, 1}) == doctest::Approx(0.0));

    const auto tri = unit_triangle();
    CHECK(cut_value(tri, {1, 1, -1}) == doctest::Approx(2.0));
    // enumeration oracle: the maximum cut of the unit triangle is 2
    double best = 0.0;
    for (int mask = 0; mask < 8; ++mask) {
        SpinConfig s{static_cast<int8_t>(mask & 1 ? 1 : -1),
                     static_cast<int8_t>(mask & 2 ? 1 : -1),
                     static_cast<int8_t>(mask & 4 ? 1 : -1)};
        best = std::max(best, cut_value(tri, s));
    }
    CHECK(best == doctest::Approx(2.0));
}

TEST_CASE("local_field: zero state, single term, row sum") {
    const auto p2 = two_spin(1.0);
    CHECK(local_field(p2, {0.0, 0.0}, 0) == 0.0);
    CHECK(local_field(p2, {0.0, 0.5}, 0) == doctest::Approx(0.5));
    const auto tri = unit_triangle();
    for (int i = 0; i < 3; ++i) CHECK(local_field(tri, {1, 1, 1}, i) == doctest::Approx(2.0));
    CHECK_THROWS_AS(local_field(tri, {1, 1, 1}, 3), InputError);
    CHECK_THROWS_AS(local_field(tri, {1, 1, 1}, -1), InputError);
}

TEST_CASE("flip_delta: examples and re-evaluation oracle") {
    const auto p = two_spin(1.0);
    CHECK(flip_delta(p, {1, 1}, 0) == doctest::Approx(-4.0));
    CHECK(flip_delta(p, {1, -1}, 0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(flip_delta(p, {1, 1}, 2), InputError);

    const auto r = testsupport::random_gaussian(8, 991);
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        SpinConfig s = testsupport::random_config(8, rng);
        for (int i = 0; i < 8; ++i) {
            SpinConfig flipped = s;
            flipped[static_cast<std::size_t>(i)] =
                static_cast<int8_t>(-flipped[static_cast<std::size_t>(i)]);
            const double oracle =
                testsupport::naive_energy(r, flipped) - testsupport::naive_energy(r, s);
            CHECK(flip_delta(r, s, i) == doctest::Approx(oracle).epsilon(1e-12));
        }
    }
}

TEST_CASE("round_spins: signs, tie-break at zero, idempotence") {
    CHECK(round_spins({0.3, -0.9}) == SpinConfig{1, -1});
    CHECK(round_spins({0.0, -0.0}) == SpinConfig{1, 1});
    CHECK(round_spins({0.5, 1.0, 1e-300}) == SpinConfig{1, 1, 1});

    Rng rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        ContinuousState s(12);
        for (auto& v : s) v = rng.uniform_open_sym();
        const SpinConfig first = round_spins(s);
        ContinuousState discrete(first.size());
        for (std::size_t i = 0; i < first.size(); ++i) discrete[i] = first[i];
        CHECK(round_spins(discrete) == first);
    }
}

TEST_CASE("brute force: antiparallel pair with lexicographic tie-break") {
    const auto p = two_spin(1.0);
    const auto gs = brute_force_ground_state(p);
    CHECK(gs.energy == doctest::Approx(-2.0));
    CHECK(gs.spins == SpinConfig{-1, 1});
}

TEST_CASE("brute force: single spin aligns against the field") {
    const auto p = IsingProblem::dense(1, {0.0}, {5.0});
    const auto gs = brute_force_ground_state(p);
    CHECK(gs.energy == doctest::Approx(-5.0));
    CHECK(gs.spins == SpinConfig{-1});
}

TEST_CASE("brute force: frustrated unit triangle reaches -2") {
    const auto gs = brute_force_ground_state(unit_triangle());
    CHECK(gs.energy == doctest::Approx(-2.0));
}

TEST_CASE("brute force: size guard refuses large n") {
    const auto p = testsupport::random_gaussian(12, 3);
    CHECK_THROWS_AS(brute_force_ground_state(p, 10), InputError);
}

TEST_CASE("brute force: minimality against naive enumeration, serial == openmp") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto p = testsupport::random_gaussian(12, seed * 31);
        const auto gs = brute_force_ground_state(p, 26, ExecPolicy::Serial);
        CHECK(gs.energy == doctest::Approx(testsupport::naive_ground_energy(p)).epsilon(1e-12));

        const auto gs_omp = brute_force_ground_state(p, 26, ExecPolicy::OpenMP);
        CHECK(gs_omp.energy == gs.energy);
        CHECK(gs_omp.spins == gs.spins);
    }
    // integer instance: exact equality including the tie-broken pattern
    const auto ip = testsupport::random_integer(14, 77, true);
    const auto a = brute_force_ground_state(ip, 26, ExecPolicy::Serial);
    const auto b = brute_force_ground_state(ip, 26, ExecPolicy::OpenMP);
    CHECK(a.energy == b.energy);
    CHECK(a.spins == b.spins);
}

TEST_CASE("invariant: global spin flip symmetry at zero field") {
    Rng rng(23);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto p = testsupport::random_gaussian(16, seed);
        SpinConfig s = testsupport::random_config(16, rng);
        SpinConfig neg(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) neg[i] = static_cast<int8_t>(-s[i]);
        CHECK(energy(p, s) == energy(p, neg));
    }
}

TEST_CASE("invariant: cut-energy identity") {
    Rng rng(29);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto p = testsupport::random_gaussian(20, seed + 100);
        const double total = p.coupling_sum();
        for (int rep = 0; rep < 10; ++rep) {
            const SpinConfig s = testsupport::random_config(20, rng);
            const double lhs = 4.0 * cut_value(p, s) + coupling_term(p, s);
            CHECK(std::abs(lhs - total) <= 1e-9 * 20 * 20);
        }
    }
}

TEST_CASE("invariant: integer instances give integer energies with even coupling term") {
    Rng rng(31);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto p = testsupport::random_integer(10, seed, true);
        REQUIRE(p.integral());
        for (int rep = 0; rep < 10; ++rep) {
            const SpinConfig s = testsupport::random_config(10, rng);
            const double e = energy(p, s);
            CHECK(e == std::nearbyint(e));
            double field_term = 0.0;
            for (int i = 0; i < 10; ++i)
                field_term += p.field()[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
            const double pair_term = e - field_term;
            CHECK(std::fmod(std::abs(pair_term), 2.0) == 0.0);
        }
    }
}

TEST_CASE("kernels: openmp variants match the serial reference") {
    Rng rng(37);
    const auto preal = testsupport::random_gaussian(64, 4242);
    const auto pint = testsupport::random_integer(64, 4242, false);
    for (int rep = 0; rep < 10; ++rep) {
        const SpinConfig s = testsupport::random_config(64, rng);
        // integer couplings: sums are exact in double, any order
        CHECK(energy(pint, s, ExecPolicy::OpenMP) == energy(pint, s, ExecPolicy::Serial));
        // real couplings: reduction order may differ by rounding only
        CHECK(energy(preal, s, ExecPolicy::OpenMP) ==
              doctest::Approx(energy(preal, s, ExecPolicy::Serial)).epsilon(1e-12));
    }
    std::vector<SpinConfig> configs;
    for (int k = 0; k < 100; ++k) configs.push_back(testsupport::random_config(64, rng));
    CHECK(batch_energies(preal, configs, ExecPolicy::OpenMP) ==
          batch_energies(preal, configs, ExecPolicy::Serial));
}

TEST_CASE("problem construction: validation") {
    CHECK_THROWS_AS(IsingProblem::dense(2, {0, 1, 2, 0}), InputError);       // asymmetric
    CHECK_THROWS_AS(IsingProblem::dense(2, {1, 0, 0, 0}), InputError);       // nonzero diagonal
    CHECK_THROWS_AS(IsingProblem::dense(2, {0, 1, 1.0}), InputError);        // wrong size
    CHECK_THROWS_AS(IsingProblem::dense(2, {0, 1, 1, 0}, {1.0}), InputError);  // field length
    CHECK_THROWS_AS(IsingProblem::from_edges(3, {{0, 0, 1.0}}), InputError); // self edge
    CHECK_THROWS_AS(IsingProblem::from_edges(3, {{0, 3, 1.0}}), InputError); // out of range
}

TEST_CASE("problem storage: sparse and dense agree") {
    // 40 nodes, 30 edges: density ~3.8% -> adjacency path
    Rng rng(41);
    std::vector<IsingProblem::Edge> edges;
    for (int k = 0; k < 30; ++k) {
        int u = static_cast<int>(rng.below(40));
        int v = static_cast<int>(rng.below(40));
        if (u == v) {
            --k;
            continue;
        }
        bool dup = false;
        for (const auto& e : edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) dup = true;
        if (dup) {
            --k;
            continue;
        }
        edges.push_back({u, v, rng.gaussian()});
    }
    const auto sparse = IsingProblem::from_edges(40, edges);
    REQUIRE(sparse.uses_adjacency());

    std::vector<double> jd(40 * 40, 0.0);
    for (const auto& e : edges) {
        jd[static_cast<std::size_t>(e.u) * 40 + e.v] = e.w;
        jd[static_cast<std::size_t>(e.v) * 40 + e.u] = e.w;
    }
    const auto dense = IsingProblem::dense(40, std::move(jd));
    REQUIRE_FALSE(dense.uses_adjacency());

    CHECK(sparse.coupling_sum() == doctest::Approx(dense.coupling_sum()).epsilon(1e-12));
    for (int rep = 0; rep < 10; ++rep) {
        const SpinConfig s = testsupport::random_config(40, rng);
        CHECK(energy(sparse, s) == doctest::Approx(energy(dense, s)).epsilon(1e-12));
        CHECK(cut_value(sparse, s) == doctest::Approx(cut_value(dense, s)).epsilon(1e-12));
    }
    ContinuousState cs(40);
    for (auto& v : cs) v = rng.uniform_open_sym();
    for (int i = 0; i < 40; ++i)
        CHECK(local_field(sparse, cs, i) == doctest::Approx(local_field(dense, cs, i)).epsilon(1e-12));
}

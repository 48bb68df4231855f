#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kirwan/weightlat.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>
#include <set>
#include <vector>

using namespace kirwan;
using kirwan::testing::curve33_chamber;
using kirwan::testing::curve33_weight_system;
using kirwan::testing::index_set_oracle;

TEST_CASE("closest_point examples") {
    const WeightSystem ws = curve33_weight_system();
    CHECK(closest_point(ws, {Weight(1, -3), Weight(3, 3)}) ==
          Weight(Rat(9, 5), Rat(-3, 5)));
    CHECK(closest_point(ws, {Weight(-1, -3), Weight(3, 3)}) ==
          Weight(Rat(9, 13), Rat(-6, 13)));
    CHECK(closest_point(ws, {Weight(3, -3)}) == Weight(3, -3));
    CHECK(closest_point(ws, {Weight(1, -1), Weight(-1, 1)}) == Weight(0, 0));
    // Collinear triple; the minimizer is the middle weight.
    CHECK(closest_point(ws, {Weight(3, 1), Weight(1, -1), Weight(-1, -3)}) ==
          Weight(1, -1));
}

TEST_CASE("closest_point norm minimality over a rational grid") {
    const WeightSystem ws = curve33_weight_system();
    const std::vector<std::vector<Weight>> subsets = {
        {Weight(1, -3), Weight(3, 3)},
        {Weight(3, 1), Weight(1, -1), Weight(-1, -3)},
        {Weight(3, -3), Weight(3, 3), Weight(1, 1)},
        {Weight(-1, -3), Weight(3, 3), Weight(3, -1)},
    };
    for (const auto& subset : subsets) {
        const Weight cp = closest_point(ws, subset);
        const Rat cp_norm = ws.gram.norm2(cp);
        for (const Weight& w : subset)
            CHECK(cp_norm <= ws.gram.norm2(w));
        // Convex combinations on a denominator-6 grid.
        const int steps = 6;
        std::vector<std::vector<int>> lambdas;
        std::vector<int> cur(subset.size(), 0);
        std::function<void(std::size_t, int)> gen = [&](std::size_t i,
                                                        int left) {
            if (i + 1 == cur.size()) {
                cur[i] = left;
                lambdas.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[i] = v;
                gen(i + 1, left - v);
            }
        };
        gen(0, steps);
        for (const auto& lam : lambdas) {
            Weight p(0, 0);
            for (std::size_t i = 0; i < subset.size(); ++i)
                p = p + subset[i] * Rat(lam[i], steps);
            CHECK(cp_norm <= ws.gram.norm2(p));
        }
    }
}

TEST_CASE("index_set of the (3,3) system matches the 12 chamber points") {
    const WeightSystem ws = curve33_weight_system();
    const auto got = index_set(ws, curve33_chamber());
    const std::set<Weight> expected = {
        Weight(0, 0),
        Weight(3, -3),
        Weight(2, -2),
        Weight(1, -1),
        Weight(2, -1),
        Weight(Rat(6, 5), Rat(-3, 5)),
        Weight(Rat(2, 5), Rat(-1, 5)),
        Weight(3, -1),
        Weight(Rat(9, 5), Rat(-3, 5)),
        Weight(Rat(9, 13), Rat(-6, 13)),
        Weight(1, 0),
        Weight(3, 0),
    };
    CHECK(got == expected);
}

TEST_CASE("index_set trivia") {
    WeightSystem single;
    single.weights.push_back({"w", Weight(1, 0), 1});
    CHECK(index_set(single, ChamberDesc::everything()) ==
          std::set<Weight>{Weight(1, 0)});

    const WeightSystem cubics = kirwan::testing::line_system({3, 1, -1, -3});
    ChamberDesc half;
    half.halfspaces.push_back({Rat(1), Rat(0)});
    CHECK(index_set(cubics, half) ==
          std::set<Weight>{Weight(0, 0), Weight(1, 0), Weight(3, 0)});
    // Exhaustive-subset oracle agrees.
    CHECK(index_set_oracle(cubics, half) == index_set(cubics, half));
}

TEST_CASE("index_set equals the all-subsets oracle on the (3,3) system") {
    const WeightSystem ws = curve33_weight_system();
    const ChamberDesc chamber = curve33_chamber();
    CHECK(index_set_oracle(ws, chamber) == index_set(ws, chamber));
}

TEST_CASE("index_set equals the oracle on randomized small systems") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coord(-4, 4);
    std::uniform_int_distribution<int> count(1, 8);
    for (int trial = 0; trial < 25; ++trial) {
        WeightSystem ws;
        std::set<Weight> seen;
        const int m = count(rng);
        while (static_cast<int>(seen.size()) < m) {
            Weight w(coord(rng), coord(rng));
            if (seen.insert(w).second)
                ws.weights.push_back({w.str(), w, 1});
        }
        CHECK(index_set_oracle(ws, ChamberDesc::everything()) ==
              index_set(ws, ChamberDesc::everything()));
    }
}

TEST_CASE("index_set is invariant under positive gram scaling") {
    WeightSystem ws = curve33_weight_system();
    const auto base = index_set(ws, curve33_chamber());
    for (const Rat& s : {Rat(3), Rat(7, 2), Rat(1, 5)}) {
        WeightSystem scaled = ws;
        scaled.gram.a = s;
        scaled.gram.d = s;
        CHECK(scaled.gram.positive_definite());
        CHECK(index_set(scaled, curve33_chamber()) == base);
    }
}

TEST_CASE("n_beta on the (3,3) system") {
    const WeightSystem ws = curve33_weight_system();
    CHECK(n_beta(ws, Weight(3, -3)) == 15);
    CHECK(n_beta(ws, Weight(3, 0)) == 12);
    CHECK(n_beta(ws, Weight(3, -1)) == 14);
    CHECK_THROWS_AS(n_beta(ws, Weight(0, 0)), std::domain_error);
}

TEST_CASE("codim against the unstable-strata table") {
    const WeightSystem ws = curve33_weight_system();
    const std::vector<Weight> roots = {Weight(2, 0), Weight(0, -2)};
    struct Row {
        Weight beta;
        int n, two_d;
    };
    const std::vector<Row> rows = {
        {Weight(3, -3), 15, 26},
        {Weight(2, -2), 13, 22},
        {Weight(1, -1), 10, 16},
        {Weight(2, -1), 12, 20},
        {Weight(Rat(6, 5), Rat(-3, 5)), 10, 16},
        {Weight(Rat(2, 5), Rat(-1, 5)), 8, 12},
        {Weight(3, -1), 14, 24},
        {Weight(Rat(9, 5), Rat(-3, 5)), 11, 18},
        {Weight(Rat(9, 13), Rat(-6, 13)), 9, 14},
        {Weight(3, 0), 12, 22},
        {Weight(1, 0), 8, 14},
    };
    for (const auto& row : rows) {
        CAPTURE(row.beta.str());
        CHECK(n_beta(ws, row.beta) == row.n);
        CHECK(2 * codim(ws, row.beta, roots) == row.two_d);
    }
}

TEST_CASE("wall_support lists the segment weights") {
    const WeightSystem ws = curve33_weight_system();
    auto support_of = [&](const Weight& beta) {
        std::set<Weight> s;
        for (const auto& e : wall_support(ws, beta)) s.insert(e.w);
        return s;
    };
    CHECK(support_of(Weight(2, -2)) ==
          std::set<Weight>{Weight(3, -1), Weight(1, -3)});
    CHECK(support_of(Weight(1, -1)) ==
          std::set<Weight>{Weight(3, 1), Weight(1, -1), Weight(-1, -3)});
    CHECK(support_of(Weight(3, 0)) ==
          std::set<Weight>{Weight(3, -3), Weight(3, -1), Weight(3, 1),
                           Weight(3, 3)});
}

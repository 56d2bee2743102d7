// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amegraph/search.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "amegraph/entanglement.h"
#include "amegraph/error.h"
#include "oracles.h"
#include "test_graphs.h"

namespace amegraph {
namespace {

using testing::c4;
using testing::quad_weighted;
using Key = std::vector<Residue>;

// Smallest key over every relabeling combined with every vertex rescaling.
Key min_class_key(const Graph &g) {
    const std::size_t n = g.size();
    const std::uint32_t p = g.prime().value();
    Key best = g.key();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Graph h = permute(g, perm);
        std::vector<Residue> scale(n, 1);
        while (true) {
            Graph s = h;
            for (std::size_t v = 0; v < n; ++v) {
                if (scale[v] != 1) {
                    s = op_mult(s, v, scale[v]);
                }
            }
            best = std::min(best, s.key());
            std::size_t v = 0;
            while (v < n && ++scale[v] == p) {
                scale[v++] = 1;
            }
            if (v == n) {
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::set<Key> classes(const SearchResult &r) {
    std::set<Key> out;
    for (const Graph &g : r.witnesses) {
        out.insert(min_class_key(g));
    }
    return out;
}

SearchSpec exhaustive(std::size_t n, std::uint32_t p) {
    SearchSpec s;
    s.n = n;
    s.p = p;
    s.mode = SearchMode::kExhaustive;
    return s;
}

TEST(Search, FourQubitsHaveNoAmeGraph) {
    SearchResult r = enumerate(exhaustive(4, 2));
    EXPECT_EQ(r.examined, 64u);
    EXPECT_EQ(r.pruned, 0u);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_TRUE(r.exhaustive);
}

TEST(Search, ExaminedCountsEveryAssignment) {
    SearchSpec s = exhaustive(4, 3);
    s.pruning = {true, true, true};
    SearchResult r = enumerate(s);
    EXPECT_EQ(r.examined, 729u);
    EXPECT_LT(r.examined - r.pruned, 729u);
}

TEST(Search, WitnessesMatchBruteForce) {
    std::set<Key> expected;
    for (const Graph &g : oracle::all_graphs(Prime(3), 4)) {
        if (is_ame(g)) {
            expected.insert(oracle::min_relabeled_key(g));
        }
    }
    std::set<Key> got;
    for (const Graph &g : enumerate(exhaustive(4, 3)).witnesses) {
        EXPECT_TRUE(is_ame(g));
        got.insert(g.key());
    }
    EXPECT_EQ(got, expected);
    EXPECT_TRUE(got.count(canonical_form(quad_weighted()).key()));
}

class PruningClasses : public ::testing::TestWithParam<std::tuple<std::size_t, std::uint32_t>> {};

TEST_P(PruningClasses, EveryLayerKeepsEveryClass) {
    auto [n, p] = GetParam();
    const std::set<Key> reference = classes(enumerate(exhaustive(n, p)));
    for (int mask = 1; mask < 8; ++mask) {
        SearchSpec s = exhaustive(n, p);
        s.pruning = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        SearchResult r = enumerate(s);
        EXPECT_EQ(classes(r), reference) << "mask " << mask;
        for (const Graph &g : r.witnesses) {
            EXPECT_TRUE(is_ame(g));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Small, PruningClasses,
                         ::testing::Values(std::make_tuple(4, 3), std::make_tuple(5, 2), std::make_tuple(4, 5)));

TEST(Search, WorkerCountDoesNotChangeResults) {
    SearchSpec s = exhaustive(5, 3);
    s.pruning = {false, true, true};
    SearchResult one = enumerate(s);
    for (std::size_t w : {2u, 3u, 5u}) {
        s.workers = w;
        SearchResult many = enumerate(s);
        EXPECT_EQ(many.witnesses, one.witnesses) << w;
        EXPECT_EQ(many.examined, one.examined);
        EXPECT_EQ(many.pruned, one.pruned);
    }
}

TEST(Search, UnitWeightsRestrictAlphabet) {
    SearchSpec s = exhaustive(4, 3);
    s.unit_weights = true;
    SearchResult r = enumerate(s);
    EXPECT_EQ(r.examined, 64u);
    for (const Graph &g : r.witnesses) {
        for (const Edge &e : g.edges()) {
            EXPECT_EQ(e.w, 1u);
        }
    }
}

TEST(Search, BudgetIsEnforced) {
    SearchSpec s = exhaustive(6, 3);
    s.budget = 1000;
    EXPECT_THROW(
        {
            try {
                enumerate(s);
            } catch (const Error &e) {
                EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
                throw;
            }
        },
        Error);
}

TEST(Search, MaxWitnessesStopsEarly) {
    SearchSpec s = exhaustive(4, 3);
    s.max_witnesses = 1;
    SearchResult r = enumerate(s);
    EXPECT_EQ(r.witnesses.size(), 1u);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_LT(r.examined, 729u);
}

TEST(Search, GroupedFourSingleQubitsFindsNothing) {
    SearchSpec s = exhaustive(0, 0);
    SearchResult r = grouped_search(4, 1, 2, s);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_EQ(r.examined, 64u);
}

TEST(Search, GroupedTwoSingletonsIsOneEdge) {
    SearchResult r = grouped_search(2, 1, 2, exhaustive(0, 0));
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].edges(), (std::vector<Edge>{{0, 1, 1}}));
}

TEST(Search, RandomFindsNoFourQubitWitness) {
    SearchSpec s;
    s.n = 4;
    s.p = 2;
    s.mode = SearchMode::kRandom;
    s.seed = 3;
    s.samples = 20000;
    SearchResult r = random_search(s);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_EQ(r.examined, 20000u);
}

TEST(Search, GroupedRejectsRelabelingPruning) {
    SearchSpec s = exhaustive(0, 0);
    s.pruning.canonical = true;
    EXPECT_THROW(grouped_search(2, 2, 2, s), Error);
}

TEST(Search, GroupedWitnessesPassPartyCheck) {
    // Two parties of two qubits: the maximally entangled 4-qubit split.
    SearchSpec s = exhaustive(0, 0);
    s.pruning.min_degree = true;
    SearchResult r = grouped_search(2, 2, 2, s);
    ASSERT_FALSE(r.witnesses.empty());
    for (const Graph &g : r.witnesses) {
        EXPECT_TRUE(is_ame_grouped(g, contiguous_groups(2, 2)).is_ame);
    }
    EXPECT_TRUE(std::find(r.witnesses.begin(), r.witnesses.end(), c4()) != r.witnesses.end());
}

TEST(Search, RandomFindsFiveQubitRing) {
    SearchSpec s;
    s.n = 5;
    s.p = 2;
    s.mode = SearchMode::kRandom;
    s.seed = 7;
    s.samples = 100000;
    SearchResult r = random_search(s);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_TRUE(is_ame(r.witnesses[0]));
    // Every AME(5,2) graph is locally equivalent to the five-cycle.
    OrbitResult orbit = lc_orbit(r.witnesses[0], 100000, true);
    EXPECT_FALSE(orbit.truncated);
    const Graph ring = canonical_form(testing::ring(2, 5));
    EXPECT_TRUE(std::any_of(orbit.graphs.begin(), orbit.graphs.end(),
                            [&](const Graph &g) { return canonical_form(g) == ring; }));
}

TEST(Search, RandomIsReproducible) {
    SearchSpec s;
    s.n = 4;
    s.p = 3;
    s.mode = SearchMode::kRandom;
    s.seed = 11;
    s.samples = 5000;
    s.max_witnesses = 3;
    SearchResult a = random_search(s);
    SearchResult b = random_search(s);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.examined, b.examined);
}

TEST(Search, RandomRejectsOrderPruning) {
    SearchSpec s;
    s.n = 4;
    s.p = 3;
    s.mode = SearchMode::kRandom;
    s.pruning.rescale = true;
    EXPECT_THROW(random_search(s), Error);
}

TEST(Search, RescaleNormalForm) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(Prime(3), 5, rng);
        Graph h = rescale_normal_form(g);
        EXPECT_TRUE(is_rescale_normal(h));
        EXPECT_EQ(min_class_key(h), min_class_key(g));
    }
}

TEST(Search, StatsLine) {
    SearchResult r;
    r.examined = 10;
    r.pruned = 4;
    r.seconds = 2;
    r.exhaustive = true;
    EXPECT_EQ(format_stats(r), "examined=10 pruned=4 witnesses=0 rate=5/s exhaustive=yes");
}

}  // namespace
}  // namespace amegraph

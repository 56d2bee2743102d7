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

#include "amegraph/entanglement.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "amegraph/error.h"
#include "oracles.h"
#include "test_graphs.h"

namespace amegraph {
namespace {

using testing::c4;
using testing::quad_weighted;
using testing::ring;

VertexSet complement(const VertexSet &k, std::size_t n) {
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
        if (std::find(k.begin(), k.end(), v) == k.end()) {
            out.push_back(v);
        }
    }
    return out;
}

Rewrite random_rewrite(const Graph &g, std::mt19937_64 &rng) {
    std::uint32_t p = g.prime().value();
    Vertex v = rng() % g.size();
    if (rng() % 2 == 0) {
        return {Rewrite::Kind::kMult, v, Residue(1 + rng() % (p - 1))};
    }
    return {Rewrite::Kind::kStar, v, Residue(rng() % p)};
}

TEST(Combinations, LexOrder) {
    std::vector<VertexSet> c = combinations(4, 2);
    std::vector<VertexSet> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(c, expected);
    EXPECT_EQ(combinations(7, 3).size(), 35u);
    EXPECT_EQ(combinations(3, 0).size(), 1u);
    EXPECT_TRUE(combinations(2, 3).empty());
}

TEST(CutEdits, Examples) {
    EXPECT_EQ(cut_edits(c4(), {0, 3}), 1u);
    EXPECT_EQ(cut_edits(c4(), {0, 1}), 2u);
    Graph empty(Prime(3), 5);
    for (const VertexSet &k : oracle::all_bipartitions(5)) {
        EXPECT_EQ(cut_edits(empty, k), 0u);
    }
}

TEST(CutEdits, RejectsInvalidBipartitions) {
    EXPECT_THROW(cut_edits(c4(), {}), Error);
    EXPECT_THROW(cut_edits(c4(), {0, 1, 2, 3}), Error);
    EXPECT_THROW(cut_edits(c4(), {2, 1}), Error);
}

TEST(CutEdits, MatchesSpanOracle) {
    std::mt19937_64 rng(21);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = oracle::random_graph(Prime(p), 5, rng);
            for (const VertexSet &k : oracle::all_bipartitions(5)) {
                oracle::Rows rows;
                for (Vertex v : k) {
                    auto r = row_restrict(g, v, k);
                    rows.emplace_back(r.entries().begin(), r.entries().end());
                }
                EXPECT_EQ(cut_edits(g, k), oracle::span_rank(rows, p));
            }
        }
    }
}

TEST(CutEdits, ComplementSymmetryAndBounds) {
    std::mt19937_64 rng(22);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng() % 6;
            Graph g = oracle::random_graph(Prime(p), n, rng);
            for (const VertexSet &k : oracle::all_bipartitions(n)) {
                std::size_t r = cut_edits(g, k);
                EXPECT_EQ(r, cut_edits(g, complement(k, n)));
                EXPECT_LE(r, std::min(k.size(), n - k.size()));
            }
        }
    }
}

TEST(CutEdits, InvariantUnderRewrites) {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 2 + rng() % 6;
            Graph g = oracle::random_graph(Prime(p), n, rng);
            Graph h = apply_rewrite(g, random_rewrite(g, rng));
            for (const VertexSet &k : oracle::all_bipartitions(n)) {
                EXPECT_EQ(cut_edits(g, k), cut_edits(h, k));
            }
        }
    }
}

TEST(IsAme, Examples) {
    EXPECT_TRUE(is_ame(quad_weighted()));
    EXPECT_FALSE(is_ame(c4()));
    EXPECT_TRUE(is_ame(ring(2, 5)));
    EXPECT_THROW(is_ame(Graph(Prime(2), 1)), Error);
}

TEST(IsAme, QuadWeightedAtHigherPrimes) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        EXPECT_TRUE(is_ame(quad_weighted(p))) << p;
    }
    // The weight-2 edge coincides with weight 0 at p = 2.
    EXPECT_FALSE(is_ame(Graph::from_edges(Prime(2), 4, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {2, 3, 1}})));
}

TEST(AmeReport, C4WitnessAndFormat) {
    AmeReport r = ame_report(c4());
    EXPECT_FALSE(r.is_ame);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, (VertexSet{0, 3}));
    ASSERT_EQ(r.cuts.size(), 6u);
    EXPECT_EQ(format_report(r),
              "AME no\nWITNESS 1,4\nCUT {1,2} RANK 2\nCUT {1,3} RANK 2\nCUT {1,4} RANK 1\n"
              "CUT {2,3} RANK 1\nCUT {2,4} RANK 2\nCUT {3,4} RANK 2\n");
}

TEST(AmeReport, FullScopeAgreesWithHalfScope) {
    std::mt19937_64 rng(24);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t n = 2 + rng() % 5;
            Graph g = oracle::random_graph(Prime(p), n, rng);
            AmeReport half = ame_report(g, CutScope::kHalf);
            AmeReport all = ame_report(g, CutScope::kAll);
            EXPECT_EQ(half.is_ame, all.is_ame);
            EXPECT_EQ(half.is_ame, is_ame(g));
            EXPECT_EQ(all.cuts.size(), oracle::all_bipartitions(n).size());
        }
    }
}

TEST(AmePredicate, AgreesWithReportOnAllSmallGraphs) {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t n : {2u, 3u, 4u, 5u}) {
            if (p == 3 && n == 5) {
                continue;
            }
            AmePredicate pred(Prime(p), n);
            for (const Graph &g : oracle::all_graphs(Prime(p), n)) {
                EXPECT_EQ(pred(g), ame_report(g).is_ame);
            }
        }
    }
}

TEST(AmePredicate, RandomGraphsAtLargerSizes) {
    std::mt19937_64 rng(25);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t n : {6u, 7u}) {
            AmePredicate pred(Prime(p), n);
            for (int trial = 0; trial < 100; ++trial) {
                Graph g = oracle::random_graph(Prime(p), n, rng);
                EXPECT_EQ(pred(g), ame_report(g).is_ame);
            }
        }
    }
}

TEST(AmePredicate, PackedRowsMatchAdjacency) {
    std::mt19937_64 rng(26);
    AmePredicate pred(Prime(2), 6);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = oracle::random_graph(Prime(2), 6, rng);
        std::vector<std::uint64_t> rows = gf2::pack_rows(g.adjacency());
        EXPECT_EQ(pred.check_packed(rows), pred(g));
    }
}

TEST(Grouped, TwoSingleVertexParties) {
    Graph edge = Graph::from_edges(Prime(2), 2, std::vector<Edge>{{0, 1, 1}});
    EXPECT_TRUE(is_ame_grouped(edge, contiguous_groups(2, 1)).is_ame);
}

TEST(Grouped, SingletonGroupsReduceToPlainCheck) {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(Prime(3), 5, rng);
        AmeReport r = is_ame_grouped(g, contiguous_groups(5, 1));
        EXPECT_EQ(r.is_ame, is_ame(g));
        EXPECT_EQ(AmePredicate(Prime(3), contiguous_groups(5, 1))(g), r.is_ame);
    }
}

TEST(Grouped, PredicateAgreesOnPairs) {
    std::mt19937_64 rng(28);
    auto groups = contiguous_groups(4, 2);
    AmePredicate pred(Prime(2), groups);
    EXPECT_EQ(pred.cut_count(), 3u);
    EXPECT_EQ(is_ame_grouped(Graph(Prime(2), 8), groups).cuts.size(), 3u);
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = oracle::random_graph(Prime(2), 8, rng);
        EXPECT_EQ(pred(g), is_ame_grouped(g, groups).is_ame);
    }
}

TEST(Grouped, RejectsBadGroupings) {
    Graph g(Prime(2), 4);
    auto code = [&](std::vector<VertexSet> groups) {
        try {
            is_ame_grouped(g, groups);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::kInternalError;
    };
    EXPECT_EQ(code({{0, 1}, {2}, {3}}), ErrorCode::kUnequalGroups);
    EXPECT_EQ(code({{0, 1}, {1, 2}}), ErrorCode::kUnequalGroups);
    EXPECT_EQ(code({{0}, {1}}), ErrorCode::kUnequalGroups);
}

TEST(LcOrbit, SingleEdgeIsFixed) {
    Graph edge = Graph::from_edges(Prime(2), 2, std::vector<Edge>{{0, 1, 1}});
    OrbitResult orbit = lc_orbit(edge, 100);
    EXPECT_EQ(orbit.graphs.size(), 1u);
    EXPECT_FALSE(orbit.truncated);
}

TEST(LcOrbit, ContainsThePublishedRewriteSequence) {
    Graph q = quad_weighted();
    Graph target = op_star(op_star(op_star(q, 0, 1), 2, 1), 1, 1);
    OrbitResult orbit = lc_orbit(q, 100000);
    ASSERT_FALSE(orbit.truncated);
    auto it = std::find(orbit.graphs.begin(), orbit.graphs.end(), target);
    ASSERT_NE(it, orbit.graphs.end());
    Graph replay = q;
    for (const Rewrite &r : orbit.path_to(it - orbit.graphs.begin())) {
        replay = apply_rewrite(replay, r);
    }
    EXPECT_EQ(replay, target);
}

TEST(LcOrbit, MembersShareCutRanks) {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {2u, 3u}) {
        Graph g = oracle::random_graph(Prime(p), 5, rng);
        OrbitResult orbit = lc_orbit(g, 2000);
        for (const Graph &h : orbit.graphs) {
            for (const VertexSet &k : oracle::all_bipartitions(5)) {
                ASSERT_EQ(cut_edits(g, k), cut_edits(h, k));
            }
        }
    }
}

TEST(LcOrbit, TruncationFlag) {
    OrbitResult orbit = lc_orbit(quad_weighted(), 5);
    EXPECT_TRUE(orbit.truncated);
    EXPECT_EQ(orbit.graphs.size(), 5u);
}

TEST(LcOrbit, CanonicalCollapseIsNoLarger) {
    OrbitResult exact = lc_orbit(c4(), 10000);
    OrbitResult collapsed = lc_orbit(c4(), 10000, true);
    EXPECT_LE(collapsed.graphs.size(), exact.graphs.size());
    std::set<std::vector<Residue>> classes;
    for (const Graph &h : exact.graphs) {
        classes.insert(canonical_form(h).key());
    }
    EXPECT_EQ(collapsed.graphs.size(), classes.size());
}

TEST(MinEdgeRepresentative, MatchesExhaustiveOrbit) {
    std::vector<Graph> inputs{c4(), quad_weighted(), op_star(quad_weighted(), 0, 2), ring(2, 5)};
    for (const Graph &g : inputs) {
        OrbitResult orbit = lc_orbit(g, 100000);
        ASSERT_FALSE(orbit.truncated);
        std::size_t fewest = g.edge_count();
        for (const Graph &h : orbit.graphs) {
            fewest = std::min(fewest, h.edge_count());
        }
        Graph rep = min_edge_representative(g, 100000);
        EXPECT_EQ(rep.edge_count(), fewest);
        EXPECT_NE(std::find(orbit.graphs.begin(), orbit.graphs.end(), rep), orbit.graphs.end());
    }
}

}  // namespace
}  // namespace amegraph

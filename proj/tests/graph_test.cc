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

#include "amegraph/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "amegraph/error.h"
#include "oracles.h"
#include "test_graphs.h"

namespace amegraph {
namespace {

using testing::c4;
using testing::quad_weighted;

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::kInternalError;
}

TEST(GraphFromEdges, C4Adjacency) {
    Graph g = c4();
    FieldMat expected = FieldMat::from_rows(Prime(2), {{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
    EXPECT_EQ(g.adjacency(), expected);
    EXPECT_EQ(g.edge_count(), 4u);
}

TEST(GraphFromEdges, EmptyEdgeList) {
    Graph g = Graph::from_edges(Prime(3), 3, {});
    EXPECT_TRUE(g.adjacency().is_zero());
}

TEST(GraphFromEdges, ZeroWeightIsDropped) {
    std::vector<Edge> e{{0, 1, 0}, {1, 2, 2}};
    Graph g = Graph::from_edges(Prime(3), 3, e);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphFromEdges, Errors) {
    Prime p(3);
    EXPECT_EQ(code_of([&] {
                  std::vector<Edge> e{{1, 1, 1}};
                  Graph::from_edges(p, 3, e);
              }),
              ErrorCode::kSelfLoop);
    EXPECT_EQ(code_of([&] {
                  std::vector<Edge> e{{0, 1, 1}, {1, 0, 2}};
                  Graph::from_edges(p, 3, e);
              }),
              ErrorCode::kDuplicateEdge);
    EXPECT_EQ(code_of([&] {
                  std::vector<Edge> e{{0, 1, 3}};
                  Graph::from_edges(p, 3, e);
              }),
              ErrorCode::kWeightOutOfRange);
    EXPECT_EQ(code_of([&] {
                  std::vector<Edge> e{{0, 5, 1}};
                  Graph::from_edges(p, 3, e);
              }),
              ErrorCode::kVertexOutOfRange);
}

TEST(GraphCtor, ValidatesAdjacency) {
    EXPECT_EQ(code_of([] { Graph(FieldMat::from_rows(Prime(2), {{1, 0}, {0, 0}})); }), ErrorCode::kSelfLoop);
    EXPECT_THROW(Graph(FieldMat::from_rows(Prime(3), {{0, 1}, {2, 0}})), Error);
}

TEST(RowRestrict, Examples) {
    EXPECT_EQ(row_restrict(c4(), 0, {0, 3}), FieldVec(Prime(2), {1, 1}));
    EXPECT_EQ(row_restrict(quad_weighted(), 3, {0, 3}), FieldVec(Prime(3), {2, 1}));
    EXPECT_TRUE(row_restrict(c4(), 2, {0, 1, 2, 3}).empty());
}

TEST(Truncate, Examples) {
    Graph path = truncate(c4(), {3});
    std::vector<Edge> e{{0, 1, 1}, {0, 2, 1}};
    EXPECT_EQ(path, Graph::from_edges(Prime(2), 3, e));
    EXPECT_EQ(truncate(c4(), {}), c4());
    Graph pair = truncate(c4(), {0, 3});
    EXPECT_EQ(pair.size(), 2u);
    EXPECT_EQ(pair.edge_count(), 0u);
}

TEST(OpMult, Examples) {
    Graph q = quad_weighted();
    EXPECT_EQ(op_mult(q, 2, 1), q);
    Graph m = op_mult(q, 3, 2);
    EXPECT_EQ(m.weight(1, 3), 1u);
    EXPECT_EQ(m.weight(2, 3), 2u);
    EXPECT_EQ(m.weight(0, 1), 1u);
    EXPECT_EQ(op_mult(c4(), 1, 1), c4());
    EXPECT_EQ(code_of([&] { op_mult(q, 0, 0); }), ErrorCode::kInvalidRewrite);
}

TEST(OpStar, Examples) {
    EXPECT_EQ(op_star(quad_weighted(), 1, 0), quad_weighted());
    Graph s = op_star(c4(), 0, 1);
    std::vector<Edge> e{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
    EXPECT_EQ(s, Graph::from_edges(Prime(2), 4, e));
}

TEST(OpStar, IsInvertibleAndKeepsInvariants) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 2 + rng() % 5;
            Graph g = oracle::random_graph(Prime(p), n, rng);
            Vertex v = rng() % n;
            Residue a = rng() % p;
            Graph s = op_star(g, v, a);
            EXPECT_EQ(op_star(s, v, (p - a) % p), g);
            Graph(s.adjacency());  // validates symmetry and the zero diagonal
        }
    }
}

TEST(OpMult, Composes) {
    std::mt19937_64 rng(8);
    Prime p(7);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(p, 5, rng);
        Vertex v = rng() % 5;
        Residue b = 1 + rng() % 6;
        Residue c = 1 + rng() % 6;
        EXPECT_EQ(op_mult(op_mult(g, v, b), v, c), op_mult(g, v, mod_mul(b, c, p)));
    }
}

TEST(ZMeasureSymbolic, Examples) {
    LabeledGraph s(c4());
    LabeledGraph one = z_measure_symbolic(s, {1}, FieldVec(Prime(2), std::vector<Residue>{1}));
    EXPECT_EQ(one.graph, truncate(c4(), {1}));
    EXPECT_EQ(one.z, FieldVec(Prime(2), {1, 0, 1}));

    LabeledGraph zero = z_measure_symbolic(s, {2}, FieldVec(Prime(2), std::vector<Residue>{0}));
    EXPECT_TRUE(zero.z.is_zero());

    LabeledGraph two = z_measure_symbolic(s, {0, 1}, FieldVec(Prime(2), {1, 1}));
    EXPECT_EQ(two.graph.edge_count(), 1u);
    EXPECT_EQ(two.z, FieldVec(Prime(2), {1, 1}));
}

TEST(ZMeasureSymbolic, ZeroOutcomesKeepRestrictedLabel) {
    std::mt19937_64 rng(9);
    Prime p(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(p, 5, rng);
        FieldVec z(p, {Residue(rng() % 3), Residue(rng() % 3), Residue(rng() % 3), Residue(rng() % 3),
                       Residue(rng() % 3)});
        LabeledGraph out = z_measure_symbolic(LabeledGraph(g, z), {1, 3}, FieldVec(p, 2));
        EXPECT_EQ(out.graph, truncate(g, {1, 3}));
        EXPECT_EQ(out.z, FieldVec(p, {z[0], z[2], z[4]}));
    }
}

TEST(Permute, IdentityAndCanonicalForm) {
    std::vector<Vertex> id{0, 1, 2, 3};
    EXPECT_EQ(permute(c4(), id), c4());
    Graph canon = canonical_form(c4());
    std::vector<Vertex> perm{0, 1, 2, 3};
    do {
        EXPECT_EQ(canonical_form(permute(c4(), perm)), canon);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Permute, TwoLabelingsOfTheFourCycle) {
    std::vector<Edge> other{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
    EXPECT_EQ(canonical_form(Graph::from_edges(Prime(2), 4, other)), canonical_form(c4()));
}

TEST(CanonicalForm, MatchesBruteForceOracle) {
    std::mt19937_64 rng(10);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 2 + rng() % 5;
            Graph g = oracle::random_graph(Prime(p), n, rng);
            Graph c = canonical_form(g);
            EXPECT_EQ(c.key(), oracle::min_relabeled_key(g));
            EXPECT_TRUE(is_canonical(c));
            EXPECT_EQ(is_canonical(g), g.key() == c.key());
        }
    }
}

TEST(TextFormat, RoundTrip) {
    Graph q = quad_weighted();
    EXPECT_EQ(to_text(q), "3 4\n1 2 1\n1 3 1\n2 4 2\n3 4 1\n");
    EXPECT_EQ(parse_graph(to_text(q)), q);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(Prime(5), 1 + rng() % 6, rng);
        EXPECT_EQ(parse_graph(to_text(g)), g);
    }
}

TEST(TextFormat, CommentsAndErrors) {
    EXPECT_EQ(parse_graph("# hi\n\n2 4\n1 2 1\n# c\n1 3 1\n2 4 1\n3 4 1\n"), c4());
    EXPECT_EQ(code_of([] { parse_graph("2 4\n1 1 1\n"); }), ErrorCode::kParseError);
    EXPECT_EQ(code_of([] { parse_graph("4 4\n"); }), ErrorCode::kParseError);
    EXPECT_EQ(code_of([] { parse_graph("2 4\n1 2\n"); }), ErrorCode::kParseError);
    EXPECT_EQ(code_of([] { parse_graph("2 x\n"); }), ErrorCode::kParseError);
    EXPECT_EQ(code_of([] { parse_graph(""); }), ErrorCode::kParseError);
}

TEST(TextFormat, MultipleBlocks) {
    std::string text = to_text(c4()) + "\n" + to_text(quad_weighted());
    std::vector<Graph> gs = parse_graphs(text);
    ASSERT_EQ(gs.size(), 2u);
    EXPECT_EQ(gs[0], c4());
    EXPECT_EQ(gs[1], quad_weighted());
}

TEST(Export, CircuitAndDot) {
    EXPECT_EQ(to_circuit(quad_weighted()), "PREP_ALL |0bar>\nCZ 1 2 ^1\nCZ 1 3 ^1\nCZ 2 4 ^2\nCZ 3 4 ^1\n");
    EXPECT_EQ(to_circuit(Graph(Prime(2), 3)), "PREP_ALL |0bar>\n");
    std::string dot = to_dot(quad_weighted());
    EXPECT_NE(dot.find("2 -- 4 [label=\"2\"]"), std::string::npos);
}

TEST(VertexSetText, RoundTrip) {
    EXPECT_EQ(format_vertex_set({0, 3}), "1,4");
    EXPECT_EQ(parse_vertex_set("1,4", 4), (VertexSet{0, 3}));
    EXPECT_THROW(parse_vertex_set("0", 4), Error);
    EXPECT_THROW(parse_vertex_set("5", 4), Error);
}

}  // namespace
}  // namespace amegraph

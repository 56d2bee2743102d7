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

#include "amegraph/composite.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "amegraph/error.h"
#include "amegraph/simulator.h"
#include "test_graphs.h"

namespace amegraph {
namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::kInternalError;
}

std::string data_path(const std::string &rel) {
    return std::string(AMEGRAPH_TEST_DATA_DIR) + "/data/" + rel;
}

// Dense entropy in edits on every half cut equals the cut size.
void expect_dense_ame(const Graph &g) {
    StateVector s = build_graph_state(g);
    for (const VertexSet &k : combinations(g.size(), g.size() / 2)) {
        EXPECT_NEAR(cut_entropy(s, k), static_cast<double>(k.size()), 1e-6) << format_vertex_set(k);
    }
}

TEST(Factorize, Examples) {
    EXPECT_EQ(factorize(6), (std::vector<std::uint32_t>{2, 3}));
    EXPECT_EQ(factorize(4), (std::vector<std::uint32_t>{2, 2}));
    EXPECT_EQ(factorize(12), (std::vector<std::uint32_t>{2, 2, 3}));
    EXPECT_EQ(factorize(97), (std::vector<std::uint32_t>{97}));
    EXPECT_EQ(code_of([] { factorize(1); }), ErrorCode::kInvalidArgument);
}

TEST(Factorize, ProductRestoresInput) {
    for (std::uint64_t d = 2; d < 2000; ++d) {
        std::vector<std::uint32_t> f = factorize(d);
        EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
        EXPECT_EQ(std::accumulate(f.begin(), f.end(), std::uint64_t{1}, std::multiplies<>()), d);
        for (std::uint32_t p : f) {
            EXPECT_TRUE(is_prime(p));
        }
    }
}

TEST(Witnesses, BuiltinsMatchDataFiles) {
    for (const std::string &name : builtin_witness_names()) {
        EXPECT_EQ(builtin_witness_text(name), read_text_file(data_path("witnesses/" + name + ".graph"))) << name;
    }
    EXPECT_EQ(code_of([] { builtin_witness("nope"); }), ErrorCode::kInvalidArgument);
}

TEST(Witnesses, BuiltinsPassRankAndDenseChecks) {
    EXPECT_EQ(builtin_witness("c5"), testing::ring(2, 5));
    EXPECT_EQ(builtin_witness("quad_weighted"), testing::quad_weighted());
    for (const char *name : {"c5", "quad_weighted", "ame6_2", "ame7_3"}) {
        Graph g = builtin_witness(name);
        EXPECT_TRUE(is_ame(g)) << name;
        expect_dense_ame(g);
    }
    Graph grouped = builtin_witness("grouped_ame4x2_2");
    EXPECT_TRUE(is_ame_grouped(grouped, contiguous_groups(4, 2)).is_ame);
    EXPECT_FALSE(is_ame(grouped));
}

TEST(Registry, LiftsAcrossPrimes) {
    WitnessRegistry r = WitnessRegistry::builtin();
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        std::optional<Graph> c5 = r.find(Prime(p), 5);
        ASSERT_TRUE(c5) << p;
        EXPECT_EQ(c5->prime().value(), p);
        EXPECT_TRUE(is_ame(*c5));
    }
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        ASSERT_TRUE(r.find(Prime(p), 4)) << p;
    }
    EXPECT_FALSE(r.find(Prime(2), 4));
    EXPECT_TRUE(r.find(Prime(2), 6));
    EXPECT_FALSE(r.find(Prime(2), 7));
    EXPECT_TRUE(r.find(Prime(3), 7));
    EXPECT_TRUE(r.find(Prime(2), 4, 2));
}

TEST(Registry, RejectsNonWitness) {
    WitnessRegistry r;
    EXPECT_EQ(code_of([&] { r.add(testing::c4()); }), ErrorCode::kNotAme);
    EXPECT_EQ(code_of([&] { r.add(testing::c4(), 3); }), ErrorCode::kUnequalGroups);
    EXPECT_NO_THROW(r.add(testing::c4(), 2));
}

TEST(Composite, FiveSixFromTwoCycles) {
    CompositeAme c = build_composite(5, 6, WitnessRegistry::builtin());
    EXPECT_EQ(c.parties, 5u);
    EXPECT_EQ(c.d, 6u);
    ASSERT_EQ(c.factors.size(), 2u);
    EXPECT_EQ(c.factors[0].p.value(), 2u);
    EXPECT_EQ(c.factors[1].p.value(), 3u);
    CompositeReport r = verify_composite(c);
    EXPECT_TRUE(r.is_ame);
    EXPECT_EQ(r.cuts.size(), 10u);
    for (const PartyCut &cut : r.cuts) {
        EXPECT_EQ(cut.ranks, (std::vector<std::size_t>{2, 2}));
        EXPECT_NEAR(cut.bits, 2 * std::log2(6.0), 1e-12);
        EXPECT_NEAR(cut.bits, cut.max_bits, 1e-12);
    }
}

TEST(Composite, FourFourUsesGroupedWitness) {
    CompositeAme c = build_composite(4, 4, WitnessRegistry::builtin());
    ASSERT_EQ(c.factors.size(), 1u);
    EXPECT_EQ(c.factors[0].group_size, 2u);
    CompositeReport r = verify_composite(c);
    EXPECT_TRUE(r.is_ame);
    ASSERT_EQ(r.cuts.size(), 3u);
    for (const PartyCut &cut : r.cuts) {
        EXPECT_EQ(cut.ranks, std::vector<std::size_t>{4});
    }
    ASSERT_TRUE(r.factors[0].ungrouped);
    EXPECT_FALSE(r.factors[0].ungrouped->is_ame);
    ASSERT_TRUE(r.factors[0].ungrouped->witness);
    EXPECT_EQ(r.factors[0].ungrouped->witness->size(), 4u);
}

TEST(Composite, MissingWitness) {
    WitnessRegistry r = WitnessRegistry::builtin();
    EXPECT_EQ(code_of([&] { build_composite(4, 2, r); }), ErrorCode::kMissingWitness);
    EXPECT_EQ(code_of([&] { build_composite(4, 8, r); }), ErrorCode::kMissingWitness);
    EXPECT_EQ(code_of([&] { build_composite(7, 6, r); }), ErrorCode::kMissingWitness);
}

TEST(Composite, RepeatedPrimeWithUngroupedWitness) {
    CompositeAme c = build_composite(4, 9, WitnessRegistry::builtin());
    ASSERT_EQ(c.factors.size(), 2u);
    EXPECT_EQ(c.factors[0].group_size, 1u);
    EXPECT_TRUE(verify_composite(c).is_ame);
}

TEST(Composite, SingleFactorMatchesPlainCheck) {
    for (const Graph &g : {testing::quad_weighted(), testing::c4().with_prime(Prime(3))}) {
        CompositeAme c = make_composite({{g.prime(), g, 1}});
        EXPECT_EQ(verify_composite(c).is_ame, is_ame(g));
    }
}

TEST(Composite, FactorOrderDoesNotMatter) {
    Graph c5_2 = testing::ring(2, 5);
    Graph c5_3 = testing::ring(3, 5);
    CompositeAme a = make_composite({{Prime(2), c5_2, 1}, {Prime(3), c5_3, 1}});
    CompositeAme b = make_composite({{Prime(3), c5_3, 1}, {Prime(2), c5_2, 1}});
    EXPECT_EQ(format_composite_report(a, verify_composite(a)), format_composite_report(b, verify_composite(b)));
}

TEST(Composite, RejectsMismatchedFactors) {
    EXPECT_EQ(code_of([] { make_composite({}); }), ErrorCode::kInvalidInput);
    EXPECT_EQ(code_of([] {
                  make_composite({{Prime(2), testing::ring(2, 5), 1}, {Prime(3), testing::quad_weighted(), 1}});
              }),
              ErrorCode::kInvalidInput);
    EXPECT_EQ(code_of([] { make_composite({{Prime(3), testing::ring(2, 5), 1}}); }), ErrorCode::kInvalidInput);
}

// Dense tensor product of the factor states, reordered so that each party's
// qudits are adjacent, has party-cut entropy equal to the summed ranks.
TEST(Composite, DenseEntropyIsAdditive) {
    WitnessRegistry reg = WitnessRegistry::builtin();
    for (std::uint64_t d : {4u, 9u}) {
        CompositeAme c = build_composite(4, d, reg);
        StateVector s = build_graph_state(c.factors[0].graph);
        for (std::size_t f = 1; f < c.factors.size(); ++f) {
            s = tensor(s, build_graph_state(c.factors[f].graph));
        }
        const double log_p = std::log2(static_cast<double>(c.factors[0].p.value()));
        for (const PartyCut &cut : verify_composite(c).cuts) {
            VertexSet k;
            std::size_t offset = 0;
            for (const CompositeFactor &f : c.factors) {
                for (Vertex party : cut.parties) {
                    for (std::size_t t = 0; t < f.group_size; ++t) {
                        k.push_back(offset + party * f.group_size + t);
                    }
                }
                offset += f.graph.size();
            }
            std::sort(k.begin(), k.end());
            EXPECT_NEAR(cut_entropy(s, k) * log_p, cut.bits, 1e-6);
            EXPECT_NEAR(cut.bits, cut.max_bits, 1e-12);
        }
    }
}

TEST(Manifest, ReadsShippedFiles) {
    CompositeAme four = read_manifest_file(data_path("composite/ame4_4.manifest"));
    EXPECT_EQ(four.parties, 4u);
    EXPECT_EQ(four.d, 4u);
    EXPECT_TRUE(verify_composite(four).is_ame);
    CompositeAme six = read_manifest_file(data_path("composite/ame5_6.manifest"));
    EXPECT_EQ(six.d, 6u);
    EXPECT_TRUE(verify_composite(six).is_ame);
}

TEST(Manifest, RejectsMalformedLines) {
    for (const char *text : {"factor 2 builtin:c5", "factor 4 builtin:c5 groupsize 1", "factr 2 builtin:c5 groupsize 1",
                             "factor 2 builtin:c5 groupsize 1 extra", "factor 2 builtin:c5 groupsize 0",
                             "factor 2 builtin:c5 groupsize 1\nfactor 3 builtin:quad_weighted groupsize 1"}) {
        EXPECT_EQ(code_of([&] { parse_manifest(text, "."); }), ErrorCode::kParseError) << text;
    }
}

TEST(Manifest, ReportFormat) {
    CompositeAme c = read_manifest_file(data_path("composite/ame4_4.manifest"));
    std::string report = format_composite_report(c, verify_composite(c));
    EXPECT_EQ(report.substr(0, report.find('\n')), "COMPOSITE n=4 d=4 factors=2^2");
    EXPECT_NE(report.find("FACTOR p=2 groupsize=2 AME yes\n"), std::string::npos);
    EXPECT_NE(report.find("PARTYCUT {1,2} RANKS 4 BITS 4.000000 OF 4.000000\n"), std::string::npos);
    EXPECT_NE(report.find("UNGROUPED p=2 AME no WITNESS "), std::string::npos);
    EXPECT_EQ(report.substr(report.size() - 8), "AME yes\n");
}

}  // namespace
}  // namespace amegraph

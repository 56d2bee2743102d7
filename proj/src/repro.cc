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

#include "amegraph/repro.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "amegraph/codes.h"
#include "amegraph/composite.h"
#include "amegraph/entanglement.h"
#include "amegraph/error.h"
#include "amegraph/qss.h"
#include "amegraph/search.h"
#include "amegraph/simulator.h"
#include "amegraph/stabilizer.h"

namespace amegraph {

namespace {

constexpr double kTol = 1e-9;

template <typename T>
std::string kv(const std::string &key, const T &value) {
    std::ostringstream out;
    out << key << '=' << value;
    return out.str();
}

std::string sci(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(1) << v;
    return out.str();
}

// Visits every graph on n vertices in key order.
void for_each_graph(Prime p, std::size_t n, const std::function<void(const Graph &)> &f) {
    const std::size_t edges = n * (n - 1) / 2;
    std::vector<Residue> key(edges, 0);
    while (true) {
        FieldMat a(p, n, n);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++t) {
                a.set(i, j, key[t]);
                a.set(j, i, key[t]);
            }
        }
        f(Graph(std::move(a)));
        std::size_t e = edges;
        while (e > 0 && ++key[e - 1] == p.value()) {
            key[--e] = 0;
        }
        if (e == 0) {
            return;
        }
    }
}

Graph random_graph(Prime p, std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Residue> w(0, p.value() - 1);
    FieldMat a(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Residue x = w(rng);
            a.set(i, j, x);
            a.set(j, i, x);
        }
    }
    return Graph(std::move(a));
}

// Every nonempty proper subset, as bitmasks 1 .. 2^n - 2.
std::vector<VertexSet> bipartitions(std::size_t n) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet k;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1) {
                k.push_back(v);
            }
        }
        out.push_back(std::move(k));
    }
    return out;
}

// Largest |cut rank - dense entropy| over every bipartition.
double rank_entropy_gap(const Graph &g) {
    StateVector s = build_graph_state(g);
    double worst = 0;
    for (const VertexSet &k : bipartitions(g.size())) {
        worst = std::max(worst, std::abs(static_cast<double>(cut_edits(g, k)) - cut_entropy(s, k)));
    }
    return worst;
}

// Dense entropy on every bipartition equals min(|K|, n - |K|).
bool dense_ame(const Graph &g) {
    StateVector s = build_graph_state(g);
    for (const VertexSet &k : bipartitions(g.size())) {
        double target = static_cast<double>(std::min(k.size(), g.size() - k.size()));
        if (std::abs(cut_entropy(s, k) - target) > 1e-6) {
            return false;
        }
    }
    return true;
}

std::vector<VertexSet> subsets_of(const VertexSet &pool, std::size_t k) {
    std::vector<VertexSet> out;
    for (const VertexSet &idx : combinations(pool.size(), k)) {
        VertexSet s;
        for (std::size_t i : idx) {
            s.push_back(pool[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

SearchSpec random_spec(std::size_t n, std::uint32_t p, std::uint64_t seed, std::uint64_t samples) {
    SearchSpec s;
    s.n = n;
    s.p = p;
    s.mode = SearchMode::kRandom;
    s.seed = seed;
    s.samples = samples;
    return s;
}

void within(CriterionResult &r, double limit_seconds) {
    r.details.push_back(kv("limit_s", limit_seconds));
    if (r.seconds > limit_seconds) {
        r.pass = false;
    }
}

// --- criteria -------------------------------------------------------------

void rank_entropy_equivalence(CriterionResult &r, const ReproOptions &o) {
    std::size_t graphs = 0;
    double worst = 0;
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t n = 2; n <= 5; ++n) {
            for_each_graph(Prime(p), n, [&](const Graph &g) {
                worst = std::max(worst, rank_entropy_gap(g));
                ++graphs;
            });
        }
    }
    std::mt19937_64 rng(o.seed * 1000 + 1);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 500; ++t) {
            worst = std::max(worst, rank_entropy_gap(random_graph(Prime(p), 6, rng)));
            ++graphs;
        }
    }
    r.details = {kv("graphs", graphs), kv("max_gap", sci(worst))};
    r.pass = worst <= 1e-6;
}

void exhaustive_nonexistence(CriterionResult &r, std::size_t n, std::uint64_t expected_examined) {
    SearchSpec s;
    s.n = n;
    s.p = 2;
    s.mode = SearchMode::kExhaustive;
    SearchResult res = enumerate(s);
    r.details = {kv("examined", res.examined), kv("witnesses", res.witnesses.size()),
                 kv("rate_per_min", sci(res.rate() * 60))};
    r.pass = res.examined == expected_examined && res.witnesses.empty() && res.exhaustive;
    if (res.rate() * 60 < 1e6) {
        r.warnings.push_back("throughput below 1e6 checks per minute");
    }
}

void quad_weighted_and_c4(CriterionResult &r, const ReproOptions &) {
    Graph quad = builtin_witness("quad_weighted");
    r.pass = true;
    std::string primes;
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        bool ok = is_ame(quad.with_prime(Prime(p)));
        r.pass = r.pass && ok;
        primes += (primes.empty() ? "" : ",") + std::to_string(p) + (ok ? ":yes" : ":no");
    }
    Graph c4 = Graph::from_edges(Prime(2), 4, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    AmeReport rep = ame_report(c4);
    std::size_t rank = cut_edits(c4, {0, 3});
    r.pass = r.pass && !rep.is_ame && rep.witness == VertexSet{0, 3} && rank == 1;
    r.details = {kv("quad_weighted", primes), kv("c4_witness", rep.witness ? format_vertex_set(*rep.witness) : "none"),
                 kv("c4_rank", rank)};
}

void discriminator(CriterionResult &r, const ReproOptions &) {
    FieldMat m5 = FieldMat::from_rows(Prime(5), {{2, 3}, {3, 1}});
    FieldMat m7 = FieldMat::from_rows(Prime(7), {{2, 3}, {3, 1}});
    std::size_t r5 = mat_rank(m5);
    std::size_t r7 = mat_rank(m7);
    r.details = {kv("rank_mod5", r5), kv("rank_mod7", r7)};
    r.pass = r5 == 2 && r7 == 1;
}

void mds_pipeline(CriterionResult &r, const ReproOptions &) {
    const Prime p(3);
    LinearCode code = hamming433();
    GeneratorMatrix m = ame_generator_matrix(code);
    FieldMat expected = FieldMat::from_rows(p, {{1, 0, 1, 2, 0, 0, 0, 0},
                                                {0, 1, 1, 1, 0, 0, 0, 0},
                                                {0, 0, 0, 0, 1, 0, 1, 2},
                                                {0, 0, 0, 0, 0, 1, 1, 1}});
    bool matrix_ok = m.block() == expected;
    Graph g = to_graph(m).graph;
    bool graph_ok = is_ame(g);

    // Uniform superposition of the nine codewords.
    std::vector<Complex> amps(81, Complex(0));
    for (Residue a = 0; a < 3; ++a) {
        for (Residue b = 0; b < 3; ++b) {
            FieldVec w = code.encode(FieldVec(p, std::vector<Residue>{a, b}));
            std::size_t idx = 0;
            for (std::size_t i = 4; i-- > 0;) {
                idx = idx * 3 + w[i];
            }
            amps[idx] = 1.0 / 3.0;
        }
    }
    StateVector s(p, 4, amps);
    FieldMat h = parity_check(code);
    std::size_t checked = 0;
    double worst = 0;
    for (std::size_t u = 0; u < 9; ++u) {
        FieldVec v(p, std::vector<Residue>{static_cast<Residue>(u % 3), static_cast<Residue>(u / 3)});
        std::vector<Residue> zero(4, 0);
        FieldVec x_part = code.generator() * v;
        FieldVec z_part = h.transpose() * v;
        std::vector<Residue> xa(x_part.entries().begin(), x_part.entries().end());
        std::vector<Residue> zb(z_part.entries().begin(), z_part.entries().end());
        worst = std::max(worst, std::abs(inner(s, apply_pauli(s, xa, zero)) - Complex(1)));
        worst = std::max(worst, std::abs(inner(s, apply_pauli(s, zero, zb)) - Complex(1)));
        checked += 2;
    }
    r.details = {kv("matrix", matrix_ok ? "exact" : "mismatch"), kv("graph_ame", graph_ok ? "yes" : "no"),
                 kv("stabilizers", checked), kv("max_dev", sci(worst))};
    r.pass = matrix_ok && graph_ok && worst <= kTol;
}

void rewrite_invariance(CriterionResult &r, const ReproOptions &o) {
    std::mt19937_64 rng(o.seed * 1000 + 7);
    const std::uint32_t primes[] = {2, 3, 5};
    std::size_t mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        Prime p(primes[rng() % 3]);
        std::size_t n = 2 + rng() % 6;
        Graph g = random_graph(p, n, rng);
        Rewrite rw{rng() % 2 ? Rewrite::Kind::kMult : Rewrite::Kind::kStar, static_cast<Vertex>(rng() % n),
                   static_cast<Residue>(1 + rng() % (p.value() - 1))};
        std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << n) - 2);
        VertexSet k;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1) {
                k.push_back(v);
            }
        }
        if (cut_edits(g, k) != cut_edits(apply_rewrite(g, rw), k)) {
            ++mismatches;
        }
    }
    r.details = {kv("triples", 1000), kv("mismatches", mismatches)};
    r.pass = mismatches == 0;
}

void z_measurement(CriterionResult &r, const ReproOptions &) {
    std::size_t cases = 0;
    double prob_gap = 0;
    double min_overlap = 1;
    for (std::uint32_t pv : {2u, 3u}) {
        Prime p(pv);
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<VertexSet> sets = combinations(n, 1);
            if (n >= 2) {
                for (VertexSet &k : combinations(n, 2)) {
                    sets.push_back(std::move(k));
                }
            }
            for_each_graph(p, n, [&](const Graph &g) {
                StateVector s = build_graph_state(g);
                for (const VertexSet &k : sets) {
                    const std::size_t outcomes = k.size() == 1 ? pv : pv * pv;
                    for (std::size_t o = 0; o < outcomes; ++o) {
                        std::vector<Residue> out{static_cast<Residue>(o % pv)};
                        if (k.size() == 2) {
                            out.push_back(static_cast<Residue>(o / pv));
                        }
                        Measured m = z_measure_dense(s, k, out);
                        LabeledGraph sym = z_measure_symbolic(LabeledGraph(g), k, FieldVec(p, out));
                        prob_gap = std::max(prob_gap, std::abs(m.probability - 1.0 / static_cast<double>(outcomes)));
                        if (sym.graph.size() > 0) {
                            min_overlap = std::min(min_overlap, std::abs(inner(m.state, build_labeled(sym))));
                        }
                        ++cases;
                    }
                }
            });
        }
    }
    r.details = {kv("cases", cases), kv("max_prob_gap", sci(prob_gap)), kv("min_overlap_gap", sci(1 - min_overlap))};
    r.pass = prob_gap <= kTol && min_overlap >= 1 - kTol;
}

void threshold_qss(CriterionResult &r, const ReproOptions &o) {
    std::mt19937_64 rng(o.seed * 1000 + 9);
    SearchResult found = random_search(random_spec(6, 2, o.seed, 1000000));
    if (found.witnesses.empty()) {
        r.details = {"ame6_2=not_found"};
        r.pass = false;
        return;
    }
    double worst_fidelity = 1;
    double worst_leak = 0;
    std::size_t runs = 0;
    for (const Graph &g : {builtin_witness("quad_weighted"), found.witnesses[0]}) {
        ThresholdScheme t(g);
        const std::uint32_t p = g.prime().value();
        const std::size_t m = t.threshold();
        std::vector<Secret> secrets;
        for (int i = 0; i < 20; ++i) {
            secrets.push_back(random_secret(p, rng));
        }
        for (const VertexSet &b : subsets_of(t.players(), m)) {
            for (Residue gg = 0; gg < p; ++gg) {
                for (Residue hh = 0; hh < p; ++hh) {
                    for (const Secret &s : secrets) {
                        worst_fidelity = std::min(worst_fidelity, run_threshold(t, s, b, {gg, hh}));
                        ++runs;
                    }
                }
            }
        }
        for (const VertexSet &f : subsets_of(t.players(), m - 1)) {
            worst_leak = std::max(worst_leak, audit_forbidden(t.as_ramp(), f, 20, rng()));
        }
    }
    r.details = {kv("runs", runs), kv("min_fidelity_gap", sci(1 - worst_fidelity)), kv("max_leak", sci(worst_leak))};
    r.pass = worst_fidelity >= 1 - kTol && worst_leak <= kTol;
}

void ramp_qss(CriterionResult &r, const ReproOptions &o) {
    std::mt19937_64 rng(o.seed * 1000 + 10);
    RampScheme scheme(builtin_witness("ame6_2"), {0, 1});
    double worst_fidelity = 1;
    std::size_t runs = 0;
    for (const VertexSet &b : subsets_of(scheme.players(), 3)) {
        for (int i = 0; i < 20; ++i) {
            worst_fidelity = std::min(worst_fidelity, run_ramp(scheme, random_secret(4, rng), b));
            ++runs;
        }
    }
    double worst_leak = 0;
    for (Vertex v : scheme.players()) {
        worst_leak = std::max(worst_leak, audit_forbidden(scheme, {v}, 20, rng()));
    }
    r.details = {"scheme=(3,2,4)", kv("runs", runs), kv("min_fidelity_gap", sci(1 - worst_fidelity)),
                 kv("max_leak", sci(worst_leak))};
    r.pass = worst_fidelity >= 1 - kTol && worst_leak <= kTol;
}

void composite_grouping(CriterionResult &r, const ReproOptions &) {
    CompositeAme c = build_composite(4, 4, WitnessRegistry::builtin());
    CompositeReport rep = verify_composite(c);
    bool cuts_ok = rep.cuts.size() == 3 && std::all_of(rep.cuts.begin(), rep.cuts.end(), [](const PartyCut &cut) {
                       return cut.ranks == std::vector<std::size_t>{4};
                   });
    const std::optional<AmeReport> &flat = rep.factors.at(0).ungrouped;
    bool flat_fails = flat && !flat->is_ame && flat->witness && flat->witness->size() == 4;
    r.details = {kv("party_cuts", rep.cuts.size()), kv("party_ranks", cuts_ok ? "all4" : "deficient"),
                 kv("ungrouped_witness", flat && flat->witness ? format_vertex_set(*flat->witness) : "none")};
    r.pass = rep.is_ame && cuts_ok && flat_fails;
}

void witness_discovery(CriterionResult &r, const ReproOptions &o) {
    struct Target {
        std::size_t n;
        std::uint32_t p;
        std::uint64_t samples;
    };
    r.pass = true;
    for (const Target &t : {Target{5, 2, 1000000}, Target{6, 2, 1000000}, Target{7, 3, 100000000}}) {
        SearchResult res = random_search(random_spec(t.n, t.p, o.seed, t.samples));
        std::string label = "ame" + std::to_string(t.n) + "_" + std::to_string(t.p);
        if (res.witnesses.empty()) {
            r.details.push_back(kv(label, "not_found"));
            r.pass = false;
            continue;
        }
        const Graph &g = res.witnesses[0];
        bool verified = is_ame(g);
        if (capped_power(g.prime(), g.size(), kDefaultAmplitudeCap) <= kDefaultAmplitudeCap) {
            verified = verified && dense_ame(g) && rank_entropy_gap(g) <= 1e-6;
        }
        r.details.push_back(kv(label, std::to_string(res.examined) + "_samples" + (verified ? "" : "_unverified")));
        r.pass = r.pass && verified;
    }
}

struct Criterion {
    const char *name;
    double limit_seconds;
    void (*run)(CriterionResult &, const ReproOptions &);
};

const Criterion kCriteria[kCriterionCount] = {
    {"rank-entropy-equivalence", 300, rank_entropy_equivalence},
    {"four-qubit-nonexistence", 1, [](CriterionResult &r, const ReproOptions &) { exhaustive_nonexistence(r, 4, 64); }},
    {"seven-qubit-nonexistence", 120,
     [](CriterionResult &r, const ReproOptions &) { exhaustive_nonexistence(r, 7, 2097152); }},
    {"weighted-square-and-c4", 0, quad_weighted_and_c4},
    {"prime-discriminator", 0, discriminator},
    {"mds-pipeline", 10, mds_pipeline},
    {"rewrite-invariance", 0, rewrite_invariance},
    {"z-measurement", 0, z_measurement},
    {"threshold-sharing", 180, threshold_qss},
    {"ramp-sharing", 120, ramp_qss},
    {"composite-grouping", 0, composite_grouping},
    {"witness-discovery", 0, witness_discovery},
};

}  // namespace

CriterionResult run_criterion(int id, const ReproOptions &options) {
    if (id < 1 || id > kCriterionCount) {
        throw Error(ErrorCode::kInvalidArgument, "criterion must be between 1 and " + std::to_string(kCriterionCount));
    }
    const Criterion &c = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = c.name;
    if (options.quick && id == 3) {
        r.skipped = true;
        r.pass = true;
        r.details = {"quick=yes"};
        return r;
    }
    auto start = std::chrono::steady_clock::now();
    try {
        c.run(r, options);
    } catch (const Error &e) {
        r.pass = false;
        r.details.push_back(std::string("error=") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) {
        within(r, c.limit_seconds);
    }
    return r;
}

std::vector<CriterionResult> run_all(const ReproOptions &options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, options));
    }
    return out;
}

std::string format_result(const CriterionResult &r, bool timing) {
    std::ostringstream out;
    out << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ':';
    for (const std::string &d : r.details) {
        out << ' ' << d;
    }
    if (timing && !r.skipped) {
        out << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
    }
    for (const std::string &w : r.warnings) {
        out << "\nWARN " << r.id << ' ' << w;
    }
    return out.str();
}

}  // namespace amegraph

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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "amegraph/codes.h"
#include "amegraph/composite.h"
#include "amegraph/entanglement.h"
#include "amegraph/error.h"
#include "amegraph/graph.h"
#include "amegraph/qss.h"
#include "amegraph/repro.h"
#include "amegraph/search.h"
#include "amegraph/simulator.h"
#include "amegraph/stabilizer.h"

namespace amegraph::cli {

namespace {

constexpr double kTol = 1e-9;

// "builtin:NAME" or a path.
Graph load_graph(const std::string &spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        return builtin_witness(spec.substr(8));
    }
    return read_graph_file(spec);
}

bool fits_dense(const Graph &g) {
    return capped_power(g.prime(), g.size(), kDefaultAmplitudeCap) <= kDefaultAmplitudeCap;
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

// Deviation from an ideal value, printed as "<1e-9" inside tolerance so that
// reports are platform independent.
std::string deviation(double d) {
    if (d <= kTol) {
        return "<1e-9";
    }
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << d;
    return out.str();
}

bool is_usage_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::kParseError:
        case ErrorCode::kInvalidArgument:
        case ErrorCode::kInvalidInput:
        case ErrorCode::kNotPrime:
        case ErrorCode::kSelfLoop:
        case ErrorCode::kDuplicateEdge:
        case ErrorCode::kWeightOutOfRange:
        case ErrorCode::kVertexOutOfRange:
        case ErrorCode::kUnequalGroups:
        case ErrorCode::kDimensionMismatch:
        case ErrorCode::kTooLarge:
            return true;
        default:
            return false;
    }
}

void write_or_print(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    }
}

// --- verify / entropy / export ----------------------------------------------

struct VerifyArgs {
    std::string graph;
    bool oracle = false;
    bool all_cuts = false;
    std::size_t group_size = 1;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    Graph g = load_graph(a.graph);
    AmeReport report;
    if (a.group_size > 1) {
        if (g.size() % a.group_size != 0) {
            throw Error(ErrorCode::kUnequalGroups, "vertex count must be a multiple of the group size");
        }
        report = is_ame_grouped(g, contiguous_groups(g.size() / a.group_size, a.group_size));
    } else {
        report = ame_report(g, a.all_cuts ? CutScope::kAll : CutScope::kHalf);
    }
    out << format_report(report);
    bool ok = report.is_ame;
    if (a.oracle) {
        if (!fits_dense(g)) {
            out << "ORACLE skipped p^n exceeds " << kDefaultAmplitudeCap << '\n';
        } else {
            StateVector s = build_graph_state(g);
            double worst = 0;
            for (const CutRank &c : report.cuts) {
                worst = std::max(worst, std::abs(cut_entropy(s, c.k) - static_cast<double>(c.rank)));
            }
            bool agree = worst <= 1e-6;
            out << "ORACLE " << (agree ? "agree" : "disagree") << " cuts=" << report.cuts.size()
                << " max_gap=" << deviation(worst) << '\n';
            ok = ok && agree;
        }
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_entropy(const std::string &path, const std::string &cut, bool dense, std::ostream &out) {
    Graph g = load_graph(path);
    VertexSet k = parse_vertex_set(cut, g.size());
    std::size_t rank = cut_edits(g, k);
    out << "CUT {" << format_vertex_set(k) << "} RANK " << rank << '\n';
    if (dense) {
        double s = cut_entropy(build_graph_state(g), k);
        out << "ENTROPY " << std::fixed << std::setprecision(6) << s << " edits\n";
        if (std::abs(s - static_cast<double>(rank)) > 1e-6) {
            return kCheckFailed;
        }
    }
    return kOk;
}

int cmd_export(const std::string &path, bool dot, bool circuit, std::ostream &out) {
    Graph g = load_graph(path);
    if (dot == circuit) {
        throw Error(ErrorCode::kInvalidArgument, "choose exactly one of --dot and --circuit");
    }
    out << (dot ? to_dot(g) : to_circuit(g));
    return kOk;
}

// --- search -------------------------------------------------------------------

struct SearchArgs {
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    std::size_t workers = 1;
    std::size_t group_size = 1;
    bool unit_weights = false;
    std::string sampling = "uniform";
    bool canonical = false;
    bool rescale = false;
    bool min_degree = false;
    std::uint64_t budget = kDefaultExhaustiveBudget;
    std::uint64_t samples = 1000000;
    std::size_t max_witnesses = 0;
    std::string out;
    bool stats = false;
};

int cmd_search(const SearchArgs &a, std::ostream &out) {
    SearchSpec s;
    s.n = a.n;
    s.p = a.p;
    s.mode = a.mode == "random" ? SearchMode::kRandom : SearchMode::kExhaustive;
    if (s.mode == SearchMode::kRandom) {
        if (!a.seed) {
            throw Error(ErrorCode::kInvalidArgument, "random search requires --seed");
        }
        s.seed = *a.seed;
    }
    s.workers = a.workers;
    s.group_size = a.group_size;
    s.unit_weights = a.unit_weights;
    s.sampling = a.sampling == "dense" ? Sampling::kDense : a.sampling == "unit" ? Sampling::kUnit : Sampling::kUniform;
    s.pruning = {a.canonical, a.rescale, a.min_degree};
    s.budget = a.budget;
    s.samples = a.samples;
    s.max_witnesses = a.max_witnesses;
    SearchResult r = run_search(s);
    std::ostringstream header;
    header << "search n=" << a.n << " p=" << a.p << " mode=" << a.mode;
    if (a.group_size > 1) {
        header << " group-size=" << a.group_size;
    }
    if (a.seed && s.mode == SearchMode::kRandom) {
        header << " seed=" << *a.seed;
    }
    header << " witnesses=" << r.witnesses.size();
    write_or_print(format_witnesses(r, header.str()), a.out, out);
    if (a.stats) {
        out << format_stats(r) << '\n';
    }
    return s.mode == SearchMode::kRandom && r.witnesses.empty() ? kCheckFailed : kOk;
}

// --- code2graph -----------------------------------------------------------------

int cmd_code2graph(const std::string &code_spec, bool transcript, const std::string &path, std::ostream &out) {
    LinearCode code = load_code(code_spec);
    GeneratorMatrix m = ame_generator_matrix(code);
    GraphConversion conv = to_graph(m);
    if (!is_ame(conv.graph)) {
        throw Error(ErrorCode::kInternalError, "converted graph fails the rank check");
    }
    std::ostringstream text;
    if (transcript) {
        text << "# generator matrix\n";
        std::istringstream lines(to_text(m));
        for (std::string line; std::getline(lines, line);) {
            text << "#   " << line << '\n';
        }
        for (std::size_t i = 0; i < conv.transcript.size(); ++i) {
            const CliffordStep &step = conv.transcript[i];
            if (!step.y.is_identity()) {
                text << "# step " << i + 1 << " Y";
                for (const CliffordQuad &q : step.y.quads()) {
                    text << " (" << q.e << ',' << q.f << ',' << q.e2 << ',' << q.f2 << ')';
                }
                text << '\n';
            }
            if (!(step.u == FieldMat::identity(step.u.prime(), step.u.rows()))) {
                text << "# step " << i + 1 << " U";
                for (std::size_t r = 0; r < step.u.rows(); ++r) {
                    text << (r ? " |" : "");
                    for (std::size_t c = 0; c < step.u.cols(); ++c) {
                        text << ' ' << step.u.at(r, c);
                    }
                }
                text << '\n';
            }
        }
    }
    text << to_text(conv.graph);
    write_or_print(text.str(), path, out);
    return kOk;
}

// --- qss ------------------------------------------------------------------------

struct QssArgs {
    std::string graph;
    std::string mode = "threshold";
    std::string dealers = "1";
    std::string check = "all";
    std::optional<std::uint64_t> seed;
    std::size_t secrets = 20;
    std::size_t trials = 20;
};

int cmd_qss(const QssArgs &a, std::ostream &out) {
    if (!a.seed) {
        throw Error(ErrorCode::kInvalidArgument, "qss requires --seed");
    }
    Graph g = load_graph(a.graph);
    VertexSet dealers = parse_vertex_set(a.dealers, g.size());
    if (a.mode == "threshold" && dealers.size() != 1) {
        throw Error(ErrorCode::kInvalidArgument, "threshold mode takes a single dealer");
    }
    RampScheme scheme(g, dealers);
    const std::uint32_t p = g.prime().value();
    const std::size_t m = scheme.threshold();
    const std::size_t l = scheme.registers();
    std::mt19937_64 rng(*a.seed);
    out << "SCHEME " << a.mode << " n=" << g.size() << " p=" << p << " m=" << m << " L=" << l
        << " dealers=" << format_vertex_set(dealers) << " players=" << format_vertex_set(scheme.players()) << '\n';
    bool ok = true;
    if (a.check == "all" || a.check == "authorized") {
        std::vector<Secret> secrets;
        for (std::size_t i = 0; i < a.secrets; ++i) {
            secrets.push_back(random_secret(scheme.secret_dim(), rng));
        }
        for (const VertexSet &b : subsets_of(scheme.players(), m)) {
            double worst = 0;
            std::size_t runs = 0;
            if (a.mode == "threshold") {
                ThresholdScheme t(g, dealers[0]);
                for (Residue gg = 0; gg < p; ++gg) {
                    for (Residue hh = 0; hh < p; ++hh) {
                        for (const Secret &s : secrets) {
                            worst = std::max(worst, 1 - run_threshold(t, s, b, {gg, hh}));
                            ++runs;
                        }
                    }
                }
            } else {
                for (const Secret &s : secrets) {
                    worst = std::max(worst, 1 - run_ramp(scheme, s, b));
                    ++runs;
                }
            }
            bool pass = worst <= kTol;
            ok = ok && pass;
            out << "AUTHORIZED {" << format_vertex_set(b) << "} runs=" << runs << " fidelity_gap=" << deviation(worst)
                << ' ' << (pass ? "PASS" : "FAIL") << '\n';
        }
    }
    if ((a.check == "all" || a.check == "forbidden") && m > l) {
        for (const VertexSet &f : subsets_of(scheme.players(), m - l)) {
            double d = audit_forbidden(scheme, f, a.trials, rng());
            bool pass = d <= kTol;
            ok = ok && pass;
            out << "FORBIDDEN {" << format_vertex_set(f) << "} trials=" << a.trials << " trace_distance=" << deviation(d)
                << ' ' << (pass ? "PASS" : "FAIL") << '\n';
        }
    }
    out << "RESULT " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kOk : kCheckFailed;
}

// --- composite --------------------------------------------------------------------

int report_composite(const CompositeAme &c, std::ostream &out) {
    CompositeReport r = verify_composite(c);
    out << format_composite_report(c, r);
    return r.is_ame ? kOk : kCheckFailed;
}

// --- repro ------------------------------------------------------------------------

int cmd_repro(bool quick, int criterion, std::uint64_t seed, bool timing, std::ostream &out) {
    ReproOptions options{quick, seed};
    std::vector<CriterionResult> results;
    if (criterion != 0) {
        results.push_back(run_criterion(criterion, options));
    } else {
        for (int id = 1; id <= kCriterionCount; ++id) {
            results.push_back(run_criterion(id, options));
            out << format_result(results.back(), timing) << '\n';
        }
    }
    if (criterion != 0) {
        out << format_result(results.back(), timing) << '\n';
    }
    bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult &r) { return r.pass; });
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Construct, verify and search for absolutely maximally entangled graph states.", "amegraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "amegraph 1.0.0");

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Rank-criterion AME check of a graph file");
    verify_cmd->add_option("graph", verify.graph, "Graph file or builtin:NAME")->required();
    verify_cmd->add_flag("--oracle", verify.oracle, "Cross-check every listed cut against dense entropies");
    verify_cmd->add_flag("--all-cuts", verify.all_cuts, "List every cut size, not only half cuts");
    verify_cmd->add_option("--group-size", verify.group_size, "Check parties of this many consecutive vertices")
        ->check(CLI::PositiveNumber);

    std::string entropy_graph, entropy_cut;
    bool entropy_dense = false;
    auto *entropy_cmd = app.add_subcommand("entropy", "Entanglement of one bipartition in edits");
    entropy_cmd->add_option("graph", entropy_graph, "Graph file or builtin:NAME")->required();
    entropy_cmd->add_option("--cut", entropy_cut, "One side, e.g. 1,4")->required();
    entropy_cmd->add_flag("--dense", entropy_dense, "Also compute the von Neumann entropy of the dense state");

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Exhaustive or random search for AME graphs");
    search_cmd->add_option("--n", search.n, "Number of vertices")->required();
    search_cmd->add_option("--p", search.p, "Prime local dimension")->required();
    search_cmd->add_option("--mode", search.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--seed", search.seed, "Random seed (required for random mode)");
    search_cmd->add_option("--workers", search.workers, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--group-size", search.group_size, "Vertices per party")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--unit-weights", search.unit_weights, "Restrict exhaustive weights to {0,1}");
    search_cmd->add_option("--sampling", search.sampling, "uniform, dense or unit")
        ->check(CLI::IsMember({"uniform", "dense", "unit"}));
    search_cmd->add_flag("--canonical", search.canonical, "Skip graphs that are not relabeling-minimal");
    search_cmd->add_flag("--rescale", search.rescale, "Skip graphs that are not rescale-normal");
    search_cmd->add_flag("--min-degree", search.min_degree, "Skip graphs with a low-degree vertex");
    search_cmd->add_option("--budget", search.budget, "Largest exhaustive space accepted");
    search_cmd->add_option("--samples", search.samples, "Random samples");
    search_cmd->add_option("--max-witnesses", search.max_witnesses, "Stop after this many witnesses");
    search_cmd->add_option("--out", search.out, "Write witnesses to this file");
    search_cmd->add_flag("--stats", search.stats, "Print the statistics line");

    std::string code_spec, code_out;
    bool code_transcript = false;
    auto *code_cmd = app.add_subcommand("code2graph", "AME graph from an MDS code");
    code_cmd->add_option("code", code_spec, "hamming433, grs:p,n,k or a code file")->required();
    code_cmd->add_flag("--transcript", code_transcript, "Print the local Clifford steps as comments");
    code_cmd->add_option("--out", code_out, "Write the graph to this file");

    QssArgs qss;
    auto *qss_cmd = app.add_subcommand("qss", "Simulate and audit threshold or ramp secret sharing");
    qss_cmd->add_option("--graph", qss.graph, "AME graph file or builtin:NAME")->required();
    qss_cmd->add_option("--mode", qss.mode, "threshold or ramp")->check(CLI::IsMember({"threshold", "ramp"}));
    qss_cmd->add_option("--dealers", qss.dealers, "Dealer vertices, e.g. 1,2");
    qss_cmd->add_option("--check", qss.check, "all, authorized or forbidden")
        ->check(CLI::IsMember({"all", "authorized", "forbidden"}));
    qss_cmd->add_option("--seed", qss.seed, "Random seed for secrets")->required();
    qss_cmd->add_option("--secrets", qss.secrets, "Random secrets per authorized set")->check(CLI::PositiveNumber);
    qss_cmd->add_option("--trials", qss.trials, "Secret pairs per forbidden set")->check(CLI::PositiveNumber);

    auto *composite_cmd = app.add_subcommand("composite", "AME states for composite local dimension");
    composite_cmd->require_subcommand(1);
    std::string manifest;
    auto *composite_verify = composite_cmd->add_subcommand("verify", "Check a composite manifest");
    composite_verify->add_option("manifest", manifest, "Manifest file")->required();
    std::size_t composite_n = 0;
    std::uint64_t composite_d = 0;
    auto *composite_build = composite_cmd->add_subcommand("build", "Assemble from the built-in witnesses");
    composite_build->add_option("--n", composite_n, "Number of parties")->required();
    composite_build->add_option("--d", composite_d, "Local dimension")->required();

    std::string export_graph;
    bool export_dot = false, export_circuit = false;
    auto *export_cmd = app.add_subcommand("export", "DOT or CZ-circuit rendering of a graph");
    export_cmd->add_option("graph", export_graph, "Graph file or builtin:NAME")->required();
    auto *dot_flag = export_cmd->add_flag("--dot", export_dot, "Graphviz output");
    export_cmd->add_flag("--circuit", export_circuit, "Preparation circuit")->excludes(dot_flag);

    bool repro_quick = false, repro_no_timing = false;
    int repro_criterion = 0;
    std::uint64_t repro_seed = 1;
    auto *repro_cmd = app.add_subcommand("repro", "Run the acceptance criteria");
    repro_cmd->add_flag("--quick", repro_quick, "Skip the 7-qubit exhaustive run");
    repro_cmd->add_option("--criterion", repro_criterion, "Run one criterion")->check(CLI::Range(1, kCriterionCount));
    repro_cmd->add_option("--seed", repro_seed, "Seed for the randomized criteria");
    repro_cmd->add_flag("--no-timing", repro_no_timing, "Omit run times from the report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        if (*entropy_cmd) {
            return cmd_entropy(entropy_graph, entropy_cut, entropy_dense, out);
        }
        if (*search_cmd) {
            return cmd_search(search, out);
        }
        if (*code_cmd) {
            return cmd_code2graph(code_spec, code_transcript, code_out, out);
        }
        if (*qss_cmd) {
            return cmd_qss(qss, out);
        }
        if (*composite_verify) {
            return report_composite(read_manifest_file(manifest), out);
        }
        if (*composite_build) {
            return report_composite(build_composite(composite_n, composite_d, WitnessRegistry::builtin()), out);
        }
        if (*export_cmd) {
            return cmd_export(export_graph, export_dot, export_circuit, out);
        }
        if (*repro_cmd) {
            return cmd_repro(repro_quick, repro_criterion, repro_seed, !repro_no_timing, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return is_usage_error(e.code()) ? kUsage : kCheckFailed;
    }
    return kUsage;
}

}  // namespace amegraph::cli

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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "amegraph/error.h"
#include "text.h"

namespace amegraph {

namespace {

void check_vertex(Vertex v, std::size_t n) {
    if (v >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
    }
}

std::vector<bool> membership(const VertexSet &k, std::size_t n) {
    std::vector<bool> in(n, false);
    for (Vertex v : k) {
        check_vertex(v, n);
        in[v] = true;
    }
    return in;
}

}  // namespace

Graph::Graph(Prime p, std::size_t n) : adj_(p, n, n) {
}

Graph::Graph(FieldMat adjacency) : adj_(std::move(adjacency)) {
    if (adj_.rows() != adj_.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "adjacency matrix must be square");
    }
    for (std::size_t i = 0; i < adj_.rows(); ++i) {
        if (adj_.at(i, i) != 0) {
            throw Error(ErrorCode::kSelfLoop, "nonzero diagonal at vertex " + std::to_string(i + 1));
        }
        for (std::size_t j = i + 1; j < adj_.cols(); ++j) {
            if (adj_.at(i, j) != adj_.at(j, i)) {
                throw Error(ErrorCode::kInvalidInput, "adjacency matrix is not symmetric");
            }
        }
    }
}

Graph Graph::from_edges(Prime p, std::size_t n, std::span<const Edge> edges) {
    FieldMat a(p, n, n);
    std::vector<bool> seen(n * n, false);
    for (const Edge &e : edges) {
        check_vertex(e.i, n);
        check_vertex(e.j, n);
        if (e.i == e.j) {
            throw Error(ErrorCode::kSelfLoop, "self loop at vertex " + std::to_string(e.i + 1));
        }
        if (e.w >= p.value()) {
            throw Error(ErrorCode::kWeightOutOfRange,
                        "weight " + std::to_string(e.w) + " not in Z_" + std::to_string(p.value()));
        }
        std::size_t lo = std::min(e.i, e.j), hi = std::max(e.i, e.j);
        if (seen[lo * n + hi]) {
            throw Error(ErrorCode::kDuplicateEdge,
                        "edge " + std::to_string(lo + 1) + "-" + std::to_string(hi + 1) + " given twice");
        }
        seen[lo * n + hi] = true;
        a.set(lo, hi, e.w);
        a.set(hi, lo, e.w);
    }
    return Graph(std::move(a));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex i = 0; i < size(); ++i) {
        for (Vertex j = i + 1; j < size(); ++j) {
            if (Residue w = adj_.at(i, j); w != 0) {
                out.push_back({i, j, w});
            }
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t count = 0;
    for (Vertex i = 0; i < size(); ++i) {
        for (Vertex j = i + 1; j < size(); ++j) {
            count += adj_.at(i, j) != 0;
        }
    }
    return count;
}

std::size_t Graph::degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex j = 0; j < size(); ++j) {
        d += adj_.at(v, j) != 0;
    }
    return d;
}

Graph Graph::with_prime(Prime q) const {
    return Graph(FieldMat(q, size(), size(), std::vector<Residue>(adj_.entries().begin(), adj_.entries().end())));
}

std::vector<Residue> Graph::key() const {
    std::vector<Residue> k;
    k.reserve(size() * (size() - (size() > 0)) / 2);
    for (Vertex i = 0; i < size(); ++i) {
        for (Vertex j = i + 1; j < size(); ++j) {
            k.push_back(adj_.at(i, j));
        }
    }
    return k;
}

LabeledGraph::LabeledGraph(Graph g, FieldVec label) : graph(std::move(g)), z(std::move(label)) {
    if (z.size() != graph.size() || z.prime() != graph.prime()) {
        throw Error(ErrorCode::kDimensionMismatch, "label length must equal the vertex count");
    }
}

LabeledGraph::LabeledGraph(Graph g) : graph(std::move(g)), z(graph.prime(), graph.size()) {
}

CzCircuit CzCircuit::from_graph(const Graph &g) {
    CzCircuit c{g.prime(), g.size(), {}};
    for (const Edge &e : g.edges()) {
        c.gates.push_back({e.i, e.j, e.w});
    }
    return c;
}

bool is_vertex_set(const VertexSet &k, std::size_t n) {
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] >= n || (i > 0 && k[i] <= k[i - 1])) {
            return false;
        }
    }
    return true;
}

FieldVec row_restrict(const Graph &g, Vertex i, const VertexSet &k) {
    check_vertex(i, g.size());
    auto in = membership(k, g.size());
    std::vector<Residue> out;
    out.reserve(g.size());
    for (Vertex j = 0; j < g.size(); ++j) {
        if (!in[j]) {
            out.push_back(g.weight(i, j));
        }
    }
    return FieldVec(g.prime(), std::move(out));
}

Graph truncate(const Graph &g, const VertexSet &k) {
    auto in = membership(k, g.size());
    std::vector<std::size_t> keep;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!in[v]) {
            keep.push_back(v);
        }
    }
    return Graph(g.adjacency().select_rows(keep).select_cols(keep));
}

Graph op_mult(const Graph &g, Vertex v, Residue b) {
    check_vertex(v, g.size());
    const Prime p = g.prime();
    if (b % p.value() == 0) {
        throw Error(ErrorCode::kInvalidRewrite, "multiplier must be nonzero");
    }
    FieldMat a = g.adjacency();
    for (Vertex j = 0; j < g.size(); ++j) {
        Residue w = mod_mul(a.at(v, j), b % p.value(), p);
        a.set(v, j, w);
        a.set(j, v, w);
    }
    return Graph(std::move(a));
}

Graph op_star(const Graph &g, Vertex v, Residue a) {
    check_vertex(v, g.size());
    const Prime p = g.prime();
    a %= p.value();
    FieldMat m = g.adjacency();
    if (a == 0) {
        return g;
    }
    for (Vertex j = 0; j < g.size(); ++j) {
        Residue avj = g.weight(v, j);
        if (avj == 0) {
            continue;
        }
        for (Vertex k = j + 1; k < g.size(); ++k) {
            Residue avk = g.weight(v, k);
            if (avk == 0) {
                continue;
            }
            Residue w = mod_add(m.at(j, k), mod_mul(a, mod_mul(avj, avk, p), p), p);
            m.set(j, k, w);
            m.set(k, j, w);
        }
    }
    return Graph(std::move(m));
}

LabeledGraph z_measure_symbolic(const LabeledGraph &s, const VertexSet &k, const FieldVec &outcomes) {
    if (outcomes.size() != k.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "one outcome per measured vertex");
    }
    if (!is_vertex_set(k, s.graph.size())) {
        throw Error(ErrorCode::kInvalidArgument, "measured set must be sorted, distinct and in range");
    }
    const Prime p = s.graph.prime();
    auto in = membership(k, s.graph.size());
    std::vector<Residue> label;
    for (Vertex v = 0; v < s.graph.size(); ++v) {
        if (!in[v]) {
            label.push_back(s.z[v]);
        }
    }
    FieldVec z(p, std::move(label));
    for (std::size_t i = 0; i < k.size(); ++i) {
        z = z + row_restrict(s.graph, k[i], k).scaled(outcomes[i]);
    }
    return LabeledGraph(truncate(s.graph, k), std::move(z));
}

Graph permute(const Graph &g, std::span<const Vertex> perm) {
    const std::size_t n = g.size();
    if (perm.size() != n) {
        throw Error(ErrorCode::kDimensionMismatch, "permutation length must equal the vertex count");
    }
    std::vector<bool> hit(n, false);
    for (Vertex v : perm) {
        if (v >= n || hit[v]) {
            throw Error(ErrorCode::kInvalidArgument, "not a permutation");
        }
        hit[v] = true;
    }
    FieldMat a(g.prime(), n, n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            a.set(perm[i], perm[j], g.weight(i, j));
        }
    }
    return Graph(std::move(a));
}

namespace {

// Compares key(relabel by sigma) against `best`, where sigma maps new index to
// old index. Returns <0, 0, >0.
int compare_relabeled(const Graph &g, const std::vector<Vertex> &sigma, const std::vector<Residue> &best) {
    std::size_t pos = 0;
    const std::size_t n = g.size();
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++pos) {
            Residue w = g.weight(sigma[i], sigma[j]);
            if (w != best[pos]) {
                return w < best[pos] ? -1 : 1;
            }
        }
    }
    return 0;
}

}  // namespace

Graph canonical_form(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<Vertex> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<Residue> best = g.key();
    std::vector<Vertex> best_sigma = sigma;
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        if (compare_relabeled(g, sigma, best) < 0) {
            best_sigma = sigma;
            std::size_t pos = 0;
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = i + 1; j < n; ++j) {
                    best[pos++] = g.weight(sigma[i], sigma[j]);
                }
            }
        }
    }
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) {
        perm[best_sigma[i]] = i;
    }
    return permute(g, perm);
}

bool is_canonical(const Graph &g) {
    std::vector<Vertex> sigma(g.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    const std::vector<Residue> mine = g.key();
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        if (compare_relabeled(g, sigma, mine) < 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text formats

std::string to_text(const Graph &g) {
    std::ostringstream out;
    out << g.prime().value() << ' ' << g.size() << '\n';
    for (const Edge &e : g.edges()) {
        out << e.i + 1 << ' ' << e.j + 1 << ' ' << e.w << '\n';
    }
    return out.str();
}

namespace {

using detail::Line;
using detail::parse_numbers;
using detail::split_blocks;

Graph parse_block(const std::vector<Line> &lines) {
    if (lines.empty()) {
        throw Error(ErrorCode::kParseError, "empty graph text");
    }
    auto header = parse_numbers(lines[0].text, lines[0].number);
    if (header.size() != 2 || header[0] < 2 || header[1] < 0 || header[0] > 0xFFFFFFFFLL) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(lines[0].number) + ": expected header 'p n'");
    }
    if (!is_prime(static_cast<std::uint64_t>(header[0]))) {
        throw Error(ErrorCode::kParseError, "header modulus " + std::to_string(header[0]) + " is not prime");
    }
    Prime p(static_cast<std::uint32_t>(header[0]));
    auto n = static_cast<std::size_t>(header[1]);
    std::vector<Edge> edges;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        auto nums = parse_numbers(lines[l].text, lines[l].number);
        if (nums.size() != 3 || nums[0] < 1 || nums[1] < 1 || nums[2] < 0) {
            throw Error(ErrorCode::kParseError, "line " + std::to_string(lines[l].number) + ": expected 'i j w'");
        }
        if (static_cast<std::size_t>(nums[0]) > n || static_cast<std::size_t>(nums[1]) > n) {
            throw Error(ErrorCode::kParseError, "line " + std::to_string(lines[l].number) + ": vertex out of range");
        }
        if (nums[2] >= static_cast<long long>(p.value())) {
            throw Error(ErrorCode::kParseError, "line " + std::to_string(lines[l].number) + ": weight out of range");
        }
        edges.push_back({static_cast<Vertex>(nums[0] - 1), static_cast<Vertex>(nums[1] - 1),
                         static_cast<Residue>(nums[2])});
    }
    try {
        return Graph::from_edges(p, n, edges);
    } catch (const Error &e) {
        throw Error(ErrorCode::kParseError, e.what());
    }
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto blocks = split_blocks(text);
    if (blocks.size() != 1) {
        throw Error(ErrorCode::kParseError, blocks.empty() ? "empty graph text" : "expected a single graph");
    }
    return parse_block(blocks[0]);
}

std::vector<Graph> parse_graphs(std::string_view text) {
    std::vector<Graph> out;
    for (const auto &block : split_blocks(text)) {
        out.push_back(parse_block(block));
    }
    return out;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph_file(const std::string &path) {
    return parse_graph(read_text_file(path));
}

std::string to_dot(const Graph &g) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  // p = " << g.prime().value() << "\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << v + 1 << ";\n";
    }
    for (const Edge &e : g.edges()) {
        out << "  " << e.i + 1 << " -- " << e.j + 1 << " [label=\"" << e.w << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_circuit(const Graph &g) {
    std::ostringstream out;
    out << "PREP_ALL |0bar>\n";
    for (const CzGate &gate : CzCircuit::from_graph(g).gates) {
        out << "CZ " << gate.i + 1 << ' ' << gate.j + 1 << " ^" << gate.w << '\n';
    }
    return out.str();
}

std::string format_vertex_set(const VertexSet &k) {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(k[i] + 1);
    }
    return out;
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
    VertexSet out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view item = text.substr(pos, end - pos);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 1 || v > n) {
            throw Error(ErrorCode::kParseError, "bad vertex list '" + std::string(text) + "'");
        }
        out.push_back(v - 1);
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw Error(ErrorCode::kParseError, "repeated vertex in '" + std::string(text) + "'");
    }
    return out;
}

}  // namespace amegraph

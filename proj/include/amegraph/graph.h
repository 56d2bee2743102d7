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

#ifndef AMEGRAPH_GRAPH_H
#define AMEGRAPH_GRAPH_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amegraph/gfp.h"

namespace amegraph {

/// Vertices are 0-indexed in the API. Text formats and CLI output are
/// 1-indexed.
using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex i;
    Vertex j;
    Residue w;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Weighted simple graph over Z_p: symmetric adjacency, zero diagonal.
class Graph {
   public:
    /// Edgeless graph on n vertices.
    Graph(Prime p, std::size_t n);
    /// Validates symmetry and the zero diagonal.
    explicit Graph(FieldMat adjacency);

    /// Weight-0 edges are dropped. Throws SelfLoop, DuplicateEdge,
    /// WeightOutOfRange or VertexOutOfRange.
    static Graph from_edges(Prime p, std::size_t n, std::span<const Edge> edges);

    Prime prime() const noexcept {
        return adj_.prime();
    }
    std::size_t size() const noexcept {
        return adj_.rows();
    }
    Residue weight(Vertex i, Vertex j) const {
        return adj_.at(i, j);
    }
    const FieldMat &adjacency() const noexcept {
        return adj_;
    }

    /// Nonzero edges with i < j in ascending lexicographic order.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    std::size_t degree(Vertex v) const;

    /// Same weights read over another prime. Throws WeightOutOfRange if a
    /// weight does not fit.
    Graph with_prime(Prime q) const;

    /// Upper-triangular entries in row-major order; the total order used by
    /// canonical_form.
    std::vector<Residue> key() const;

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    FieldMat adj_;
};

/// Z^z |G>.
struct LabeledGraph {
    LabeledGraph(Graph g, FieldVec label);
    explicit LabeledGraph(Graph g);

    Graph graph;
    FieldVec z;

    friend bool operator==(const LabeledGraph &, const LabeledGraph &) = default;
};

struct CzGate {
    Vertex i;
    Vertex j;
    Residue w;
};

/// Preparation circuit: every qudit in |0bar>, then CZ^w per edge.
struct CzCircuit {
    Prime p;
    std::size_t n;
    std::vector<CzGate> gates;

    static CzCircuit from_graph(const Graph &g);
};

bool is_vertex_set(const VertexSet &k, std::size_t n);

/// Row i with the columns in K deleted (order preserved).
FieldVec row_restrict(const Graph &g, Vertex i, const VertexSet &k);

/// Deletes the vertices in K and their edges.
Graph truncate(const Graph &g, const VertexSet &k);

/// Scales every edge at v by b. Throws InvalidRewrite for b == 0.
Graph op_mult(const Graph &g, Vertex v, Residue b);

/// A_jk += a * A_vj * A_vk for all j != k.
Graph op_star(const Graph &g, Vertex v, Residue a);

/// Z-measurement of the vertices in K with the given outcomes; global phases
/// are discarded.
LabeledGraph z_measure_symbolic(const LabeledGraph &s, const VertexSet &k, const FieldVec &outcomes);

/// Relabels vertex v as perm[v].
Graph permute(const Graph &g, std::span<const Vertex> perm);

/// The relabeling with the lexicographically smallest key(). Brute force over
/// all n! permutations.
Graph canonical_form(const Graph &g);

/// True when no relabeling has a smaller key; exits on the first smaller one.
bool is_canonical(const Graph &g);

// Text formats.

/// "p n" then one "i j w" line per edge, 1-indexed, ascending.
std::string to_text(const Graph &g);
/// Accepts '#' comment lines and blank lines anywhere.
Graph parse_graph(std::string_view text);
/// Graph blocks separated by blank lines.
std::vector<Graph> parse_graphs(std::string_view text);
Graph read_graph_file(const std::string &path);
std::string read_text_file(const std::string &path);

std::string to_dot(const Graph &g);
std::string to_circuit(const Graph &g);

/// "1,4" style rendering of a vertex set, 1-indexed.
std::string format_vertex_set(const VertexSet &k);
/// Parses "1,4" (1-indexed) into a 0-indexed set.
VertexSet parse_vertex_set(std::string_view text, std::size_t n);

}  // namespace amegraph

#endif

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

#ifndef AMEGRAPH_ENTANGLEMENT_H
#define AMEGRAPH_ENTANGLEMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amegraph/graph.h"

namespace amegraph {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<VertexSet> combinations(std::size_t n, std::size_t k);

/// The |K| x (n-|K|) matrix whose rows are row_restrict(g, k_i, K).
FieldMat cut_matrix(const Graph &g, const VertexSet &k);

/// Entanglement across K | complement in edits (units of log p): the rank of
/// cut_matrix. K must be a nonempty proper subset.
std::size_t cut_edits(const Graph &g, const VertexSet &k);

struct CutRank {
    VertexSet k;
    std::size_t rank;
};

struct AmeReport {
    bool is_ame = false;
    /// First failing cut in enumeration order.
    std::optional<VertexSet> witness;
    std::vector<CutRank> cuts;
};

enum class CutScope {
    /// Every cut of size floor(n/2). Sufficient for the AME property.
    kHalf,
    /// Every cut size from 1 to n-1; a self-test of the half-size shortcut.
    kAll,
};

/// Boolean AME check; stops at the first deficient half-size cut.
bool is_ame(const Graph &g);

/// Records every cut rank in lexicographic order of K.
AmeReport ame_report(const Graph &g, CutScope scope = CutScope::kHalf);

/// Line format: "AME yes|no", optional "WITNESS k1,k2", then "CUT {..} RANK r".
std::string format_report(const AmeReport &report);

/// Party i owns vertices [i*g, (i+1)*g).
std::vector<VertexSet> contiguous_groups(std::size_t parties, std::size_t group_size);

/// Rank criterion at party granularity: each K is a union of
/// floor(#parties/2) groups and must reach rank |K|. For an even party count
/// only cuts containing party 0 are listed. Throws UnequalGroups.
AmeReport is_ame_grouped(const Graph &g, const std::vector<VertexSet> &groups);

/// Compiled cut list for repeated AME checks on raw adjacency data. This is
/// the search hot path; p = 2 runs on bit-packed rows.
class AmePredicate {
   public:
    /// Half-size cuts of an n-vertex graph.
    AmePredicate(Prime p, std::size_t n);
    /// Party-level cuts for the given grouping.
    AmePredicate(Prime p, std::vector<VertexSet> groups);

    Prime prime() const noexcept {
        return p_;
    }
    std::size_t vertex_count() const noexcept {
        return n_;
    }
    std::size_t cut_count() const noexcept {
        return cuts_.size();
    }

    /// `adjacency` is the row-major n*n matrix.
    bool operator()(std::span<const Residue> adjacency) const;
    bool operator()(const Graph &g) const {
        return (*this)(g.adjacency().entries());
    }
    /// p = 2 only: row v has bit j set iff A_vj = 1.
    bool check_packed(std::span<const std::uint64_t> rows) const;

   private:
    struct Cut {
        std::uint64_t mask;
        std::vector<std::uint8_t> members;
        std::vector<std::uint8_t> others;
    };

    void add_cut(const VertexSet &k);
    bool generic_full_rank(const Cut &cut, std::span<const Residue> adjacency) const;

    Prime p_;
    std::size_t n_;
    std::vector<Cut> cuts_;
    std::vector<Residue> inv_;
};

// Bounded local-Clifford orbit exploration.

struct Rewrite {
    enum class Kind { kMult, kStar };
    Kind kind;
    Vertex v;
    Residue param;
};

Graph apply_rewrite(const Graph &g, const Rewrite &r);

struct OrbitResult {
    /// Breadth-first discovery order; graphs[0] is the start graph.
    std::vector<Graph> graphs;
    /// Index of the graph each entry was reached from, and the rewrite used.
    std::vector<std::size_t> parent;
    std::vector<Rewrite> via;
    bool truncated = false;

    /// Rewrites leading from graphs[0] to graphs[index].
    std::vector<Rewrite> path_to(std::size_t index) const;
};

/// Graphs reachable by op_mult / op_star, deduplicated by exact adjacency (or
/// by canonical form when `collapse_canonical`), capped at max_nodes.
OrbitResult lc_orbit(const Graph &g, std::size_t max_nodes, bool collapse_canonical = false);

/// Orbit member with the fewest edges; ties go to the smaller canonical key,
/// then the smaller key.
Graph min_edge_representative(const Graph &g, std::size_t max_nodes);

}  // namespace amegraph

#endif

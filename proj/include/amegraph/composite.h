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

#ifndef AMEGRAPH_COMPOSITE_H
#define AMEGRAPH_COMPOSITE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amegraph/entanglement.h"
#include "amegraph/graph.h"

namespace amegraph {

/// Sorted prime factors with multiplicity. Throws InvalidArgument for d < 2.
std::vector<std::uint32_t> factorize(std::uint64_t d);

/// Names accepted by builtin_witness.
std::vector<std::string> builtin_witness_names();

/// The stored text of a built-in witness, provenance comment included.
/// Throws InvalidArgument for an unknown name.
std::string builtin_witness_text(std::string_view name);
Graph builtin_witness(std::string_view name);

/// AME witnesses keyed by (prime, parties, group size).
class WitnessRegistry {
   public:
    struct Entry {
        Graph graph;
        std::size_t group_size;
        /// The unit-free weights are re-read at any prime >= graph.prime()
        /// and accepted only when the rank check passes there.
        bool lifts;
    };

    /// C5, QuadWeighted, AME(6,2), AME(7,3) and the grouped AME(4,4).
    static WitnessRegistry builtin();

    /// Throws NotAme unless g passes the (grouped) rank check.
    void add(Graph g, std::size_t group_size = 1, bool lifts = false);

    /// First matching entry, lifted to p when needed.
    std::optional<Graph> find(Prime p, std::size_t parties, std::size_t group_size = 1) const;

    const std::vector<Entry> &entries() const noexcept {
        return entries_;
    }

   private:
    std::vector<Entry> entries_;
};

struct CompositeFactor {
    Prime p;
    Graph graph;
    std::size_t group_size;

    /// Party i owns vertices [i*g, (i+1)*g) of graph.
    std::vector<VertexSet> groups() const;
};

/// n parties of local dimension d = product of p^group_size over factors.
struct CompositeAme {
    std::size_t parties;
    std::uint64_t d;
    /// Sorted by prime, then group size.
    std::vector<CompositeFactor> factors;
};

/// Each distinct prime p of multiplicity k uses k copies of an ungrouped
/// AME(n,p) witness, or else one grouped witness with k vertices per party.
/// Throws MissingWitness.
CompositeAme build_composite(std::size_t parties, std::uint64_t d, const WitnessRegistry &registry);

/// Assembles factors given explicitly; checks group sizes and party counts.
/// Throws InvalidInput.
CompositeAme make_composite(std::vector<CompositeFactor> factors);

struct PartyCut {
    /// Parties on one side.
    VertexSet parties;
    /// Cut rank per factor, in factor order.
    std::vector<std::size_t> ranks;
    /// Entanglement in bits, and its maximum |parties| * log2 d.
    double bits;
    double max_bits;
};

struct FactorCheck {
    Prime p;
    std::size_t group_size;
    AmeReport grouped;
    /// Qudit-level half-cut report, for grouped factors only.
    std::optional<AmeReport> ungrouped;
};

struct CompositeReport {
    bool is_ame = false;
    std::vector<FactorCheck> factors;
    /// Half cuts; for an even party count only those containing party 0.
    std::vector<PartyCut> cuts;
};

CompositeReport verify_composite(const CompositeAme &c);

/// "COMPOSITE", "FACTOR", "PARTYCUT" and "UNGROUPED" lines, then "AME yes|no".
std::string format_composite_report(const CompositeAme &c, const CompositeReport &r);

/// Lines "factor p FILE groupsize g". FILE is a path relative to base_dir or
/// "builtin:NAME"; the graph is read over p. Throws ParseError.
CompositeAme parse_manifest(std::string_view text, const std::string &base_dir);
CompositeAme read_manifest_file(const std::string &path);

}  // namespace amegraph

#endif

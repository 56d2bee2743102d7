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

#ifndef AMEGRAPH_SEARCH_H
#define AMEGRAPH_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amegraph/graph.h"

namespace amegraph {

enum class SearchMode { kExhaustive, kRandom };

/// Weight distribution of random samples.
enum class Sampling {
    /// Every edge weight uniform in [0, p).
    kUniform,
    /// Every edge present, weight uniform in [1, p).
    kDense,
    /// Weights uniform in {0, 1}.
    kUnit,
};

/// Independently toggleable filters applied before the rank predicate.
struct Pruning {
    /// Keep one relabeling per permutation class.
    bool canonical = false;
    /// Keep graphs whose first nonzero weight A_vj (j > v) is 1 for every v.
    bool rescale = false;
    /// Reject vertices whose degree is below the bound every witness meets.
    bool min_degree = false;
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 100'000'000;

struct SearchSpec {
    std::size_t n = 0;
    std::uint32_t p = 2;
    SearchMode mode = SearchMode::kExhaustive;
    /// Vertices per party; above 1 the grouped predicate is used on
    /// contiguous groups and n counts vertices.
    std::size_t group_size = 1;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    /// Restrict exhaustive weights to {0, 1}.
    bool unit_weights = false;
    Sampling sampling = Sampling::kUniform;
    Pruning pruning;
    /// Exhaustive: largest admissible search space.
    std::uint64_t budget = kDefaultExhaustiveBudget;
    /// Random: number of samples.
    std::uint64_t samples = 1'000'000;
    /// Stop once this many witnesses are known; 0 keeps going. An early stop
    /// marks the result non-exhaustive.
    std::size_t max_witnesses = 0;
};

struct SearchResult {
    /// Canonical forms (grouped searches keep the graphs as found), sorted
    /// by key, without duplicates.
    std::vector<Graph> witnesses;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    double seconds = 0;
    bool exhaustive = false;

    double rate() const;
};

/// Every upper-triangular weight assignment in ascending key order. Throws
/// BudgetExceeded, or InvalidArgument for unsupported options.
SearchResult enumerate(const SearchSpec &spec);

/// Seeded sampling; stops after max_witnesses (1 when unset) witnesses.
/// Worker w draws from seed + w * 0x9E3779B97F4A7C15, so results are
/// reproducible for one worker; with several, the early stop races.
SearchResult random_search(const SearchSpec &spec);

/// Party-level search on n_parties x group_size vertices.
SearchResult grouped_search(std::size_t n_parties, std::size_t group_size, std::uint32_t p, SearchSpec spec);

/// Dispatches on spec.mode.
SearchResult run_search(const SearchSpec &spec);

/// "examined=N pruned=N witnesses=N rate=N/s exhaustive=yes|no".
std::string format_stats(const SearchResult &r);

/// Witness file: one graph block per witness, blank-line separated, preceded
/// by a comment header.
std::string format_witnesses(const SearchResult &r, const std::string &header);

/// Rescales every vertex so that its first nonzero weight towards a larger
/// vertex is 1.
Graph rescale_normal_form(const Graph &g);
bool is_rescale_normal(const Graph &g);

}  // namespace amegraph

#endif

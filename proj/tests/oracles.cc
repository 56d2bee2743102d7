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

#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace amegraph::oracle {

std::size_t span_rank(const Rows &rows, std::uint32_t p) {
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    std::set<std::vector<Residue>> span;
    std::vector<Residue> coeff(rows.size(), 0);
    while (true) {
        std::vector<Residue> v(width, 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                v[c] = (v[c] + coeff[r] * rows[r][c]) % p;
            }
        }
        span.insert(v);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == p) {
            coeff[i++] = 0;
        }
        if (i == coeff.size()) {
            break;
        }
    }
    std::size_t rank = 0;
    for (std::size_t size = 1; size < span.size(); size *= p) {
        ++rank;
    }
    return rank;
}

std::size_t pairwise_min_distance(const Rows &generator_columns, std::size_t n, std::uint32_t p) {
    std::vector<std::vector<Residue>> words;
    const std::size_t k = generator_columns.size();
    std::vector<Residue> x(k, 0);
    while (true) {
        std::vector<Residue> w(n, 0);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = (w[i] + x[j] * generator_columns[j][i]) % p;
            }
        }
        words.push_back(w);
        std::size_t i = 0;
        while (i < k && ++x[i] == p) {
            x[i++] = 0;
        }
        if (i == k) {
            break;
        }
    }
    std::size_t best = n + 1;
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            std::size_t d = 0;
            for (std::size_t i = 0; i < n; ++i) {
                d += words[a][i] != words[b][i];
            }
            best = std::min(best, d);
        }
    }
    return best;
}

std::vector<Residue> min_relabeled_key(const Graph &g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Residue> best;
    do {
        // New vertex perm[v] takes the role of old vertex v.
        std::vector<Residue> a(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[perm[i] * n + perm[j]] = g.weight(i, j);
            }
        }
        std::vector<Residue> key;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                key.push_back(a[i * n + j]);
            }
        }
        if (best.empty() || key < best) {
            best = key;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph random_graph(Prime p, std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Residue> dist(0, p.value() - 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.push_back({i, j, dist(rng)});
        }
    }
    return Graph::from_edges(p, n, edges);
}

std::vector<Graph> all_graphs(Prime p, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    std::vector<Graph> out;
    std::vector<Residue> w(slots.size(), 0);
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            edges.push_back({slots[s].first, slots[s].second, w[s]});
        }
        out.push_back(Graph::from_edges(p, n, edges));
        std::size_t s = slots.size();
        while (s > 0 && ++w[s - 1] == p.value()) {
            w[--s] = 0;
        }
        if (s == 0) {
            break;
        }
    }
    return out;
}

std::vector<VertexSet> all_bipartitions(std::size_t n) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        VertexSet k;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1U) {
                k.push_back(v);
            }
        }
        out.push_back(k);
    }
    return out;
}

}  // namespace amegraph::oracle

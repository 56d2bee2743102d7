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

#include "amegraph/search.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "amegraph/entanglement.h"
#include "amegraph/error.h"

namespace amegraph {

namespace {

using Key = std::vector<Residue>;

Graph graph_from_key(Prime p, std::size_t n, const Key &key) {
    FieldMat a(p, n, n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            a.set(i, j, key[t]);
            a.set(j, i, key[t]);
            ++t;
        }
    }
    return Graph(std::move(a));
}

// Kept iff g is rescale-normal and no relabeling followed by normalization
// has a smaller key. Every class under relabeling and rescaling keeps at
// least its smallest normal member.
bool is_rescale_canonical(const Graph &g) {
    if (!is_rescale_normal(g)) {
        return false;
    }
    const Key key = g.key();
    std::vector<Vertex> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (rescale_normal_form(permute(g, perm)).key() < key) {
            return false;
        }
    }
    return true;
}

struct Accumulator {
    std::set<Key> keys;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
};

class Worker {
   public:
    Worker(const SearchSpec &spec, const AmePredicate &pred)
        : spec_(spec),
          p_(spec.p),
          n_(spec.n),
          pred_(pred),
          adj_(spec.n * spec.n, 0),
          rows_(spec.n, 0),
          degree_(spec.n, 0),
          degree_bound_(spec.group_size > 1 ? 1 : spec.n / 2) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                edges_.push_back({i, j});
            }
        }
    }

    std::size_t edge_count() const {
        return edges_.size();
    }

    void set_weight(std::size_t e, Residue w) {
        auto [i, j] = edges_[e];
        Residue old = adj_[i * n_ + j];
        if (old == w) {
            return;
        }
        adj_[i * n_ + j] = w;
        adj_[j * n_ + i] = w;
        if ((old == 0) != (w == 0)) {
            int delta = w == 0 ? -1 : 1;
            degree_[i] += delta;
            degree_[j] += delta;
            if (p_.value() == 2) {
                rows_[i] ^= std::uint64_t{1} << j;
                rows_[j] ^= std::uint64_t{1} << i;
            }
        }
    }

    // Runs the filters and the predicate on the current adjacency.
    void process(Accumulator &acc) {
        ++acc.examined;
        if (spec_.pruning.min_degree) {
            for (std::size_t v = 0; v < n_; ++v) {
                if (static_cast<std::size_t>(degree_[v]) < degree_bound_) {
                    ++acc.pruned;
                    return;
                }
            }
        }
        if (spec_.pruning.rescale && !rescale_normal()) {
            ++acc.pruned;
            return;
        }
        if (spec_.pruning.canonical) {
            Graph g(FieldMat(p_, n_, n_, adj_));
            bool keep = spec_.pruning.rescale ? is_rescale_canonical(g) : is_canonical(g);
            if (!keep) {
                ++acc.pruned;
                return;
            }
        }
        bool ok = p_.value() == 2 ? pred_.check_packed(rows_) : pred_(adj_);
        if (!ok) {
            return;
        }
        Graph g(FieldMat(p_, n_, n_, adj_));
        acc.keys.insert(spec_.group_size > 1 ? g.key() : canonical_form(g).key());
    }

   private:
    bool rescale_normal() const {
        for (std::size_t v = 0; v < n_; ++v) {
            for (std::size_t j = v + 1; j < n_; ++j) {
                Residue w = adj_[v * n_ + j];
                if (w != 0) {
                    if (w != 1) {
                        return false;
                    }
                    break;
                }
            }
        }
        return true;
    }

    const SearchSpec &spec_;
    Prime p_;
    std::size_t n_;
    const AmePredicate &pred_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<Residue> adj_;
    std::vector<std::uint64_t> rows_;
    std::vector<int> degree_;
    std::size_t degree_bound_;
};

void validate(const SearchSpec &spec) {
    if (!is_prime(spec.p)) {
        throw Error(ErrorCode::kNotPrime, std::to_string(spec.p) + " is not prime");
    }
    if (spec.group_size == 0 || spec.n % spec.group_size != 0) {
        throw Error(ErrorCode::kUnequalGroups, "vertex count must be a multiple of the group size");
    }
    if (spec.n < 2 || spec.n / spec.group_size < 2 || spec.n > 64) {
        throw Error(ErrorCode::kInvalidArgument, "need 2..64 vertices and at least two parties");
    }
    if (spec.workers == 0) {
        throw Error(ErrorCode::kInvalidArgument, "need at least one worker");
    }
    if (spec.group_size > 1 && spec.pruning.canonical) {
        throw Error(ErrorCode::kInvalidArgument, "relabeling pruning would mix parties in a grouped search");
    }
}

AmePredicate make_predicate(const SearchSpec &spec) {
    if (spec.group_size > 1) {
        return AmePredicate(Prime(spec.p), contiguous_groups(spec.n / spec.group_size, spec.group_size));
    }
    return AmePredicate(Prime(spec.p), spec.n);
}

SearchResult finish(const SearchSpec &spec, std::vector<Accumulator> &accs, bool exhaustive, double seconds) {
    SearchResult out;
    std::set<Key> keys;
    for (Accumulator &a : accs) {
        keys.insert(a.keys.begin(), a.keys.end());
        out.examined += a.examined;
        out.pruned += a.pruned;
    }
    for (const Key &k : keys) {
        out.witnesses.push_back(graph_from_key(Prime(spec.p), spec.n, k));
    }
    out.exhaustive = exhaustive;
    out.seconds = seconds;
    return out;
}

template <typename Body>
void run_workers(std::size_t workers, Body body) {
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back(body, w);
    }
    for (std::thread &t : threads) {
        t.join();
    }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double SearchResult::rate() const {
    return seconds > 0 ? static_cast<double>(examined) / seconds : 0.0;
}

Graph rescale_normal_form(const Graph &g) {
    Graph out = g;
    const Prime p = g.prime();
    for (std::size_t v = g.size(); v-- > 0;) {
        for (std::size_t j = v + 1; j < g.size(); ++j) {
            Residue w = out.weight(v, j);
            if (w != 0) {
                if (w != 1) {
                    out = op_mult(out, v, field_inv(w, p));
                }
                break;
            }
        }
    }
    return out;
}

bool is_rescale_normal(const Graph &g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (std::size_t j = v + 1; j < g.size(); ++j) {
            if (Residue w = g.weight(v, j); w != 0) {
                if (w != 1) {
                    return false;
                }
                break;
            }
        }
    }
    return true;
}

SearchResult enumerate(const SearchSpec &spec) {
    validate(spec);
    const AmePredicate pred = make_predicate(spec);
    const std::size_t edge_total = spec.n * (spec.n - 1) / 2;
    std::vector<Residue> alphabet;
    for (std::uint32_t w = 0; w < (spec.unit_weights ? 2u : spec.p); ++w) {
        alphabet.push_back(w);
    }
    const std::uint64_t a = alphabet.size();
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < edge_total; ++e) {
        if (total > spec.budget / a) {
            throw Error(ErrorCode::kBudgetExceeded, "search space exceeds the exhaustive budget");
        }
        total *= a;
    }
    // Shards fix the leading `prefix` edge weights.
    std::size_t prefix = 0;
    std::uint64_t shards = 1;
    while (prefix < edge_total && shards < 4 * spec.workers) {
        shards *= a;
        ++prefix;
    }
    std::vector<Accumulator> accs(spec.workers);
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> found{0};
    auto start = std::chrono::steady_clock::now();
    run_workers(spec.workers, [&](std::size_t w) {
        Worker worker(spec, pred);
        Accumulator &acc = accs[w];
        std::vector<std::size_t> digit(edge_total, 0);
        for (std::uint64_t shard = w; shard < shards && !stop; shard += spec.workers) {
            std::uint64_t rest = shard;
            for (std::size_t e = prefix; e-- > 0;) {
                digit[e] = rest % a;
                rest /= a;
            }
            for (std::size_t e = 0; e < edge_total; ++e) {
                if (e >= prefix) {
                    digit[e] = 0;
                }
                worker.set_weight(e, alphabet[digit[e]]);
            }
            while (true) {
                std::size_t before = acc.keys.size();
                worker.process(acc);
                if (spec.max_witnesses != 0 && acc.keys.size() != before &&
                    found.fetch_add(1) + 1 >= spec.max_witnesses) {
                    stop = true;
                }
                if (stop) {
                    break;
                }
                std::size_t e = edge_total;
                while (e > prefix) {
                    --e;
                    if (++digit[e] < a) {
                        worker.set_weight(e, alphabet[digit[e]]);
                        break;
                    }
                    digit[e] = 0;
                    worker.set_weight(e, alphabet[0]);
                    if (e == prefix) {
                        e = edge_total + 1;
                        break;
                    }
                }
                if (e == edge_total + 1 || edge_total == prefix) {
                    break;
                }
            }
        }
    });
    return finish(spec, accs, !stop, elapsed_since(start));
}

SearchResult random_search(const SearchSpec &spec) {
    validate(spec);
    if (spec.pruning.canonical || spec.pruning.rescale) {
        throw Error(ErrorCode::kInvalidArgument, "random search supports only the degree filter");
    }
    const AmePredicate pred = make_predicate(spec);
    const std::size_t want = spec.max_witnesses == 0 ? 1 : spec.max_witnesses;
    std::vector<Accumulator> accs(spec.workers);
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> found{0};
    auto start = std::chrono::steady_clock::now();
    run_workers(spec.workers, [&](std::size_t w) {
        Worker worker(spec, pred);
        Accumulator &acc = accs[w];
        std::mt19937_64 rng(spec.seed + w * 0x9E3779B97F4A7C15ULL);
        std::uniform_int_distribution<Residue> uniform(0, spec.p - 1);
        std::uniform_int_distribution<Residue> nonzero(1, spec.p - 1);
        std::uniform_int_distribution<Residue> bit(0, 1);
        const std::uint64_t share = spec.samples / spec.workers + (w < spec.samples % spec.workers ? 1 : 0);
        for (std::uint64_t s = 0; s < share && !stop; ++s) {
            for (std::size_t e = 0; e < worker.edge_count(); ++e) {
                Residue v = 0;
                switch (spec.sampling) {
                    case Sampling::kUniform:
                        v = uniform(rng);
                        break;
                    case Sampling::kDense:
                        v = spec.p == 2 ? 1 : nonzero(rng);
                        break;
                    case Sampling::kUnit:
                        v = bit(rng);
                        break;
                }
                worker.set_weight(e, v);
            }
            std::size_t before = acc.keys.size();
            worker.process(acc);
            if (acc.keys.size() != before && found.fetch_add(1) + 1 >= want) {
                stop = true;
            }
        }
    });
    return finish(spec, accs, false, elapsed_since(start));
}

SearchResult grouped_search(std::size_t n_parties, std::size_t group_size, std::uint32_t p, SearchSpec spec) {
    spec.n = n_parties * group_size;
    spec.p = p;
    spec.group_size = group_size;
    return run_search(spec);
}

SearchResult run_search(const SearchSpec &spec) {
    return spec.mode == SearchMode::kExhaustive ? enumerate(spec) : random_search(spec);
}

std::string format_stats(const SearchResult &r) {
    std::ostringstream out;
    out << "examined=" << r.examined << " pruned=" << r.pruned << " witnesses=" << r.witnesses.size()
        << " rate=" << static_cast<std::uint64_t>(std::llround(r.rate())) << "/s exhaustive=" << (r.exhaustive ? "yes" : "no");
    return out.str();
}

std::string format_witnesses(const SearchResult &r, const std::string &header) {
    std::ostringstream out;
    out << "# " << header << '\n';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        out << (i == 0 ? "" : "\n") << to_text(r.witnesses[i]);
    }
    return out.str();
}

}  // namespace amegraph

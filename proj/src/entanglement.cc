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

#include "amegraph/entanglement.h"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>

#include "amegraph/error.h"

namespace amegraph {

std::vector<VertexSet> combinations(std::size_t n, std::size_t k) {
    std::vector<VertexSet> out;
    if (k > n) {
        return out;
    }
    VertexSet c(k);
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = i;
    }
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

namespace {

void check_bipartition(const VertexSet &k, std::size_t n) {
    if (k.empty() || k.size() >= n || !is_vertex_set(k, n)) {
        throw Error(ErrorCode::kInvalidArgument, "bipartition side must be a nonempty proper sorted subset");
    }
}

}  // namespace

FieldMat cut_matrix(const Graph &g, const VertexSet &k) {
    check_bipartition(k, g.size());
    FieldMat m(g.prime(), k.size(), g.size() - k.size());
    for (std::size_t r = 0; r < k.size(); ++r) {
        FieldVec row = row_restrict(g, k[r], k);
        for (std::size_t c = 0; c < row.size(); ++c) {
            m.set(r, c, row[c]);
        }
    }
    return m;
}

std::size_t cut_edits(const Graph &g, const VertexSet &k) {
    return mat_rank(cut_matrix(g, k));
}

bool is_ame(const Graph &g) {
    if (g.size() < 2) {
        throw Error(ErrorCode::kInvalidArgument, "AME check needs at least two vertices");
    }
    return AmePredicate(g.prime(), g.size())(g);
}

AmeReport ame_report(const Graph &g, CutScope scope) {
    const std::size_t n = g.size();
    if (n < 2) {
        throw Error(ErrorCode::kInvalidArgument, "AME check needs at least two vertices");
    }
    AmeReport report;
    report.is_ame = true;
    std::size_t lo = scope == CutScope::kHalf ? n / 2 : 1;
    std::size_t hi = scope == CutScope::kHalf ? n / 2 : n - 1;
    for (std::size_t size = lo; size <= hi; ++size) {
        for (VertexSet &k : combinations(n, size)) {
            std::size_t rank = cut_edits(g, k);
            if (rank < std::min(size, n - size)) {
                if (!report.witness) {
                    report.witness = k;
                }
                report.is_ame = false;
            }
            report.cuts.push_back({std::move(k), rank});
        }
    }
    return report;
}

std::string format_report(const AmeReport &report) {
    std::ostringstream out;
    out << "AME " << (report.is_ame ? "yes" : "no") << '\n';
    if (report.witness) {
        out << "WITNESS " << format_vertex_set(*report.witness) << '\n';
    }
    for (const CutRank &c : report.cuts) {
        out << "CUT {" << format_vertex_set(c.k) << "} RANK " << c.rank << '\n';
    }
    return out.str();
}

std::vector<VertexSet> contiguous_groups(std::size_t parties, std::size_t group_size) {
    std::vector<VertexSet> groups(parties);
    for (std::size_t i = 0; i < parties; ++i) {
        for (std::size_t j = 0; j < group_size; ++j) {
            groups[i].push_back(i * group_size + j);
        }
    }
    return groups;
}

namespace {

void check_groups(const std::vector<VertexSet> &groups, std::size_t n) {
    if (groups.size() < 2) {
        throw Error(ErrorCode::kUnequalGroups, "need at least two parties");
    }
    std::vector<bool> seen(n, false);
    std::size_t total = 0;
    for (const VertexSet &grp : groups) {
        if (grp.empty() || grp.size() != groups[0].size() || !is_vertex_set(grp, n)) {
            throw Error(ErrorCode::kUnequalGroups, "groups must be nonempty, sorted and of equal size");
        }
        for (Vertex v : grp) {
            if (seen[v]) {
                throw Error(ErrorCode::kUnequalGroups, "groups overlap");
            }
            seen[v] = true;
        }
        total += grp.size();
    }
    if (total != n) {
        throw Error(ErrorCode::kUnequalGroups, "groups do not cover every vertex");
    }
}

VertexSet union_of(const std::vector<VertexSet> &groups, const VertexSet &parties) {
    VertexSet k;
    for (std::size_t party : parties) {
        k.insert(k.end(), groups[party].begin(), groups[party].end());
    }
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

AmeReport is_ame_grouped(const Graph &g, const std::vector<VertexSet> &groups) {
    check_groups(groups, g.size());
    AmeReport report;
    report.is_ame = true;
    for (const VertexSet &parties : combinations(groups.size(), groups.size() / 2)) {
        // Complementary cuts of an even party count have equal rank.
        if (groups.size() % 2 == 0 && parties[0] != 0) {
            continue;
        }
        VertexSet k = union_of(groups, parties);
        std::size_t rank = cut_edits(g, k);
        if (rank < k.size()) {
            if (!report.witness) {
                report.witness = k;
            }
            report.is_ame = false;
        }
        report.cuts.push_back({std::move(k), rank});
    }
    return report;
}

// ---------------------------------------------------------------------------
// AmePredicate

AmePredicate::AmePredicate(Prime p, std::size_t n) : p_(p), n_(n), inv_(inverse_table(p)) {
    if (n < 2 || n > 64) {
        throw Error(ErrorCode::kInvalidArgument, "predicate supports 2..64 vertices");
    }
    // For even n a half cut and its complement have equal rank, so the cuts
    // containing vertex 0 cover every class.
    for (const VertexSet &k : combinations(n, n / 2)) {
        if (n % 2 == 0 && k[0] != 0) {
            continue;
        }
        add_cut(k);
    }
}

AmePredicate::AmePredicate(Prime p, std::vector<VertexSet> groups) : p_(p), n_(0), inv_(inverse_table(p)) {
    for (const VertexSet &grp : groups) {
        n_ += grp.size();
    }
    check_groups(groups, n_);
    if (n_ > 64) {
        throw Error(ErrorCode::kInvalidArgument, "predicate supports at most 64 vertices");
    }
    const std::size_t parties = groups.size();
    for (const VertexSet &sel : combinations(parties, parties / 2)) {
        if (parties % 2 == 0 && sel[0] != 0) {
            continue;
        }
        add_cut(union_of(groups, sel));
    }
}

void AmePredicate::add_cut(const VertexSet &k) {
    Cut cut{0, {}, {}};
    std::vector<bool> in(n_, false);
    for (Vertex v : k) {
        in[v] = true;
        cut.mask |= std::uint64_t{1} << v;
        cut.members.push_back(static_cast<std::uint8_t>(v));
    }
    for (Vertex v = 0; v < n_; ++v) {
        if (!in[v]) {
            cut.others.push_back(static_cast<std::uint8_t>(v));
        }
    }
    cuts_.push_back(std::move(cut));
}

bool AmePredicate::generic_full_rank(const Cut &cut, std::span<const Residue> adjacency) const {
    // Row echelon reduction with early exit on the first dependent row.
    constexpr std::size_t kMax = 64;
    const std::uint32_t p = p_.value();
    const std::size_t rows = cut.members.size();
    const std::size_t cols = cut.others.size();
    std::array<std::array<Residue, kMax>, kMax> m;
    for (std::size_t r = 0; r < rows; ++r) {
        const Residue *src = adjacency.data() + cut.members[r] * n_;
        for (std::size_t c = 0; c < cols; ++c) {
            m[r][c] = src[cut.others[c]];
        }
    }
    std::array<std::size_t, kMax> pivot_col;
    for (std::size_t r = 0; r < rows; ++r) {
        auto &row = m[r];
        for (std::size_t prev = 0; prev < r; ++prev) {
            Residue f = row[pivot_col[prev]];
            if (f == 0) {
                continue;
            }
            const auto &pr = m[prev];
            for (std::size_t c = 0; c < cols; ++c) {
                row[c] = static_cast<Residue>((row[c] + static_cast<std::uint64_t>(p - f) * pr[c]) % p);
            }
        }
        std::size_t pc = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] != 0) {
                pc = c;
                break;
            }
        }
        if (pc == cols) {
            return false;
        }
        Residue inv = inv_[row[pc]];
        for (std::size_t c = 0; c < cols; ++c) {
            row[c] = static_cast<Residue>(static_cast<std::uint64_t>(row[c]) * inv % p);
        }
        pivot_col[r] = pc;
    }
    return true;
}

bool AmePredicate::operator()(std::span<const Residue> adjacency) const {
    if (adjacency.size() != n_ * n_) {
        throw Error(ErrorCode::kDimensionMismatch, "adjacency size does not match the predicate");
    }
    if (p_.value() == 2) {
        std::array<std::uint64_t, 64> rows{};
        for (std::size_t v = 0; v < n_; ++v) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (adjacency[v * n_ + j] & 1U) {
                    rows[v] |= std::uint64_t{1} << j;
                }
            }
        }
        return check_packed(std::span<const std::uint64_t>(rows.data(), n_));
    }
    for (const Cut &cut : cuts_) {
        if (!generic_full_rank(cut, adjacency)) {
            return false;
        }
    }
    return true;
}

namespace {

// Each basis vector keeps a distinct lowest set bit that no other basis
// vector contains.
bool packed_rows_independent(std::span<const std::uint64_t> rows, const std::vector<std::uint8_t> &members,
                             std::uint64_t mask) {
    std::array<std::uint64_t, 64> basis;
    std::size_t count = 0;
    for (std::uint8_t v : members) {
        std::uint64_t x = rows[v] & ~mask;
        for (std::size_t b = 0; b < count; ++b) {
            if (x & basis[b] & (~basis[b] + 1)) {
                x ^= basis[b];
            }
        }
        if (x == 0) {
            return false;
        }
        std::uint64_t low = x & (~x + 1);
        for (std::size_t b = 0; b < count; ++b) {
            if (basis[b] & low) {
                basis[b] ^= x;
            }
        }
        basis[count++] = x;
    }
    return true;
}

}  // namespace

bool AmePredicate::check_packed(std::span<const std::uint64_t> rows) const {
    if (p_.value() != 2) {
        throw Error(ErrorCode::kInvalidArgument, "packed rows need p = 2");
    }
    for (const Cut &cut : cuts_) {
        if (!packed_rows_independent(rows, cut.members, cut.mask)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orbits

Graph apply_rewrite(const Graph &g, const Rewrite &r) {
    return r.kind == Rewrite::Kind::kMult ? op_mult(g, r.v, r.param) : op_star(g, r.v, r.param);
}

std::vector<Rewrite> OrbitResult::path_to(std::size_t index) const {
    std::vector<Rewrite> path;
    while (index != 0) {
        path.push_back(via[index]);
        index = parent[index];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

OrbitResult lc_orbit(const Graph &g, std::size_t max_nodes, bool collapse_canonical) {
    OrbitResult result;
    auto dedup_key = [&](const Graph &h) { return collapse_canonical ? canonical_form(h).key() : h.key(); };
    std::set<std::vector<Residue>> seen;
    const std::uint32_t p = g.prime().value();

    if (max_nodes == 0) {
        result.truncated = true;
        return result;
    }
    seen.insert(dedup_key(g));
    result.graphs.push_back(g);
    result.parent.push_back(0);
    result.via.push_back({Rewrite::Kind::kStar, 0, 0});

    std::vector<Rewrite> moves;
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Residue b = 2; b < p; ++b) {
            moves.push_back({Rewrite::Kind::kMult, v, b});
        }
        for (Residue a = 1; a < p; ++a) {
            moves.push_back({Rewrite::Kind::kStar, v, a});
        }
    }

    for (std::size_t head = 0; head < result.graphs.size(); ++head) {
        for (const Rewrite &move : moves) {
            Graph next = apply_rewrite(result.graphs[head], move);
            if (!seen.insert(dedup_key(next)).second) {
                continue;
            }
            if (result.graphs.size() >= max_nodes) {
                result.truncated = true;
                return result;
            }
            result.graphs.push_back(std::move(next));
            result.parent.push_back(head);
            result.via.push_back(move);
        }
    }
    return result;
}

Graph min_edge_representative(const Graph &g, std::size_t max_nodes) {
    OrbitResult orbit = lc_orbit(g, max_nodes);
    const Graph *best = &orbit.graphs.front();
    std::vector<Residue> best_canon = canonical_form(*best).key();
    for (const Graph &h : orbit.graphs) {
        if (h.edge_count() > best->edge_count()) {
            continue;
        }
        std::vector<Residue> canon = canonical_form(h).key();
        bool better = h.edge_count() < best->edge_count() || canon < best_canon ||
                      (canon == best_canon && h.key() < best->key());
        if (better) {
            best = &h;
            best_canon = std::move(canon);
        }
    }
    return *best;
}

}  // namespace amegraph

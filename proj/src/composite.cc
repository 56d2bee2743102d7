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

#include "amegraph/composite.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "amegraph/error.h"
#include "text.h"

namespace amegraph {

namespace {

struct BuiltinText {
    std::string_view name;
    std::string_view text;
};

constexpr BuiltinText kBuiltins[] = {
#include "builtin_witnesses.inc"
};

bool passes(const Graph &g, std::size_t group_size) {
    if (group_size == 1) {
        return is_ame(g);
    }
    return is_ame_grouped(g, contiguous_groups(g.size() / group_size, group_size)).is_ame;
}

std::string format_bits(double bits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << bits;
    return out.str();
}

}  // namespace

std::vector<std::uint32_t> factorize(std::uint64_t d) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidArgument, "dimension must be at least 2");
    }
    std::vector<std::uint32_t> out;
    for (std::uint64_t q = 2; q * q <= d; ++q) {
        while (d % q == 0) {
            out.push_back(static_cast<std::uint32_t>(q));
            d /= q;
        }
    }
    if (d > 1) {
        out.push_back(static_cast<std::uint32_t>(d));
    }
    return out;
}

std::vector<std::string> builtin_witness_names() {
    std::vector<std::string> out;
    for (const BuiltinText &b : kBuiltins) {
        out.emplace_back(b.name);
    }
    return out;
}

std::string builtin_witness_text(std::string_view name) {
    for (const BuiltinText &b : kBuiltins) {
        if (b.name == name) {
            return std::string(b.text);
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown built-in witness '" + std::string(name) + "'");
}

Graph builtin_witness(std::string_view name) {
    return parse_graph(builtin_witness_text(name));
}

WitnessRegistry WitnessRegistry::builtin() {
    WitnessRegistry r;
    r.add(builtin_witness("c5"), 1, true);
    r.add(builtin_witness("quad_weighted"), 1, true);
    r.add(builtin_witness("ame6_2"));
    r.add(builtin_witness("ame7_3"));
    r.add(builtin_witness("grouped_ame4x2_2"), 2);
    return r;
}

void WitnessRegistry::add(Graph g, std::size_t group_size, bool lifts) {
    if (group_size == 0 || g.size() % group_size != 0) {
        throw Error(ErrorCode::kUnequalGroups, "vertex count must be a multiple of the group size");
    }
    if (!passes(g, group_size)) {
        throw Error(ErrorCode::kNotAme, "witness fails the rank check");
    }
    entries_.push_back({std::move(g), group_size, lifts});
}

std::optional<Graph> WitnessRegistry::find(Prime p, std::size_t parties, std::size_t group_size) const {
    for (const Entry &e : entries_) {
        if (e.group_size != group_size || e.graph.size() != parties * group_size) {
            continue;
        }
        if (e.graph.prime() == p) {
            return e.graph;
        }
        if (e.lifts && e.graph.prime().value() < p.value()) {
            Graph lifted = e.graph.with_prime(p);
            if (passes(lifted, group_size)) {
                return lifted;
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexSet> CompositeFactor::groups() const {
    return contiguous_groups(graph.size() / group_size, group_size);
}

CompositeAme make_composite(std::vector<CompositeFactor> factors) {
    if (factors.empty()) {
        throw Error(ErrorCode::kInvalidInput, "a composite needs at least one factor");
    }
    CompositeAme c{0, 1, {}};
    for (const CompositeFactor &f : factors) {
        if (f.group_size == 0 || f.graph.size() % f.group_size != 0 || f.graph.prime() != f.p) {
            throw Error(ErrorCode::kInvalidInput, "factor graph does not match its prime and group size");
        }
        std::size_t parties = f.graph.size() / f.group_size;
        if (c.parties != 0 && parties != c.parties) {
            throw Error(ErrorCode::kInvalidInput, "factors disagree on the number of parties");
        }
        c.parties = parties;
        for (std::size_t i = 0; i < f.group_size; ++i) {
            c.d *= f.p.value();
        }
    }
    if (c.parties < 2) {
        throw Error(ErrorCode::kInvalidInput, "a composite needs at least two parties");
    }
    std::stable_sort(factors.begin(), factors.end(), [](const CompositeFactor &a, const CompositeFactor &b) {
        return std::pair(a.p.value(), a.group_size) < std::pair(b.p.value(), b.group_size);
    });
    c.factors = std::move(factors);
    return c;
}

CompositeAme build_composite(std::size_t parties, std::uint64_t d, const WitnessRegistry &registry) {
    std::map<std::uint32_t, std::size_t> multiplicity;
    for (std::uint32_t p : factorize(d)) {
        ++multiplicity[p];
    }
    std::vector<CompositeFactor> factors;
    for (auto [p, k] : multiplicity) {
        Prime prime(p);
        if (std::optional<Graph> g = registry.find(prime, parties, 1)) {
            for (std::size_t i = 0; i < k; ++i) {
                factors.push_back({prime, *g, 1});
            }
        } else if (std::optional<Graph> grouped = k > 1 ? registry.find(prime, parties, k) : std::nullopt) {
            factors.push_back({prime, *grouped, k});
        } else {
            throw Error(ErrorCode::kMissingWitness, "no AME(" + std::to_string(parties) + "," + std::to_string(p) +
                                                        ") witness" +
                                                        (k > 1 ? " or grouped witness of size " + std::to_string(k)
                                                               : std::string()));
        }
    }
    return make_composite(std::move(factors));
}

CompositeReport verify_composite(const CompositeAme &c) {
    CompositeReport r;
    r.is_ame = true;
    for (const CompositeFactor &f : c.factors) {
        FactorCheck check{f.p, f.group_size, is_ame_grouped(f.graph, f.groups()), std::nullopt};
        if (f.group_size > 1) {
            check.ungrouped = ame_report(f.graph, CutScope::kHalf);
        }
        r.is_ame = r.is_ame && check.grouped.is_ame;
        r.factors.push_back(std::move(check));
    }
    const double log_d = std::log2(static_cast<double>(c.d));
    for (const VertexSet &parties : combinations(c.parties, c.parties / 2)) {
        if (c.parties % 2 == 0 && parties[0] != 0) {
            continue;
        }
        PartyCut cut{parties, {}, 0.0, static_cast<double>(parties.size()) * log_d};
        for (const CompositeFactor &f : c.factors) {
            VertexSet k;
            for (Vertex party : parties) {
                for (std::size_t t = 0; t < f.group_size; ++t) {
                    k.push_back(party * f.group_size + t);
                }
            }
            std::size_t rank = cut_edits(f.graph, k);
            cut.ranks.push_back(rank);
            cut.bits += static_cast<double>(rank) * std::log2(static_cast<double>(f.p.value()));
        }
        r.cuts.push_back(std::move(cut));
    }
    return r;
}

std::string format_composite_report(const CompositeAme &c, const CompositeReport &r) {
    std::ostringstream out;
    out << "COMPOSITE n=" << c.parties << " d=" << c.d << " factors=";
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
        out << (i ? "*" : "") << c.factors[i].p.value();
        if (c.factors[i].group_size > 1) {
            out << '^' << c.factors[i].group_size;
        }
    }
    out << '\n';
    for (const FactorCheck &f : r.factors) {
        out << "FACTOR p=" << f.p.value() << " groupsize=" << f.group_size << " AME "
            << (f.grouped.is_ame ? "yes" : "no");
        if (f.grouped.witness) {
            out << " WITNESS " << format_vertex_set(*f.grouped.witness);
        }
        out << '\n';
    }
    for (const PartyCut &cut : r.cuts) {
        out << "PARTYCUT {" << format_vertex_set(cut.parties) << "} RANKS";
        for (std::size_t rank : cut.ranks) {
            out << ' ' << rank;
        }
        out << " BITS " << format_bits(cut.bits) << " OF " << format_bits(cut.max_bits) << '\n';
    }
    for (const FactorCheck &f : r.factors) {
        if (f.ungrouped) {
            out << "UNGROUPED p=" << f.p.value() << " AME " << (f.ungrouped->is_ame ? "yes" : "no");
            if (f.ungrouped->witness) {
                out << " WITNESS " << format_vertex_set(*f.ungrouped->witness);
            }
            out << '\n';
        }
    }
    out << "AME " << (r.is_ame ? "yes" : "no") << '\n';
    return out.str();
}

CompositeAme parse_manifest(std::string_view text, const std::string &base_dir) {
    using detail::at_line;
    std::vector<CompositeFactor> factors;
    for (const auto &block : detail::split_blocks(text)) {
        for (const detail::Line &line : block) {
            std::istringstream in{std::string(line.text)};
            std::string keyword, file, group_keyword, extra;
            long long p = 0, g = 0;
            if (!(in >> keyword >> p >> file >> group_keyword >> g) || keyword != "factor" ||
                group_keyword != "groupsize" || (in >> extra)) {
                throw Error(ErrorCode::kParseError, at_line(line.number) + "expected 'factor p FILE groupsize g'");
            }
            if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || g < 1) {
                throw Error(ErrorCode::kParseError, at_line(line.number) + "bad prime or group size");
            }
            Prime prime(static_cast<std::uint32_t>(p));
            Graph graph = file.rfind("builtin:", 0) == 0
                              ? builtin_witness(file.substr(8))
                              : read_graph_file((std::filesystem::path(base_dir) / file).string());
            if (graph.prime() != prime) {
                graph = graph.with_prime(prime);
            }
            factors.push_back({prime, std::move(graph), static_cast<std::size_t>(g)});
        }
    }
    try {
        return make_composite(std::move(factors));
    } catch (const Error &e) {
        throw Error(ErrorCode::kParseError, e.what());
    }
}

CompositeAme read_manifest_file(const std::string &path) {
    return parse_manifest(read_text_file(path), std::filesystem::path(path).parent_path().string());
}

}  // namespace amegraph

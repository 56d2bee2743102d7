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

#include "amegraph/qss.h"

#include <algorithm>
#include <cmath>

#include "amegraph/entanglement.h"
#include "amegraph/error.h"

namespace amegraph {

namespace {

std::size_t power_of(std::uint32_t p, std::size_t e) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= p;
    }
    return v;
}

// Little-endian digits of index over `count` base-p positions.
std::vector<Residue> digits_of(std::size_t index, std::uint32_t p, std::size_t count) {
    std::vector<Residue> d(count);
    for (std::size_t i = 0; i < count; ++i) {
        d[i] = static_cast<Residue>(index % p);
        index /= p;
    }
    return d;
}

std::size_t position_of(const VertexSet &players, Vertex v) {
    auto it = std::lower_bound(players.begin(), players.end(), v);
    if (it == players.end() || *it != v) {
        throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v + 1) + " is not a player");
    }
    return static_cast<std::size_t>(it - players.begin());
}

// Sum over dealer pairs l < l' of A_{D_l D_l'} i_l i_l'.
std::uint64_t dealer_phase(const RampScheme &scheme, const std::vector<Residue> &i) {
    const VertexSet &d = scheme.dealers();
    std::uint64_t acc = 0;
    for (std::size_t l = 0; l < d.size(); ++l) {
        for (std::size_t t = l + 1; t < d.size(); ++t) {
            acc += static_cast<std::uint64_t>(scheme.graph().weight(d[l], d[t])) * i[l] * i[t];
        }
    }
    return acc;
}

void check_secret(const RampScheme &scheme, const Secret &secret, const std::vector<BellOutcome> &outcomes) {
    if (secret.size() != scheme.secret_dim()) {
        throw Error(ErrorCode::kDimensionMismatch, "secret must have p^L amplitudes");
    }
    double norm = 0;
    for (const Complex &a : secret) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-9) {
        throw Error(ErrorCode::kInvalidArgument, "secret must be normalized");
    }
    if (outcomes.size() != scheme.registers()) {
        throw Error(ErrorCode::kDimensionMismatch, "one Bell outcome per dealer");
    }
    for (const BellOutcome &o : outcomes) {
        if (o.g >= scheme.graph().prime().value() || o.h >= scheme.graph().prime().value()) {
            throw Error(ErrorCode::kWeightOutOfRange, "Bell outcome out of range");
        }
    }
}

}  // namespace

RampScheme::RampScheme(Graph graph, VertexSet dealers) : graph_(std::move(graph)), dealers_(std::move(dealers)) {
    const std::size_t n = graph_.size();
    if (n < 2 || n % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "secret sharing needs an even number of vertices");
    }
    if (dealers_.empty() || dealers_.size() > n / 2 || !is_vertex_set(dealers_, n)) {
        throw Error(ErrorCode::kInvalidArgument, "need 1 <= L <= n/2 distinct sorted dealers");
    }
    if (!is_ame(graph_)) {
        throw Error(ErrorCode::kNotAme, "secret sharing needs an AME graph");
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!std::binary_search(dealers_.begin(), dealers_.end(), v)) {
            players_.push_back(v);
        }
    }
}

std::size_t RampScheme::secret_dim() const {
    return power_of(graph_.prime().value(), dealers_.size());
}

ThresholdScheme::ThresholdScheme(Graph graph, Vertex dealer) : ramp_(std::move(graph), VertexSet{dealer}) {}

StateVector encode(const RampScheme &scheme, const Secret &secret, const std::vector<BellOutcome> &outcomes) {
    check_secret(scheme, secret, outcomes);
    const Prime p = scheme.graph().prime();
    const std::size_t n = scheme.graph().size();
    const std::size_t l_count = scheme.registers();
    StateVector state = tensor(build_graph_state(scheme.graph()), StateVector(p, l_count, secret));
    std::vector<std::size_t> ids(n + l_count);
    for (std::size_t q = 0; q < ids.size(); ++q) {
        ids[q] = q;
    }
    const double expected = 1.0 / (static_cast<double>(p.value()) * p.value());
    for (std::size_t l = 0; l < l_count; ++l) {
        auto ancilla = std::find(ids.begin(), ids.end(), n + l) - ids.begin();
        auto dealer = std::find(ids.begin(), ids.end(), scheme.dealers()[l]) - ids.begin();
        Measured m = bell_measure(state, static_cast<std::size_t>(ancilla), static_cast<std::size_t>(dealer),
                                  outcomes[l].g, outcomes[l].h);
        if (std::abs(m.probability - expected) > 1e-9) {
            throw Error(ErrorCode::kInternalError, "Bell outcome probability differs from 1/p^2");
        }
        state = std::move(m.state);
        ids.erase(ids.begin() + std::max(ancilla, dealer));
        ids.erase(ids.begin() + std::min(ancilla, dealer));
    }
    return state;
}

StateVector encode(const ThresholdScheme &scheme, const Secret &secret, BellOutcome outcome) {
    return encode(scheme.as_ramp(), secret, {outcome});
}

StateVector SymbolicEncoding::to_state() const {
    StateVector out(graph.prime(), graph.size());
    std::vector<Complex> acc(out.dim(), Complex(0));
    for (std::size_t t = 0; t < beta.size(); ++t) {
        if (beta[t] == Complex(0)) {
            continue;
        }
        StateVector term = build_labeled(LabeledGraph(graph, labels[t]));
        for (std::size_t x = 0; x < acc.size(); ++x) {
            acc[x] += beta[t] * term[x];
        }
    }
    return StateVector(graph.prime(), graph.size(), std::move(acc));
}

SymbolicEncoding encode_symbolic(const RampScheme &scheme, const Secret &secret,
                                 const std::vector<BellOutcome> &outcomes) {
    check_secret(scheme, secret, outcomes);
    const Prime p = scheme.graph().prime();
    const std::uint32_t q = p.value();
    const VertexSet &d = scheme.dealers();
    SymbolicEncoding out{truncate(scheme.graph(), d), {}, {}};
    for (std::size_t index = 0; index < secret.size(); ++index) {
        std::vector<Residue> i = digits_of(index, q, d.size());
        // beta_i = <i| U_gh^dagger |s> per register, times the dealer-edge phase.
        std::size_t source = 0;
        std::uint64_t phase = dealer_phase(scheme, i);
        for (std::size_t l = d.size(); l-- > 0;) {
            Residue shifted = mod_sub(i[l], outcomes[l].h, p);
            source = source * q + shifted;
            phase += static_cast<std::uint64_t>(q - outcomes[l].g) * shifted;
        }
        FieldVec label(p, out.graph.size());
        for (std::size_t l = 0; l < d.size(); ++l) {
            label = label + row_restrict(scheme.graph(), d[l], d).scaled(i[l]);
        }
        out.beta.push_back(root_of_unity(p, phase) * secret[source]);
        out.labels.push_back(std::move(label));
    }
    return out;
}

Eigen::MatrixXcd RecoveryMap::matrix() const {
    const Prime p = b_graph.prime();
    const std::uint32_t q = p.value();
    const std::size_t m = b.size();
    const std::size_t dim = power_of(q, m);
    Eigen::MatrixXcd v(dim, dim);
    for (std::size_t row = 0; row < dim; ++row) {
        std::vector<Residue> ia = digits_of(row, q, m);
        FieldVec label = rows.transpose() * FieldVec(p, ia);
        std::uint64_t phase = 0;
        for (const auto &[reg, other, w] : phase_terms) {
            phase += static_cast<std::uint64_t>(w) * ia[reg] * ia[other];
        }
        StateVector labeled = build_labeled(LabeledGraph(b_graph, label));
        Complex factor = root_of_unity(p, (q - phase % q) % q);
        for (std::size_t x = 0; x < dim; ++x) {
            v(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(x)) = factor * std::conj(labeled[x]);
        }
    }
    return v;
}

RecoveryMap recovery_map(const RampScheme &scheme, const VertexSet &b_in) {
    const std::size_t m = scheme.threshold();
    const VertexSet &players = scheme.players();
    if (b_in.size() < m || !is_vertex_set(b_in, scheme.graph().size())) {
        throw Error(ErrorCode::kNotAuthorized, "an authorized set needs at least n/2 distinct players");
    }
    for (Vertex v : b_in) {
        if (!std::binary_search(players.begin(), players.end(), v)) {
            throw Error(ErrorCode::kNotAuthorized, "dealers cannot be part of an authorized set");
        }
    }
    const Graph &g = scheme.graph();
    const Prime p = g.prime();
    RecoveryMap map{VertexSet(b_in.begin(), b_in.begin() + static_cast<std::ptrdiff_t>(m)), {}, FieldMat(p, m, m),
                    FieldMat(p, 0, 0), Graph(p, 0), {}};
    for (Vertex v : players) {
        if (!std::binary_search(map.b.begin(), map.b.end(), v)) {
            map.k.push_back(v);
        }
    }
    std::vector<Vertex> sources(scheme.dealers().begin(), scheme.dealers().end());
    sources.insert(sources.end(), map.k.begin(), map.k.end());
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            map.rows.set(r, c, g.weight(sources[r], map.b[c]));
        }
    }
    try {
        map.rows_inverse = mat_inverse(map.rows);
    } catch (const Error &) {
        throw Error(ErrorCode::kNotAuthorized, "restricted rows are dependent");
    }
    VertexSet outside;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!std::binary_search(map.b.begin(), map.b.end(), v)) {
            outside.push_back(v);
        }
    }
    map.b_graph = truncate(g, outside);
    const std::size_t l_count = scheme.registers();
    const VertexSet &d = scheme.dealers();
    for (std::size_t l = 0; l < l_count; ++l) {
        for (std::size_t t = l + 1; t < l_count; ++t) {
            if (Residue w = g.weight(d[l], d[t]); w != 0) {
                map.phase_terms.push_back({l, t, w});
            }
        }
        for (std::size_t t = 0; t < map.k.size(); ++t) {
            if (Residue w = g.weight(d[l], map.k[t]); w != 0) {
                map.phase_terms.push_back({l, l_count + t, w});
            }
        }
    }
    return map;
}

namespace {

double run_protocol(const RampScheme &scheme, const Secret &secret, const std::vector<BellOutcome> &outcomes,
                    const VertexSet &b) {
    RecoveryMap map = recovery_map(scheme, b);
    StateVector state = encode(scheme, secret, outcomes);
    std::vector<std::size_t> positions;
    for (Vertex v : map.b) {
        positions.push_back(position_of(scheme.players(), v));
    }
    state = apply_unitary(state, positions, map.matrix());
    const std::size_t l_count = scheme.registers();
    for (std::size_t l = 0; l < l_count; ++l) {
        state = apply_ugh(state, positions[l], outcomes[l].g, outcomes[l].h);
    }
    std::vector<std::size_t> registers(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(l_count));
    DensityMatrix rho = reduced_density(state, registers);
    Eigen::Map<const Eigen::VectorXcd> s(secret.data(), static_cast<Eigen::Index>(secret.size()));
    return (s.adjoint() * rho.rho * s)(0, 0).real();
}

}  // namespace

double run_threshold(const ThresholdScheme &scheme, const Secret &secret, const VertexSet &b, BellOutcome outcome) {
    return run_protocol(scheme.as_ramp(), secret, {outcome}, b);
}

double run_ramp(const RampScheme &scheme, const Secret &secret, const VertexSet &b) {
    return run_protocol(scheme, secret, std::vector<BellOutcome>(scheme.registers()), b);
}

Secret random_secret(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Secret s(dim);
    double norm = 0;
    for (Complex &a : s) {
        a = Complex(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    for (Complex &a : s) {
        a /= std::sqrt(norm);
    }
    return s;
}

double audit_forbidden(const RampScheme &scheme, const VertexSet &f, std::size_t trials, std::uint64_t seed) {
    if (f.empty() || !is_vertex_set(f, scheme.graph().size())) {
        throw Error(ErrorCode::kInvalidArgument, "forbidden set must be a nonempty sorted vertex set");
    }
    std::vector<std::size_t> positions;
    for (Vertex v : f) {
        positions.push_back(position_of(scheme.players(), v));
    }
    std::mt19937_64 rng(seed);
    const std::vector<BellOutcome> outcomes(scheme.registers());
    double worst = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Secret a = random_secret(scheme.secret_dim(), rng);
        Secret b = random_secret(scheme.secret_dim(), rng);
        DensityMatrix ra = reduced_density(encode(scheme, a, outcomes), positions);
        DensityMatrix rb = reduced_density(encode(scheme, b, outcomes), positions);
        worst = std::max(worst, trace_distance(ra, rb));
    }
    return worst;
}

}  // namespace amegraph

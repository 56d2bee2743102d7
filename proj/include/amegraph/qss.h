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

#ifndef AMEGRAPH_QSS_H
#define AMEGRAPH_QSS_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "amegraph/graph.h"
#include "amegraph/simulator.h"

namespace amegraph {

/// Amplitudes over p^L values; register l is the l-th least significant
/// digit and belongs to dealer l.
using Secret = std::vector<Complex>;

/// Bell outcome (g, h) of one dealer.
struct BellOutcome {
    Residue g = 0;
    Residue h = 0;
};

/// (m, L, 2m - L) ramp scheme on an AME(2m, p) graph. Dealer l holds the
/// ancilla for secret register l; every other vertex is a player.
class RampScheme {
   public:
    /// Throws NotAme, or InvalidArgument for odd n, 1 > L, L > m or a bad
    /// dealer set.
    RampScheme(Graph graph, VertexSet dealers);

    const Graph &graph() const noexcept {
        return graph_;
    }
    const VertexSet &dealers() const noexcept {
        return dealers_;
    }
    /// Recovery threshold n/2.
    std::size_t threshold() const noexcept {
        return graph_.size() / 2;
    }
    std::size_t registers() const noexcept {
        return dealers_.size();
    }
    /// Non-dealer vertices in ascending order; qudit t of an encoded state
    /// belongs to players()[t].
    const VertexSet &players() const noexcept {
        return players_;
    }
    std::size_t secret_dim() const;

   private:
    Graph graph_;
    VertexSet dealers_;
    VertexSet players_;
};

/// ((m, 2m - 1)) scheme: the single-dealer ramp scheme.
class ThresholdScheme {
   public:
    ThresholdScheme(Graph graph, Vertex dealer = 0);

    const Graph &graph() const noexcept {
        return ramp_.graph();
    }
    Vertex dealer() const noexcept {
        return ramp_.dealers()[0];
    }
    std::size_t threshold() const noexcept {
        return ramp_.threshold();
    }
    const VertexSet &players() const noexcept {
        return ramp_.players();
    }
    const RampScheme &as_ramp() const noexcept {
        return ramp_;
    }

   private:
    RampScheme ramp_;
};

/// Dense encoding: secret ancillas are appended after the graph qudits and
/// each dealer is Bell-measured against its ancilla with the chosen outcome.
/// Returns the normalized state of players().
StateVector encode(const RampScheme &scheme, const Secret &secret, const std::vector<BellOutcome> &outcomes);
StateVector encode(const ThresholdScheme &scheme, const Secret &secret, BellOutcome outcome = {});

/// sum_i beta_i |G minus dealers, label_i>, where label_i = sum_l i_l A_{D_l}
/// restricted to the players and beta_i = <i|U_gh^dagger|s> up to the phase
/// omega^{sum_{l<l'} A_{D_l D_l'} i_l i_l'} from edges between dealers.
struct SymbolicEncoding {
    Graph graph;
    std::vector<Complex> beta;
    std::vector<FieldVec> labels;

    StateVector to_state() const;
};

SymbolicEncoding encode_symbolic(const RampScheme &scheme, const Secret &secret,
                                 const std::vector<BellOutcome> &outcomes);

/// Basis change on the first m members of an authorized set B:
/// |G_B, (i, a) R> -> omega^{-phase(i, a)} |i, a>. K holds the other players,
/// a runs over Z-values of K and R stacks the dealer rows and K rows
/// restricted to B. The phase covers the dealer-K edges, which couple the
/// secret index to the traced-out players, and the edges between dealers.
struct RecoveryMap {
    /// Vertices V acts on; the first L carry the recovered registers.
    VertexSet b;
    /// Players outside b.
    VertexSet k;
    /// m x m matrix R and its inverse.
    FieldMat rows;
    FieldMat rows_inverse;
    Graph b_graph;
    /// Entries (x, y, w) of the phase w * c_x * c_y removed from |c>, with c
    /// the m-digit index (i, a).
    struct PhaseTerm {
        std::size_t x;
        std::size_t y;
        Residue w;
    };
    std::vector<PhaseTerm> phase_terms;

    /// p^m x p^m unitary, little-endian over b.
    Eigen::MatrixXcd matrix() const;
};

/// Throws NotAuthorized unless B has at least m players and no dealer.
RecoveryMap recovery_map(const RampScheme &scheme, const VertexSet &b);

/// Recovers every register from B and returns the fidelity with the secret.
double run_threshold(const ThresholdScheme &scheme, const Secret &secret, const VertexSet &b,
                     BellOutcome outcome = {});
/// Dealer outcomes fixed to (0, 0).
double run_ramp(const RampScheme &scheme, const Secret &secret, const VertexSet &b);

/// Largest trace distance between the reduced states of F over `trials`
/// random secret pairs.
double audit_forbidden(const RampScheme &scheme, const VertexSet &f, std::size_t trials, std::uint64_t seed);

/// Normalized Gaussian random secret.
Secret random_secret(std::size_t dim, std::mt19937_64 &rng);

}  // namespace amegraph

#endif

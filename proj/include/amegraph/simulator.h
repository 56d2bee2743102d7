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

#ifndef AMEGRAPH_SIMULATOR_H
#define AMEGRAPH_SIMULATOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "amegraph/gfp.h"
#include "amegraph/graph.h"
#include "amegraph/stabilizer.h"

namespace amegraph {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultAmplitudeCap = std::uint64_t{1} << 20;

/// p^n, or cap + 1 once it exceeds cap.
std::uint64_t capped_power(Prime p, std::size_t n, std::uint64_t cap);

/// Dense state over n qudits. Qudit 0 is the least significant base-p digit
/// of the amplitude index.
class StateVector {
   public:
    /// |0...0>. Throws TooLarge when p^n exceeds cap.
    StateVector(Prime p, std::size_t n, std::uint64_t cap = kDefaultAmplitudeCap);
    StateVector(Prime p, std::size_t n, std::vector<Complex> amplitudes);

    Prime prime() const noexcept {
        return p_;
    }
    std::size_t qudits() const noexcept {
        return n_;
    }
    std::size_t dim() const noexcept {
        return amps_.size();
    }
    const std::vector<Complex> &amplitudes() const noexcept {
        return amps_;
    }
    Complex operator[](std::size_t index) const {
        return amps_[index];
    }
    /// p^i.
    std::size_t stride(std::size_t qudit) const {
        return strides_[qudit];
    }
    Residue digit(std::size_t index, std::size_t qudit) const {
        return static_cast<Residue>(index / strides_[qudit] % p_.value());
    }
    double norm() const;
    StateVector normalized() const;

   private:
    Prime p_;
    std::size_t n_;
    std::vector<std::size_t> strides_;
    std::vector<Complex> amps_;
};

/// omega^k with omega = exp(2 pi i / p), from a table.
Complex root_of_unity(Prime p, std::uint64_t k);

StateVector basis_state(Prime p, std::size_t n, std::span<const Residue> digits,
                        std::uint64_t cap = kDefaultAmplitudeCap);

StateVector apply_z(const StateVector &s, std::size_t i, Residue power = 1);
StateVector apply_x(const StateVector &s, std::size_t i, Residue power = 1);
/// F|k> = p^{-1/2} sum_j omega^{jk} |j>.
StateVector apply_f(const StateVector &s, std::size_t i);
StateVector apply_f_dag(const StateVector &s, std::size_t i);
StateVector apply_cz(const StateVector &s, std::size_t i, std::size_t j, Residue power = 1);
/// X^a Z^b (Z acts first), times i^{a.b} when p = 2 so that the operator is
/// Hermitian; no scalar for odd p.
StateVector apply_pauli(const StateVector &s, std::span<const Residue> a, std::span<const Residue> b);
/// U on the listed qudits; U's row index is little-endian over that list.
StateVector apply_unitary(const StateVector &s, std::span<const std::size_t> qudits, const Eigen::MatrixXcd &u);
/// U_gh = sum_j omega^{jg} |j><j+h| on qudit i.
StateVector apply_ugh(const StateVector &s, std::size_t i, Residue g, Residue h);

/// Every qudit in F^dag|0>, then CZ^{A_ij} per edge.
StateVector build_graph_state(const Graph &g, std::uint64_t cap = kDefaultAmplitudeCap);
/// Z^z |G>.
StateVector build_labeled(const LabeledGraph &s, std::uint64_t cap = kDefaultAmplitudeCap);

/// The common +1 eigenvector of the generators (scalars as in apply_pauli),
/// for k = n. Global phase is arbitrary.
StateVector stabilizer_state(const GeneratorMatrix &m, std::uint64_t cap = kDefaultAmplitudeCap);

/// a's qudits first.
StateVector tensor(const StateVector &a, const StateVector &b, std::uint64_t cap = kDefaultAmplitudeCap);
/// Moves qudit order[k] to position k.
StateVector reorder_qudits(const StateVector &s, std::span<const std::size_t> order);

/// <a|b>.
Complex inner(const StateVector &a, const StateVector &b);
/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

struct DensityMatrix {
    Prime p;
    /// Kept qudits; rows are little-endian over this list.
    std::vector<std::size_t> qudits;
    Eigen::MatrixXcd rho;
};

/// Partial trace over the complement of the kept qudits.
DensityMatrix reduced_density(const StateVector &s, std::span<const std::size_t> keep);
/// Von Neumann entropy in units of log p.
double entropy_edits(const DensityMatrix &rho);
/// S(rho_K) in edits, computed on the smaller side of the cut.
double cut_entropy(const StateVector &s, const VertexSet &k);
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

struct Measured {
    double probability;
    /// Normalized; the measured qudits are removed.
    StateVector state;
};

/// Projects qudit i onto |outcome>. Throws ZeroProbability.
Measured z_measure_dense(const StateVector &s, std::size_t i, Residue outcome);
/// Joint projection of several qudits.
Measured z_measure_dense(const StateVector &s, const VertexSet &qudits, std::span<const Residue> outcomes);

/// |Psi_gh> = p^{-1/2} sum_j omega^{jg} |j>|j+h>.
Eigen::VectorXcd bell_vector(Prime p, Residue g, Residue h);
/// Projects (first, second) onto |Psi_gh>, first being the less significant
/// digit of the pair. Throws ZeroProbability.
Measured bell_measure(const StateVector &s, std::size_t first, std::size_t second, Residue g, Residue h);

/// "p n" then p^n lines "re im".
std::string to_text(const StateVector &s);

}  // namespace amegraph

#endif

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

#ifndef AMEGRAPH_STABILIZER_H
#define AMEGRAPH_STABILIZER_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "amegraph/gfp.h"
#include "amegraph/graph.h"

namespace amegraph {

/// k generators on n qudits, row i standing for X^{x_i} Z^{z_i}. Scalar
/// coefficients are not tracked.
class GeneratorMatrix {
   public:
    /// Blocks must share the prime and the shape k x n.
    GeneratorMatrix(FieldMat x, FieldMat z);
    /// Splits a k x 2n matrix into its two halves.
    static GeneratorMatrix from_block(const FieldMat &m);

    Prime prime() const noexcept {
        return x_.prime();
    }
    std::size_t rows() const noexcept {
        return x_.rows();
    }
    std::size_t qudits() const noexcept {
        return x_.cols();
    }
    const FieldMat &x() const noexcept {
        return x_;
    }
    const FieldMat &z() const noexcept {
        return z_;
    }
    /// (X | Z) as one k x 2n matrix.
    FieldMat block() const;

    friend bool operator==(const GeneratorMatrix &, const GeneratorMatrix &) = default;

   private:
    FieldMat x_;
    FieldMat z_;
};

/// Entry (i, j) is x_i . z_j - z_i . x_j.
FieldMat symplectic_products(const GeneratorMatrix &m);

/// Rows independent as 2n-vectors and pairwise commuting.
bool is_valid(const GeneratorMatrix &m);

/// One qudit's column map: new X = e X + e' Z, new Z = f X + f' Z.
struct CliffordQuad {
    Residue e;
    Residue f;
    Residue e2;
    Residue f2;

    friend bool operator==(const CliffordQuad &, const CliffordQuad &) = default;
};

/// Per-qudit quadruples with e f' - f e' = 1.
class LocalCliffordY {
   public:
    /// Throws InvalidY on a determinant other than 1 or an entry >= p.
    LocalCliffordY(Prime p, std::vector<CliffordQuad> quads);
    static LocalCliffordY identity(Prime p, std::size_t n);

    Prime prime() const noexcept {
        return p_;
    }
    std::size_t size() const noexcept {
        return quads_.size();
    }
    const std::vector<CliffordQuad> &quads() const noexcept {
        return quads_;
    }
    bool is_identity() const;

    friend bool operator==(const LocalCliffordY &, const LocalCliffordY &) = default;

   private:
    Prime p_;
    std::vector<CliffordQuad> quads_;
};

/// U (X | Z) Y. Throws SingularU when U is not an invertible k x k matrix and
/// InvalidY when Y does not cover the n qudits.
GeneratorMatrix apply_local_clifford(const GeneratorMatrix &m, const FieldMat &u, const LocalCliffordY &y);

/// (I | A).
GeneratorMatrix from_graph(const Graph &g);

struct CliffordStep {
    FieldMat u;
    LocalCliffordY y;
};

struct GraphConversion {
    Graph graph;
    /// Applying the steps in order to the input yields from_graph(graph).
    std::vector<CliffordStep> transcript;
};

/// Local Clifford reduction of a stabilizer state to graph form. Throws
/// InvalidInput unless is_valid and k = n.
GraphConversion to_graph(const GeneratorMatrix &m);

/// "p k n" then k lines of 2n residues.
std::string to_text(const GeneratorMatrix &m);
GeneratorMatrix parse_generator_matrix(std::string_view text);

}  // namespace amegraph

#endif

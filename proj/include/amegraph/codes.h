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

#ifndef AMEGRAPH_CODES_H
#define AMEGRAPH_CODES_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amegraph/gfp.h"
#include "amegraph/graph.h"
#include "amegraph/stabilizer.h"

namespace amegraph {

/// Linear [n, k] code over Z_p with codewords G x for an n x k generator G.
class LinearCode {
   public:
    /// Requires 1 <= k <= n and independent columns; otherwise InvalidInput.
    explicit LinearCode(FieldMat generator);

    Prime prime() const noexcept {
        return g_.prime();
    }
    std::size_t length() const noexcept {
        return g_.rows();
    }
    std::size_t dimension() const noexcept {
        return g_.cols();
    }
    const FieldMat &generator() const noexcept {
        return g_;
    }
    FieldVec encode(const FieldVec &message) const {
        return g_ * message;
    }

    friend bool operator==(const LinearCode &, const LinearCode &) = default;

   private:
    FieldMat g_;
};

/// (n-k) x n, full row rank, H G = 0, in reduced row echelon form.
FieldMat parity_check(const LinearCode &c);

inline constexpr std::uint64_t kDefaultCodewordBudget = 10'000'000;

/// Minimum weight of a nonzero codeword. Throws TooLarge when p^k exceeds
/// the budget.
std::size_t min_distance(const LinearCode &c, std::uint64_t budget = kDefaultCodewordBudget);

/// Singleton bound met: distance n - k + 1.
bool is_mds(const LinearCode &c);
/// MDS with n = 2k.
bool is_ame_code(const LinearCode &c);

/// Evaluation code G_ij = x_i^j for j < k. Throws PointsNotDistinct or
/// LengthExceedsField.
LinearCode grs_code(Prime p, std::size_t n, std::size_t k, const std::vector<Residue> &points);
/// Points 0, 1, ..., n-1.
LinearCode grs_code(Prime p, std::size_t n, std::size_t k);

/// The ternary [4,2,3] Hamming code with generator columns (1,0,1,2) and
/// (0,1,1,1).
LinearCode hamming433();

/// [[G^T, 0], [0, H]]. Throws NotAmeCode.
GeneratorMatrix ame_generator_matrix(const LinearCode &c);

/// Graph form of the code's AME stabilizer state.
Graph code_to_ame_graph(const LinearCode &c);

/// "p n k" then the k generator columns as rows of n residues.
std::string to_text(const LinearCode &c);
LinearCode parse_code(std::string_view text);

/// Registry names "hamming433" and "grs:p,n,k"; anything else is read as a
/// code file path.
LinearCode load_code(const std::string &name_or_path);

}  // namespace amegraph

#endif

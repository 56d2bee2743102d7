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

#include "amegraph/stabilizer.h"

#include <sstream>

#include "amegraph/error.h"
#include "text.h"

namespace amegraph {

GeneratorMatrix::GeneratorMatrix(FieldMat x, FieldMat z) : x_(std::move(x)), z_(std::move(z)) {
    if (!(x_.prime() == z_.prime()) || x_.rows() != z_.rows() || x_.cols() != z_.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "X and Z blocks must share prime and shape");
    }
}

GeneratorMatrix GeneratorMatrix::from_block(const FieldMat &m) {
    if (m.cols() % 2 != 0) {
        throw Error(ErrorCode::kDimensionMismatch, "generator matrix needs an even column count");
    }
    const std::size_t n = m.cols() / 2;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t c = 0; c < n; ++c) {
        left.push_back(c);
        right.push_back(n + c);
    }
    return GeneratorMatrix(m.select_cols(left), m.select_cols(right));
}

FieldMat GeneratorMatrix::block() const {
    return x_.hstack(z_);
}

FieldMat symplectic_products(const GeneratorMatrix &m) {
    FieldMat xz = m.x() * m.z().transpose();
    FieldMat out(m.prime(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) {
            out.set(i, j, mod_sub(xz.at(i, j), xz.at(j, i), m.prime()));
        }
    }
    return out;
}

bool is_valid(const GeneratorMatrix &m) {
    return mat_rank(m.block()) == m.rows() && symplectic_products(m).is_zero();
}

LocalCliffordY::LocalCliffordY(Prime p, std::vector<CliffordQuad> quads) : p_(p), quads_(std::move(quads)) {
    for (const CliffordQuad &q : quads_) {
        if (q.e >= p.value() || q.f >= p.value() || q.e2 >= p.value() || q.f2 >= p.value()) {
            throw Error(ErrorCode::kInvalidY, "entry out of range");
        }
        if (mod_sub(mod_mul(q.e, q.f2, p), mod_mul(q.f, q.e2, p), p) != 1) {
            throw Error(ErrorCode::kInvalidY, "e f' - f e' must equal 1");
        }
    }
}

LocalCliffordY LocalCliffordY::identity(Prime p, std::size_t n) {
    return LocalCliffordY(p, std::vector<CliffordQuad>(n, CliffordQuad{1, 0, 0, 1}));
}

bool LocalCliffordY::is_identity() const {
    for (const CliffordQuad &q : quads_) {
        if (!(q == CliffordQuad{1, 0, 0, 1})) {
            return false;
        }
    }
    return true;
}

GeneratorMatrix apply_local_clifford(const GeneratorMatrix &m, const FieldMat &u, const LocalCliffordY &y) {
    const Prime p = m.prime();
    if (!(u.prime() == p) || u.rows() != m.rows() || u.cols() != m.rows() || mat_rank(u) != m.rows()) {
        throw Error(ErrorCode::kSingularU, "U must be an invertible k x k matrix over the same field");
    }
    if (!(y.prime() == p) || y.size() != m.qudits()) {
        throw Error(ErrorCode::kInvalidY, "Y must hold one quadruple per qudit");
    }
    FieldMat x = u * m.x();
    FieldMat z = u * m.z();
    FieldMat nx(p, m.rows(), m.qudits());
    FieldMat nz(p, m.rows(), m.qudits());
    for (std::size_t c = 0; c < m.qudits(); ++c) {
        const CliffordQuad &q = y.quads()[c];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nx.set(r, c, mod_add(mod_mul(q.e, x.at(r, c), p), mod_mul(q.e2, z.at(r, c), p), p));
            nz.set(r, c, mod_add(mod_mul(q.f, x.at(r, c), p), mod_mul(q.f2, z.at(r, c), p), p));
        }
    }
    return GeneratorMatrix(std::move(nx), std::move(nz));
}

GeneratorMatrix from_graph(const Graph &g) {
    return GeneratorMatrix(FieldMat::identity(g.prime(), g.size()), g.adjacency());
}

GraphConversion to_graph(const GeneratorMatrix &m) {
    const Prime p = m.prime();
    const std::size_t n = m.qudits();
    if (m.rows() != n || !is_valid(m)) {
        throw Error(ErrorCode::kInvalidInput, "to_graph needs a valid stabilizer state (k = n)");
    }
    std::vector<CliffordStep> transcript;
    GeneratorMatrix cur = m;
    const FieldMat id = FieldMat::identity(p, n);

    // Swapping X and Z on the non-pivot columns of rref(X) makes X invertible.
    std::vector<std::size_t> pivots;
    rref(cur.x(), &pivots);
    std::vector<CliffordQuad> swap(n, CliffordQuad{1, 0, 0, 1});
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    bool any_swap = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            swap[c] = CliffordQuad{0, 1, mod_neg(1, p), 0};
            any_swap = true;
        }
    }
    if (any_swap) {
        LocalCliffordY y(p, swap);
        cur = apply_local_clifford(cur, id, y);
        transcript.push_back({id, y});
    }

    if (!(cur.x() == id)) {
        FieldMat u = mat_inverse(cur.x());
        cur = apply_local_clifford(cur, u, LocalCliffordY::identity(p, n));
        transcript.push_back({u, LocalCliffordY::identity(p, n)});
    }

    std::vector<CliffordQuad> clear(n, CliffordQuad{1, 0, 0, 1});
    bool any_diag = false;
    for (std::size_t i = 0; i < n; ++i) {
        Residue d = cur.z().at(i, i);
        if (d != 0) {
            clear[i] = CliffordQuad{1, mod_neg(d, p), 0, 1};
            any_diag = true;
        }
    }
    if (any_diag) {
        LocalCliffordY y(p, clear);
        cur = apply_local_clifford(cur, id, y);
        transcript.push_back({id, y});
    }

    const FieldMat &a = cur.z();
    if (!(cur.x() == id) || !(a == a.transpose())) {
        throw Error(ErrorCode::kInternalError, "graph reduction did not reach (I | A) with symmetric A");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i, i) != 0) {
            throw Error(ErrorCode::kInternalError, "graph reduction left a nonzero diagonal");
        }
    }
    return GraphConversion{Graph(a), std::move(transcript)};
}

std::string to_text(const GeneratorMatrix &m) {
    std::ostringstream out;
    out << m.prime().value() << ' ' << m.rows() << ' ' << m.qudits() << '\n';
    FieldMat b = m.block();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out << (c == 0 ? "" : " ") << b.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

GeneratorMatrix parse_generator_matrix(std::string_view text) {
    using detail::at_line;
    auto blocks = detail::split_blocks(text);
    if (blocks.size() != 1) {
        throw Error(ErrorCode::kParseError, "expected a single generator matrix");
    }
    const auto &lines = blocks[0];
    auto header = detail::parse_numbers(lines[0].text, lines[0].number);
    if (header.size() != 3 || header[0] < 2 || header[0] > 0xFFFFFFFFLL || header[1] < 0 || header[2] < 0 ||
        !is_prime(static_cast<std::uint64_t>(header[0]))) {
        throw Error(ErrorCode::kParseError, at_line(lines[0].number) + "expected header 'p k n' with p prime");
    }
    Prime p(static_cast<std::uint32_t>(header[0]));
    auto k = static_cast<std::size_t>(header[1]);
    auto n = static_cast<std::size_t>(header[2]);
    if (lines.size() != k + 1) {
        throw Error(ErrorCode::kParseError, "expected " + std::to_string(k) + " generator rows");
    }
    FieldMat m(p, k, 2 * n);
    for (std::size_t r = 0; r < k; ++r) {
        auto nums = detail::parse_numbers(lines[r + 1].text, lines[r + 1].number);
        if (nums.size() != 2 * n) {
            throw Error(ErrorCode::kParseError, at_line(lines[r + 1].number) + "expected 2n residues");
        }
        for (std::size_t c = 0; c < 2 * n; ++c) {
            if (nums[c] < 0 || nums[c] >= static_cast<long long>(p.value())) {
                throw Error(ErrorCode::kParseError, at_line(lines[r + 1].number) + "residue out of range");
            }
            m.set(r, c, static_cast<Residue>(nums[c]));
        }
    }
    return GeneratorMatrix::from_block(m);
}

}  // namespace amegraph

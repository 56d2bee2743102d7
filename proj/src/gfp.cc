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

#include "amegraph/gfp.h"

#include <sstream>
#include <tuple>
#include <utility>

#include "amegraph/error.h"

namespace amegraph {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    }
}

Residue reduce(long long v, Prime p) {
    long long m = static_cast<long long>(p.value());
    long long r = v % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<Residue>(r);
}

Residue field_inv(Residue a, Prime p) {
    a %= p.value();
    if (a == 0) {
        throw Error(ErrorCode::kNotInvertible, "0 has no inverse mod " + std::to_string(p.value()));
    }
    // Extended Euclid on (a, p).
    long long r0 = p.value(), r1 = a;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return reduce(t0, p);
}

std::vector<Residue> inverse_table(Prime p) {
    std::vector<Residue> inv(p.value(), 0);
    for (Residue a = 1; a < p.value(); ++a) {
        inv[a] = field_inv(a, p);
    }
    return inv;
}

namespace {

void check_entries(std::span<const Residue> entries, Prime p) {
    for (Residue e : entries) {
        if (e >= p.value()) {
            throw Error(ErrorCode::kWeightOutOfRange,
                        "entry " + std::to_string(e) + " not reduced mod " + std::to_string(p.value()));
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldVec

FieldVec::FieldVec(Prime p, std::size_t size) : p_(p), entries_(size, 0) {
}

FieldVec::FieldVec(Prime p, std::vector<Residue> entries) : p_(p), entries_(std::move(entries)) {
    check_entries(entries_, p_);
}

void FieldVec::set(std::size_t i, Residue v) {
    if (v >= p_.value()) {
        throw Error(ErrorCode::kWeightOutOfRange, "entry not reduced");
    }
    entries_.at(i) = v;
}

bool FieldVec::is_zero() const {
    for (Residue e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

FieldVec FieldVec::operator+(const FieldVec &other) const {
    if (other.p_ != p_ || other.size() != size()) {
        throw Error(ErrorCode::kDimensionMismatch, "vector sum of mismatched vectors");
    }
    FieldVec out(p_, size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.entries_[i] = mod_add(entries_[i], other.entries_[i], p_);
    }
    return out;
}

FieldVec FieldVec::scaled(Residue c) const {
    FieldVec out(p_, size());
    c %= p_.value();
    for (std::size_t i = 0; i < size(); ++i) {
        out.entries_[i] = mod_mul(entries_[i], c, p_);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldMat

FieldMat::FieldMat(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
}

FieldMat::FieldMat(Prime p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::kDimensionMismatch, "entry count does not match shape");
    }
    check_entries(entries_, p_);
}

FieldMat FieldMat::from_rows(Prime p, const std::vector<std::vector<Residue>> &rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    std::vector<Residue> flat;
    flat.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FieldMat(p, r, c, std::move(flat));
}

FieldMat FieldMat::identity(Prime p, std::size_t n) {
    FieldMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.entries_[i * n + i] = 1;
    }
    return m;
}

void FieldMat::set(std::size_t r, std::size_t c, Residue v) {
    if (r >= rows_ || c >= cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "index out of range");
    }
    if (v >= p_.value()) {
        throw Error(ErrorCode::kWeightOutOfRange, "entry not reduced");
    }
    entries_[r * cols_ + c] = v;
}

FieldVec FieldMat::row(std::size_t r) const {
    auto s = row_span(r);
    return FieldVec(p_, std::vector<Residue>(s.begin(), s.end()));
}

FieldVec FieldMat::col(std::size_t c) const {
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = at(r, c);
    }
    return FieldVec(p_, std::move(out));
}

bool FieldMat::is_zero() const {
    for (Residue e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

FieldMat FieldMat::transpose() const {
    FieldMat t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.entries_[c * rows_ + r] = at(r, c);
        }
    }
    return t;
}

FieldMat FieldMat::operator*(const FieldMat &rhs) const {
    if (rhs.p_ != p_ || rhs.rows_ != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    }
    FieldMat out(p_, rows_, rhs.cols_);
    const std::uint64_t p = p_.value();
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc = (acc + static_cast<std::uint64_t>(at(r, k)) * rhs.at(k, c)) % p;
            }
            out.entries_[r * rhs.cols_ + c] = static_cast<Residue>(acc);
        }
    }
    return out;
}

FieldVec FieldMat::operator*(const FieldVec &v) const {
    if (v.prime() != p_ || v.size() != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
    }
    std::vector<Residue> out(rows_);
    const std::uint64_t p = p_.value();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            acc = (acc + static_cast<std::uint64_t>(at(r, k)) * v[k]) % p;
        }
        out[r] = static_cast<Residue>(acc);
    }
    return FieldVec(p_, std::move(out));
}

FieldMat FieldMat::vstack(const FieldMat &below) const {
    if (below.p_ != p_ || (below.cols_ != cols_ && below.rows_ > 0 && rows_ > 0)) {
        throw Error(ErrorCode::kDimensionMismatch, "vstack column mismatch");
    }
    std::size_t c = rows_ > 0 ? cols_ : below.cols_;
    std::vector<Residue> flat(entries_);
    flat.insert(flat.end(), below.entries_.begin(), below.entries_.end());
    return FieldMat(p_, rows_ + below.rows_, c, std::move(flat));
}

FieldMat FieldMat::hstack(const FieldMat &right) const {
    if (right.p_ != p_ || right.rows_ != rows_) {
        throw Error(ErrorCode::kDimensionMismatch, "hstack row mismatch");
    }
    FieldMat out(p_, rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.entries_[r * out.cols_ + c] = at(r, c);
        }
        for (std::size_t c = 0; c < right.cols_; ++c) {
            out.entries_[r * out.cols_ + cols_ + c] = right.at(r, c);
        }
    }
    return out;
}

FieldMat FieldMat::select_cols(std::span<const std::size_t> cols) const {
    FieldMat out(p_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.entries_[r * cols.size() + j] = at(r, cols[j]);
        }
    }
    return out;
}

FieldMat FieldMat::select_rows(std::span<const std::size_t> rows) const {
    FieldMat out(p_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto src = row_span(rows[i]);
        std::copy(src.begin(), src.end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
    }
    return out;
}

std::string FieldMat::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) {
                out << ' ';
            }
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Elimination

FieldMat rref(const FieldMat &m, std::vector<std::size_t> *pivots) {
    const Prime p = m.prime();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Residue> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t r, std::size_t c) -> Residue & { return a[r * cols + c]; };

    std::vector<std::size_t> piv;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (at(r, c) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) {
            continue;
        }
        if (sel != rank) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(at(sel, k), at(rank, k));
            }
        }
        Residue inv = field_inv(at(rank, c), p);
        for (std::size_t k = 0; k < cols; ++k) {
            at(rank, k) = mod_mul(at(rank, k), inv, p);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || at(r, c) == 0) {
                continue;
            }
            Residue f = at(r, c);
            for (std::size_t k = 0; k < cols; ++k) {
                at(r, k) = mod_sub(at(r, k), mod_mul(f, at(rank, k), p), p);
            }
        }
        piv.push_back(c);
        ++rank;
    }
    a.resize(rank * cols);
    if (pivots != nullptr) {
        *pivots = std::move(piv);
    }
    return FieldMat(p, rank, cols, std::move(a));
}

std::size_t mat_rank(const FieldMat &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    if (m.prime().value() == 2 && m.cols() <= 64) {
        return gf2::rank(gf2::pack_rows(m));
    }
    return rref(m).rows();
}

FieldMat mat_inverse(const FieldMat &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return m;
    }
    FieldMat aug = m.hstack(FieldMat::identity(m.prime(), n));
    std::vector<std::size_t> piv;
    FieldMat red = rref(aug, &piv);
    if (red.rows() < n || piv.back() >= n) {
        throw Error(ErrorCode::kSingular, "matrix is singular");
    }
    std::vector<std::size_t> right(n);
    for (std::size_t i = 0; i < n; ++i) {
        right[i] = n + i;
    }
    return red.select_cols(right);
}

FieldMat kernel_basis(const FieldMat &m) {
    const Prime p = m.prime();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    FieldMat red = rref(m, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) {
        is_pivot[c] = true;
    }
    FieldMat basis(p, cols - piv.size(), cols);
    std::size_t out = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        basis.set(out, free, 1);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            basis.set(out, piv[i], mod_neg(red.at(i, free), p));
        }
        ++out;
    }
    return basis;
}

namespace gf2 {

std::vector<std::uint64_t> pack_rows(const FieldMat &m) {
    if (m.prime().value() != 2 || m.cols() > 64) {
        throw Error(ErrorCode::kInvalidArgument, "bit packing needs p = 2 and at most 64 columns");
    }
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c) != 0) {
                rows[r] |= std::uint64_t{1} << c;
            }
        }
    }
    return rows;
}

std::size_t rank(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t v = rows[i];
        if (v == 0) {
            continue;
        }
        std::uint64_t low = v & (~v + 1);
        ++rank;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[j] & low) {
                rows[j] ^= v;
            }
        }
    }
    return rank;
}

}  // namespace gf2

}  // namespace amegraph

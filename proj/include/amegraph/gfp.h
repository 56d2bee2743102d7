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

#ifndef AMEGRAPH_GFP_H
#define AMEGRAPH_GFP_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace amegraph {

/// An element of Z_p, always stored reduced into [0, p).
using Residue = std::uint32_t;

/// A prime modulus. Primality is checked on construction by trial division.
class Prime {
   public:
    explicit Prime(std::uint32_t p);

    std::uint32_t value() const noexcept {
        return p_;
    }

    friend bool operator==(Prime a, Prime b) = default;

   private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

inline Residue mod_add(Residue a, Residue b, Prime p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) + b) % p.value());
}
inline Residue mod_sub(Residue a, Residue b, Prime p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) + p.value() - b) % p.value());
}
inline Residue mod_mul(Residue a, Residue b, Prime p) {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p.value());
}
inline Residue mod_neg(Residue a, Prime p) {
    return a == 0 ? 0 : p.value() - a;
}
/// Reduces any signed integer into [0, p).
Residue reduce(long long v, Prime p);

/// Multiplicative inverse. Throws NotInvertible for a == 0 (mod p).
Residue field_inv(Residue a, Prime p);

/// inv[a] for every a in [1, p); inv[0] is left as 0.
std::vector<Residue> inverse_table(Prime p);

class FieldVec {
   public:
    FieldVec(Prime p, std::size_t size);
    FieldVec(Prime p, std::vector<Residue> entries);

    Prime prime() const noexcept {
        return p_;
    }
    std::size_t size() const noexcept {
        return entries_.size();
    }
    bool empty() const noexcept {
        return entries_.empty();
    }
    Residue operator[](std::size_t i) const {
        return entries_[i];
    }
    void set(std::size_t i, Residue v);
    std::span<const Residue> entries() const noexcept {
        return entries_;
    }
    bool is_zero() const;

    FieldVec operator+(const FieldVec &other) const;
    FieldVec scaled(Residue c) const;

    friend bool operator==(const FieldVec &a, const FieldVec &b) = default;

   private:
    Prime p_;
    std::vector<Residue> entries_;
};

/// Dense row-major matrix over Z_p.
class FieldMat {
   public:
    FieldMat(Prime p, std::size_t rows, std::size_t cols);
    FieldMat(Prime p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);

    static FieldMat from_rows(Prime p, const std::vector<std::vector<Residue>> &rows);
    static FieldMat identity(Prime p, std::size_t n);

    Prime prime() const noexcept {
        return p_;
    }
    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    Residue at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, Residue v);
    std::span<const Residue> row_span(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    FieldVec row(std::size_t r) const;
    FieldVec col(std::size_t c) const;
    std::span<const Residue> entries() const noexcept {
        return entries_;
    }
    bool is_zero() const;

    FieldMat transpose() const;
    FieldMat operator*(const FieldMat &rhs) const;
    FieldVec operator*(const FieldVec &v) const;

    /// Stacks rows of `below` under this matrix.
    FieldMat vstack(const FieldMat &below) const;
    /// Places `right` to the right of this matrix.
    FieldMat hstack(const FieldMat &right) const;
    FieldMat select_cols(std::span<const std::size_t> cols) const;
    FieldMat select_rows(std::span<const std::size_t> rows) const;

    std::string to_string() const;

    friend bool operator==(const FieldMat &a, const FieldMat &b) = default;

   private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> entries_;
};

/// Reduced row echelon form with first-nonzero pivoting. Zero rows are
/// dropped; `pivots` (if given) receives the pivot column of each kept row.
FieldMat rref(const FieldMat &m, std::vector<std::size_t> *pivots = nullptr);

std::size_t mat_rank(const FieldMat &m);

/// Throws DimensionMismatch for non-square input and Singular when rank < n.
FieldMat mat_inverse(const FieldMat &m);

/// Rows form a basis of {v : m v = 0}; row count is cols - rank.
FieldMat kernel_basis(const FieldMat &m);

/// Bit-packed rows for p = 2. Column c of a row lives in bit c.
namespace gf2 {

std::vector<std::uint64_t> pack_rows(const FieldMat &m);

/// Rank of the packed rows (taken by value, eliminated in place).
std::size_t rank(std::vector<std::uint64_t> rows);

}  // namespace gf2

}  // namespace amegraph

#endif

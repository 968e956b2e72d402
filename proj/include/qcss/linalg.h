// Copyright 2026 The qcss Authors
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

#ifndef QCSS_LINALG_H
#define QCSS_LINALG_H

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcss/gf.h"

namespace qcss {

using Vec = std::vector<elem_t>;

/// Dense row-major matrix over F_q. The field is supplied by the caller.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    }
    static Matrix from_rows(const std::vector<Vec> &rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    elem_t &at(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    elem_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<elem_t> row(std::size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const elem_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vec row_vec(std::size_t r) const {
        auto s = row(r);
        return Vec(s.begin(), s.end());
    }
    Vec column(std::size_t c) const;
    void append_row(std::span<const elem_t> r);
    void swap_rows(std::size_t a, std::size_t b);

    Matrix transpose() const;
    /// Columns reordered so that output column j is input column perm[j].
    Matrix permute_columns(std::span<const std::size_t> perm) const;
    std::size_t nonzeros() const;

    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

struct RowEchelon {
    Matrix reduced;                    // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination over F_q.
RowEchelon row_reduce(const Field &f, Matrix m);
std::size_t rank(const Field &f, const Matrix &m);
/// Basis (as rows) of {v : m v^T = 0}.
Matrix nullspace(const Field &f, const Matrix &m);
/// a * b^T.
Matrix mul_transpose(const Field &f, const Matrix &a, const Matrix &b);
/// m v^T.
Vec mul_vec(const Field &f, const Matrix &m, std::span<const elem_t> v);
/// u m for a row vector u.
Vec vec_mul(const Field &f, std::span<const elem_t> u, const Matrix &m);
/// Coefficients u with u m = v, if v lies in the row space.
std::optional<Vec> solve_row_combination(const Field &f, const Matrix &m, std::span<const elem_t> v);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Field &f, const Matrix &m);

Vec vec_add(const Field &f, std::span<const elem_t> a, std::span<const elem_t> b);
Vec vec_sub(const Field &f, std::span<const elem_t> a, std::span<const elem_t> b);
Vec vec_scale(const Field &f, elem_t s, std::span<const elem_t> a);
std::size_t hamming_weight(std::span<const elem_t> v);
/// Digits joined without separators when q <= 10, comma separated otherwise.
std::string vec_str(std::span<const elem_t> v, std::uint32_t q);

/// Visits every vector of F_q^n with exactly w nonzero entries, ordered by
/// support (lexicographic position list) and then by the values on the
/// support, last position fastest. `visit` returns false to stop; the return
/// value reports whether the enumeration ran to completion.
bool for_each_weight_vector(
    std::size_t n, std::uint32_t q, std::size_t w,
    const std::function<bool(std::span<const elem_t> word, std::span<const std::size_t> support)> &visit);

}  // namespace qcss

#endif

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

#include "qcss/linalg.h"

#include <algorithm>
#include <stdexcept>

#include "qcss/simd.h"

namespace qcss {

Matrix Matrix::from_rows(const std::vector<Vec> &rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("matrix row has wrong length");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = at(r, c);
    }
    return out;
}

void Matrix::append_row(std::span<const elem_t> r) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = r.size();
    }
    if (r.size() != cols_) {
        throw std::invalid_argument("appended row has wrong length");
    }
    data_.insert(data_.end(), r.begin(), r.end());
    rows_++;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

Matrix Matrix::permute_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != cols_) {
        throw std::invalid_argument("permutation length mismatch");
    }
    Matrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out.at(r, c) = at(r, perm[c]);
        }
    }
    return out;
}

std::size_t Matrix::nonzeros() const {
    return simd::count_nonzero(data_);
}

RowEchelon row_reduce(const Field &f, Matrix m) {
    simd::GfOps ops(f);
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == 0) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(r, pivot);
        simd::gf_scale(ops, f.inv(m.at(r, c)), m.row(r));
        for (std::size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.at(i, c) != 0) {
                simd::gf_axpy(ops, f.neg(m.at(i, c)), m.row(r), m.row(i));
            }
        }
        out.pivots.push_back(c);
        r++;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; i++) {
        std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
    }
    out.reduced = std::move(reduced);
    return out;
}

std::size_t rank(const Field &f, const Matrix &m) {
    return row_reduce(f, m).pivots.size();
}

Matrix nullspace(const Field &f, const Matrix &m) {
    auto ech = row_reduce(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    Matrix basis(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); i++) {
            v[ech.pivots[i]] = f.neg(ech.reduced.at(i, free));
        }
        basis.append_row(v);
    }
    return basis;
}

Matrix mul_transpose(const Field &f, const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("mul_transpose: dimension mismatch");
    }
    Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < b.rows(); j++) {
            out.at(i, j) = f.dot(a.row(i), b.row(j));
        }
    }
    return out;
}

Vec mul_vec(const Field &f, const Matrix &m, std::span<const elem_t> v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("mul_vec: dimension mismatch");
    }
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        out[i] = f.dot(m.row(i), v);
    }
    return out;
}

Vec vec_mul(const Field &f, std::span<const elem_t> u, const Matrix &m) {
    if (u.size() != m.rows()) {
        throw std::invalid_argument("vec_mul: dimension mismatch");
    }
    simd::GfOps ops(f);
    Vec out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); i++) {
        simd::gf_axpy(ops, u[i], m.row(i), out);
    }
    return out;
}

std::optional<Vec> solve_row_combination(const Field &f, const Matrix &m, std::span<const elem_t> v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("solve_row_combination: dimension mismatch");
    }
    // Solve m^T u^T = v^T through the augmented system [m^T | v^T].
    Matrix aug(m.cols(), m.rows() + 1);
    for (std::size_t c = 0; c < m.cols(); c++) {
        for (std::size_t r = 0; r < m.rows(); r++) {
            aug.at(c, r) = m.at(r, c);
        }
        aug.at(c, m.rows()) = v[c];
    }
    auto ech = row_reduce(f, aug);
    Vec u(m.rows(), 0);
    for (std::size_t i = 0; i < ech.pivots.size(); i++) {
        if (ech.pivots[i] == m.rows()) {
            return std::nullopt;
        }
        u[ech.pivots[i]] = ech.reduced.at(i, m.rows());
    }
    return u;
}

Matrix inverse(const Field &f, const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            aug.at(i, j) = m.at(i, j);
        }
        aug.at(i, n + i) = 1;
    }
    auto ech = row_reduce(f, aug);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
        throw std::domain_error("matrix is singular");
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            out.at(i, j) = ech.reduced.at(i, n + j);
        }
    }
    return out;
}

Vec vec_add(const Field &f, std::span<const elem_t> a, std::span<const elem_t> b) {
    Vec out(a.begin(), a.end());
    simd::gf_axpy(simd::GfOps(f), 1, b, out);
    return out;
}

Vec vec_sub(const Field &f, std::span<const elem_t> a, std::span<const elem_t> b) {
    Vec out(a.begin(), a.end());
    simd::gf_axpy(simd::GfOps(f), f.neg(1), b, out);
    return out;
}

Vec vec_scale(const Field &f, elem_t s, std::span<const elem_t> a) {
    Vec out(a.begin(), a.end());
    simd::gf_scale(simd::GfOps(f), s, out);
    return out;
}

std::size_t hamming_weight(std::span<const elem_t> v) {
    return simd::count_nonzero(v);
}

std::string vec_str(std::span<const elem_t> v, std::uint32_t q) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (q > 10 && i) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

bool for_each_weight_vector(
    std::size_t n, std::uint32_t q, std::size_t w,
    const std::function<bool(std::span<const elem_t> word, std::span<const std::size_t> support)> &visit) {
    if (w > n) {
        return true;
    }
    Vec word(n, 0);
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; i++) {
        support[i] = i;
    }
    while (true) {
        for (auto s : support) {
            word[s] = 1;
        }
        while (true) {
            if (!visit(word, support)) {
                return false;
            }
            std::size_t i = w;
            while (i > 0 && word[support[i - 1]] == q - 1) {
                word[support[i - 1]] = 1;
                i--;
            }
            if (i == 0) {
                break;
            }
            word[support[i - 1]]++;
        }
        for (auto s : support) {
            word[s] = 0;
        }
        std::size_t i = w;
        while (i > 0 && support[i - 1] == n - w + i - 1) {
            i--;
        }
        if (i == 0) {
            return true;
        }
        support[i - 1]++;
        for (std::size_t j = i; j < w; j++) {
            support[j] = support[j - 1] + 1;
        }
    }
}

}  // namespace qcss

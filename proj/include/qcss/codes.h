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

#ifndef QCSS_CODES_H
#define QCSS_CODES_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcss/gf.h"
#include "qcss/linalg.h"

namespace qcss {

/// Largest log2 of a codeword count that exhaustive routines will enumerate.
inline constexpr double kMaxEnumerationBits = 24.0;

/// A classical linear [n, k, d]_q code.
///
/// G (k x n) has full row rank and H ((n-k) x n) spans its dual, so G H^T = 0.
/// The minimum distance is computed on first request by exhaustive
/// enumeration and memoized; copies share the memo.
class LinearCode {
   public:
    /// Throws std::invalid_argument when the generator is rank deficient.
    LinearCode(FieldPtr field, Matrix generator, std::string name = "",
               std::optional<std::size_t> known_distance = std::nullopt);
    /// Both matrices supplied; checked for rank and orthogonality.
    LinearCode(FieldPtr field, Matrix generator, Matrix parity_check, std::string name,
               std::optional<std::size_t> known_distance);

    const Field &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    std::size_t n() const {
        return generator_.cols();
    }
    std::size_t k() const {
        return generator_.rows();
    }
    const Matrix &generator() const {
        return generator_;
    }
    const Matrix &parity_check() const {
        return parity_check_;
    }
    const std::string &name() const {
        return name_;
    }

    /// Minimum nonzero codeword weight. Throws std::length_error when
    /// k log2 q exceeds kMaxEnumerationBits and std::domain_error for k = 0.
    std::size_t min_distance() const;
    bool distance_known() const;
    bool contains(std::span<const elem_t> word) const;
    /// "[n,k,d]_q", with d omitted when it is not enumerable.
    std::string params() const;

   private:
    struct DistanceMemo {
        std::once_flag once;
        std::size_t value = 0;
    };

    FieldPtr field_;
    Matrix generator_;
    Matrix parity_check_;
    std::string name_;
    std::shared_ptr<DistanceMemo> distance_;
    std::optional<std::size_t> known_distance_;
};

struct StandardForm {
    Matrix g_std;                             // (I_k | A)
    std::vector<std::size_t> permutation;    // g_std column j = original column permutation[j]
    Matrix a;                                 // k x (n - k)
};

/// Gauss-Jordan elimination with column pivoting. The pivot columns are moved
/// to the front in order, the rest follow in order.
StandardForm standard_form(const LinearCode &code);
LinearCode dual(const LinearCode &code);
bool is_perfect(const LinearCode &code);
/// q^k * sum_{i<=t} C(n,i) (q-1)^i == q^n, in exact integer arithmetic.
bool meets_hamming_bound(std::uint32_t q, std::size_t n, std::size_t k, std::size_t t);
/// True iff dual(code) is a subcode of code, i.e. H H^T = 0.
bool contains_dual(const LinearCode &code);
/// H w^T.
Vec syndrome(const Field &f, const Matrix &parity_check, std::span<const elem_t> word);

/// Minimum-weight representatives of independent cosets of C^perp in C.
/// Candidates are ordered by weight, then by support position list, then by
/// the values on the support. Requires contains_dual(code) and K = 2k - n >= 1.
Matrix coset_leader_matrix(const LinearCode &code);

/// Calls visit(word) for all q^k codewords, zero included. Throws
/// std::length_error beyond kMaxEnumerationBits.
void for_each_codeword(const LinearCode &code, const std::function<void(std::span<const elem_t>)> &visit);
/// A[w] = number of codewords of weight w.
std::vector<std::uint64_t> weight_enumerator(const LinearCode &code);
/// log2 of the codeword count.
double codeword_bits(const LinearCode &code);

/// q-ary Hamming code [(q^m-1)/(q-1), n-m, 3]_q, m >= 2.
LinearCode hamming(std::uint32_t q, std::uint32_t m);
/// Its dual, the simplex code [n, m, q^{m-1}]_q.
LinearCode simplex(std::uint32_t q, std::uint32_t m);
/// Binary Golay [23,12,7]_2 as a quadratic-residue cyclic code.
LinearCode golay23();
/// Ternary Golay [11,6,5]_3 as a quadratic-residue cyclic code.
LinearCode golay11_ternary();

/// Plain-text code file: `field: p^m/modulus`, `n k`, then k generator rows.
LinearCode read_code(std::istream &in, const std::string &name = "");
void write_code(std::ostream &out, const LinearCode &code);

}  // namespace qcss

#endif

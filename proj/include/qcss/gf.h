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

#ifndef QCSS_GF_H
#define QCSS_GF_H

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcss {

/// Field elements are stored as integers in [0, q): the polynomial-basis
/// coefficients c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
using elem_t = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exponent a of omega^a with omega = exp(2 pi i / p). Arithmetic is mod p.
class PhaseExponent {
   public:
    PhaseExponent() = default;
    PhaseExponent(std::uint32_t value, std::uint32_t p) : value_(value % p), p_(p) {
    }

    std::uint32_t value() const {
        return value_;
    }
    std::uint32_t modulus() const {
        return p_;
    }

    PhaseExponent operator+(PhaseExponent other) const;
    PhaseExponent operator-(PhaseExponent other) const;
    PhaseExponent operator-() const;
    bool operator==(const PhaseExponent &other) const = default;

   private:
    std::uint32_t value_ = 0;
    std::uint32_t p_ = 2;
};

/// The finite field F_{p^m}, q <= 2^16, in polynomial representation modulo a
/// monic irreducible polynomial over F_p.
///
/// Construction builds lookup tables (log/exp, negation, inverse, trace, and
/// addition when q is small), so all element operations are O(1). A Field is
/// immutable and is shared between codes, operators and circuits through
/// FieldPtr.
class Field {
   public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Throws std::invalid_argument for composite p, m < 1, q > 2^16, or a
    /// modulus that is not monic, of degree m, and irreducible. When the modulus
    /// is omitted the lexicographically first irreducible coefficient list
    /// (low-to-high) is used.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
    /// Field of order q = p^m with the canonical modulus.
    static FieldPtr of_order(std::uint32_t q);
    /// Parses `p^m/c0,c1,...,cm`.
    static FieldPtr parse_descriptor(const std::string &text);

    std::uint32_t p() const {
        return p_;
    }
    std::uint32_t m() const {
        return m_;
    }
    std::uint32_t q() const {
        return q_;
    }
    const std::vector<std::uint32_t> &modulus() const {
        return modulus_;
    }
    bool is_prime_field() const {
        return m_ == 1;
    }
    /// `p^m/modulus-coeffs`, e.g. `2^2/1,1,1`.
    std::string descriptor() const;

    elem_t add(elem_t a, elem_t b) const {
        if (p_ == 2) {
            return static_cast<elem_t>(a ^ b);
        }
        if (!add_table_.empty()) {
            return add_table_[static_cast<std::size_t>(a) * q_ + b];
        }
        return add_slow(a, b);
    }
    elem_t neg(elem_t a) const {
        return neg_table_[a];
    }
    elem_t sub(elem_t a, elem_t b) const {
        return add(a, neg(b));
    }
    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        std::uint32_t e = log_table_[a] + log_table_[b];
        if (e >= q_ - 1) {
            e -= q_ - 1;
        }
        return exp_table_[e];
    }
    /// Throws std::domain_error on zero.
    elem_t inv(elem_t a) const;
    elem_t div(elem_t a, elem_t b) const {
        return mul(a, inv(b));
    }
    elem_t pow(elem_t a, std::uint64_t e) const;
    /// tr(x) = sum_{i<m} x^{p^i}, an element of the prime subfield returned as
    /// an integer in [0, p).
    std::uint32_t trace(elem_t a) const {
        return trace_table_[a];
    }
    /// sum_i tr(a_i b_i) mod p.
    std::uint32_t trace_dot(std::span<const elem_t> a, std::span<const elem_t> b) const;
    /// sum_i a_i b_i in F_q.
    elem_t dot(std::span<const elem_t> a, std::span<const elem_t> b) const;

    std::vector<std::uint32_t> coeffs(elem_t a) const;
    elem_t from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// An element that generates the multiplicative group.
    elem_t primitive_element() const {
        return exp_table_.size() > 1 ? exp_table_[1] : 1;
    }
    /// Row of the multiplication table, a*x for x in [0, q). Used by the
    /// vector kernels.
    std::vector<elem_t> mul_row(elem_t a) const;

    bool operator==(const Field &other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

   private:
    Field() = default;
    elem_t add_slow(elem_t a, elem_t b) const;
    elem_t mul_slow(elem_t a, elem_t b) const;
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<elem_t> add_table_;
    std::vector<elem_t> neg_table_;
    std::vector<elem_t> inv_table_;
    std::vector<elem_t> exp_table_;
    std::vector<std::uint32_t> log_table_;
    std::vector<std::uint32_t> trace_table_;
};

bool is_prime(std::uint64_t n);
/// True iff the monic polynomial (coefficients low-to-high) is irreducible over
/// F_p, decided by trial division by every monic polynomial of degree at most
/// half its degree.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

/// Value type pairing an element with its field, for code that wants operator
/// syntax. Hot loops use Field methods on raw elem_t instead.
class FieldElement {
   public:
    FieldElement(FieldPtr field, elem_t value);

    const FieldPtr &field() const {
        return field_;
    }
    elem_t value() const {
        return value_;
    }
    std::vector<std::uint32_t> coeffs() const {
        return field_->coeffs(value_);
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    PhaseExponent trace() const;
    bool operator==(const FieldElement &other) const;

   private:
    const Field &same_field(const FieldElement &other) const;

    FieldPtr field_;
    elem_t value_;
};

}  // namespace qcss

#endif

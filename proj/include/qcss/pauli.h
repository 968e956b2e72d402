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

#ifndef QCSS_PAULI_H
#define QCSS_PAULI_H

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "qcss/gf.h"
#include "qcss/linalg.h"

namespace qcss {

/// The n-qudit operator omega^phase X_x Z_z, X part to the left.
///
/// X_r |y> = |y + r> and Z_s |y> = omega^{tr(s.y)} |y>, so
/// (X_a Z_b)(X_c Z_d) = omega^{tr(b.c)} X_{a+c} Z_{b+d}.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// The identity on n qudits.
    PauliOperator(FieldPtr field, std::size_t n);
    PauliOperator(FieldPtr field, PhaseExponent phase, Vec x, Vec z);

    static PauliOperator x_type(FieldPtr field, Vec x);
    static PauliOperator z_type(FieldPtr field, Vec z);
    /// X_x Z_z on one qudit of an n-qudit register.
    static PauliOperator single(FieldPtr field, std::size_t n, std::size_t qudit, elem_t x, elem_t z);

    const Field &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    std::size_t n() const {
        return x_.size();
    }
    PhaseExponent phase() const {
        return phase_;
    }
    const Vec &x() const {
        return x_;
    }
    const Vec &z() const {
        return z_;
    }
    Vec &x() {
        return x_;
    }
    Vec &z() {
        return z_;
    }
    void set_phase(PhaseExponent a) {
        phase_ = a;
    }
    void add_phase(std::uint32_t a) {
        phase_ = phase_ + PhaseExponent(a, field_->p());
    }

    bool is_identity() const;
    /// Number of qudits where (x_i, z_i) != (0, 0).
    std::size_t weight() const;
    /// `w^a X[x] Z[z]`.
    std::string str() const;

    bool operator==(const PauliOperator &other) const;

   private:
    FieldPtr field_;
    PhaseExponent phase_;
    Vec x_;
    Vec z_;
};

/// Image of the basis state |y>: (phase + tr(z.y), y + x).
std::pair<PhaseExponent, Vec> apply_to_basis(const PauliOperator &p, std::span<const elem_t> y);
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}
PauliOperator inverse(const PauliOperator &p);
/// c with PQ = omega^c QP, namely tr(P.z . Q.x) - tr(P.x . Q.z) mod p.
PhaseExponent commutation_exponent(const PauliOperator &p, const PauliOperator &q);

}  // namespace qcss

#endif

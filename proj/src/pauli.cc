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

#include "qcss/pauli.h"

#include <sstream>
#include <stdexcept>

namespace qcss {

namespace {

void check_compatible(const PauliOperator &p, const PauliOperator &q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("Pauli operators act on different qudit counts");
    }
    if (!(p.field() == q.field())) {
        throw std::invalid_argument("Pauli operators over different fields");
    }
}

}  // namespace

PauliOperator::PauliOperator(FieldPtr field, std::size_t n)
    : field_(std::move(field)), phase_(0, field_->p()), x_(n, 0), z_(n, 0) {
}

PauliOperator::PauliOperator(FieldPtr field, PhaseExponent phase, Vec x, Vec z)
    : field_(std::move(field)), phase_(phase.value(), field_->p()), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli x and z parts differ in length");
    }
    for (std::size_t i = 0; i < x_.size(); i++) {
        if (x_[i] >= field_->q() || z_[i] >= field_->q()) {
            throw std::invalid_argument("Pauli entry outside the field");
        }
    }
}

PauliOperator PauliOperator::x_type(FieldPtr field, Vec x) {
    Vec z(x.size(), 0);
    auto p = field->p();
    return PauliOperator(std::move(field), PhaseExponent(0, p), std::move(x), std::move(z));
}

PauliOperator PauliOperator::z_type(FieldPtr field, Vec z) {
    Vec x(z.size(), 0);
    auto p = field->p();
    return PauliOperator(std::move(field), PhaseExponent(0, p), std::move(x), std::move(z));
}

PauliOperator PauliOperator::single(FieldPtr field, std::size_t n, std::size_t qudit, elem_t x, elem_t z) {
    if (qudit >= n) {
        throw std::out_of_range("qudit index out of range");
    }
    PauliOperator out(std::move(field), n);
    out.x_[qudit] = x;
    out.z_[qudit] = z;
    return out;
}

bool PauliOperator::is_identity() const {
    return phase_.value() == 0 && weight() == 0;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); i++) {
        w += (x_[i] | z_[i]) != 0;
    }
    return w;
}

std::string PauliOperator::str() const {
    std::ostringstream out;
    out << "w^" << phase_.value() << " X[" << vec_str(x_, field_->q()) << "] Z[" << vec_str(z_, field_->q()) << "]";
    return out.str();
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return field() == other.field() && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
}

std::pair<PhaseExponent, Vec> apply_to_basis(const PauliOperator &p, std::span<const elem_t> y) {
    if (y.size() != p.n()) {
        throw std::invalid_argument("apply_to_basis: dimension mismatch");
    }
    const Field &f = p.field();
    PhaseExponent a = p.phase() + PhaseExponent(f.trace_dot(p.z(), y), f.p());
    return {a, vec_add(f, y, p.x())};
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_compatible(p, q);
    const Field &f = p.field();
    PhaseExponent a = p.phase() + q.phase() + PhaseExponent(f.trace_dot(p.z(), q.x()), f.p());
    return PauliOperator(p.field_ptr(), a, vec_add(f, p.x(), q.x()), vec_add(f, p.z(), q.z()));
}

PauliOperator inverse(const PauliOperator &p) {
    const Field &f = p.field();
    // (X_x Z_z)^{-1} = Z_{-z} X_{-x} = omega^{tr(z.x)} X_{-x} Z_{-z}.
    PhaseExponent a = -p.phase() + PhaseExponent(f.trace_dot(p.z(), p.x()), f.p());
    return PauliOperator(p.field_ptr(), a, vec_scale(f, f.neg(1), p.x()), vec_scale(f, f.neg(1), p.z()));
}

PhaseExponent commutation_exponent(const PauliOperator &p, const PauliOperator &q) {
    check_compatible(p, q);
    const Field &f = p.field();
    return PhaseExponent(f.trace_dot(p.z(), q.x()), f.p()) - PhaseExponent(f.trace_dot(p.x(), q.z()), f.p());
}

}  // namespace qcss

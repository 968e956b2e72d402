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

// Dense state vectors over C^{q^n}: the slow, direct ground truth that the
// frame simulator and the code constructions are checked against.

#ifndef QCSS_ORACLE_H
#define QCSS_ORACLE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcss/circuit.h"
#include "qcss/codes.h"
#include "qcss/css.h"
#include "qcss/pauli.h"

namespace qcss {

using amp_t = std::complex<double>;

/// 2^24 unless QCSS_MAX_AMPLITUDES is set in the environment.
std::uint64_t max_amplitudes();

/// Amplitudes indexed by sum_i x_i q^i (qudit 0 is the least significant digit),
/// with field elements as digits.
class StateVector {
   public:
    /// |0...0>. Throws std::length_error past max_amplitudes().
    StateVector(FieldPtr field, std::size_t n);
    static StateVector basis(FieldPtr field, std::span<const elem_t> word);

    const Field &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    std::size_t n() const {
        return n_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    std::vector<amp_t> &amplitudes() {
        return amps_;
    }
    const std::vector<amp_t> &amplitudes() const {
        return amps_;
    }
    amp_t &operator[](std::size_t i) {
        return amps_[i];
    }
    amp_t operator[](std::size_t i) const {
        return amps_[i];
    }

    std::size_t index_of(std::span<const elem_t> word) const;
    Vec word_of(std::size_t index) const;
    double norm() const;

   private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<amp_t> amps_;
};

/// omega^k for omega = exp(2 pi i / p).
amp_t omega_power(std::uint32_t p, std::int64_t k);

amp_t inner_product(const StateVector &a, const StateVector &b);
/// ||a - b||.
double exact_distance(const StateVector &a, const StateVector &b);
/// min over theta of ||a - e^{i theta} b||.
double phase_distance(const StateVector &a, const StateVector &b);

/// Uniform superposition over x + uD, x in C^perp.
StateVector build_codeword(const CssCode &code, std::span<const elem_t> u);

/// In-place unitary action of F, F^-1, M_r or ADD. PrepZero and MeasureZ are
/// rejected.
void apply_gate_dense(const Gate &g, StateVector &psi);
/// P|y> = omega^{a + tr(z.y)} |y + x>.
void apply_pauli_dense(const PauliOperator &p, StateVector &psi);
/// Runs a preparation circuit from |0...0>. PrepZero must be the first gate on
/// its qudit; measurements are rejected.
StateVector simulate_dense(const Circuit &c);

struct ConjugationReport {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    double max_deviation = 0;
};
/// g P = P' g on every basis state of two qudits, P' = conjugate_through(g, P),
/// for every gate kind and every single-qudit P = omega^a X_x Z_z.
ConjugationReport conjugation_check(const FieldPtr &field);

struct Theorem2Witness {
    Vec witness;           // W(witness) <= t
    double deviation = 0;  // distance of Z_v|0_E> and Z_witness|0_E> up to global phase
    bool phase_exact = false;  // equal including global phase
};
/// v' with Z_v |0_E> = Z_v' |0_E>, found by coset translation and verified
/// densely. `zero` may carry a prebuilt |0_E>. Throws std::invalid_argument for
/// a non-perfect base code.
Theorem2Witness theorem2_witness(const CssCode &code, std::span<const elem_t> v, const StateVector *zero = nullptr);

struct DualSumReport {
    std::uint64_t checked = 0;
    double max_deviation = 0;
    bool ok = false;
};
/// sum_{x in C^perp} omega^{-tr(y.x)} equals |C^perp| for y in C and 0
/// otherwise, for every y in F_q^n. Size-guarded on q^n and on q^n |C^perp|.
DualSumReport dual_sum_check(const LinearCode &c);

struct TeleportDenseReport {
    std::size_t branches = 0;
    double min_fidelity = 1;
    double max_branch_probability = 0;
};
/// Teleportation encoder with input a|0> + b|1> on two ideal |0_E> blocks. Every outcome
/// branch is enumerated, corrected by X-bar^{-m} Z-bar^{-y}, and compared with
/// a|0_E> + b|1_E>. Requires K = 1.
TeleportDenseReport teleport_encode_dense(const CssCode &code, amp_t a, amp_t b);

}  // namespace qcss

#endif

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

#ifndef QCSS_CSS_H
#define QCSS_CSS_H

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/circuit.h"
#include "qcss/codes.h"
#include "qcss/pauli.h"

namespace qcss {

/// Minimum-weight representative of every coset of C in F_q^n, indexed by the
/// syndrome G_perp v^T read as a base-q integer.
class CosetTable {
   public:
    CosetTable() = default;
    CosetTable(const Field &f, const Matrix &check);

    std::size_t index(std::span<const elem_t> syndrome) const;
    const Vec &leader(std::size_t index) const {
        return leaders_[index];
    }
    std::size_t leader_weight(std::size_t index) const {
        return weights_[index];
    }
    std::size_t size() const {
        return leaders_.size();
    }
    /// Largest leader weight, i.e. the covering radius of C.
    std::size_t max_weight() const;

   private:
    std::uint32_t q_ = 2;
    std::vector<Vec> leaders_;
    std::vector<std::size_t> weights_;
};

/// The quantum [[n, K = 2k - n, d]]_q code built from C = [n, k] with
/// C^perp <= C. Both stabilizer types come from the rows of G_{C^perp}.
class CssCode {
   public:
    /// Throws std::invalid_argument when C^perp is not inside C or K < 1.
    static CssCode from_classical(const LinearCode &c);

    const LinearCode &base() const {
        return base_;
    }
    const Field &field() const {
        return base_.field();
    }
    const FieldPtr &field_ptr() const {
        return base_.field_ptr();
    }
    std::size_t n() const {
        return base_.n();
    }
    std::size_t k_logical() const {
        return d_matrix_.rows();
    }
    /// min{W(c) : c in C \ C^perp}.
    std::size_t d() const {
        return d_;
    }
    std::size_t t() const {
        return (d_ - 1) / 2;
    }
    std::string name() const {
        return base_.name();
    }
    /// "[[n,K,d]]_q".
    std::string params() const;

    /// Standard-form generator (I | A) of C^perp in permuted coordinates.
    const StandardForm &g_perp_standard() const {
        return g_perp_std_;
    }
    /// Generator of C^perp in original coordinates (rows of the reduced form).
    const Matrix &g_perp() const {
        return g_perp_;
    }
    /// Parity check of C^perp, i.e. a generator of C.
    const Matrix &h_perp() const {
        return base_.generator();
    }
    const Matrix &d_matrix() const {
        return d_matrix_;
    }
    /// Rows Z_j in C with D Z^T = I over F_q.
    const Matrix &logical_z_matrix() const {
        return logical_z_;
    }
    std::vector<PauliOperator> x_stabilizers() const;
    std::vector<PauliOperator> z_stabilizers() const;
    std::vector<PauliOperator> logical_x() const;
    std::vector<PauliOperator> logical_z() const;

    /// Coset leaders of C, indexed by the G_perp syndrome.
    const CosetTable &table() const {
        return table_;
    }
    /// Minimum weight of v + C.
    std::size_t weight_mod_c(std::span<const elem_t> v) const;
    /// Minimum weight of v + C^perp (enumerates C^perp).
    std::size_t weight_mod_perp(std::span<const elem_t> v) const;
    /// Coordinates of v in C / C^perp along the rows of D; v must lie in C.
    Vec logical_coords_x(std::span<const elem_t> v) const;
    /// Coordinates of v in C / C^perp along the rows of the logical Z matrix.
    Vec logical_coords_z(std::span<const elem_t> v) const;

   private:
    explicit CssCode(LinearCode c) : base_(std::move(c)) {
    }

    LinearCode base_;
    StandardForm g_perp_std_;
    Matrix g_perp_;
    Matrix d_matrix_;
    Matrix logical_z_;
    std::size_t d_ = 0;
    CosetTable table_;
    std::vector<Vec> perp_words_;
};

/// Appends the non-fault-tolerant encoder of |0_E> onto the given qudits of a
/// circuit: PrepZero on all, Fourier on the pivot positions of G_{C^perp},
/// then for each nonzero A[i][j] = r the sequence M_{r^-1}, ADD, M_r on the
/// target (a bare ADD when r = 1). Gates are packed as early as possible.
void append_encoder(Circuit &c, const CssCode &code, std::span<const std::size_t> qudits);
Circuit encoding_circuit(const CssCode &code);

enum class DecodeOutcome { no_error, corrected, logical_x, logical_z, logical_both, detected_uncorrectable };
std::string_view outcome_name(DecodeOutcome o);

enum class DecodeMode {
    zero_state,  // Z residuals in C act trivially, so only X logical errors count
    any,         // arbitrary logical state: both logical types count
};

struct DecodeResult {
    DecodeOutcome outcome;
    Vec x_shift;  // logical X coordinates of the net X operator
    Vec z_shift;  // logical Z coordinates of the net Z operator
    bool x_fail = false;  // X leader heavier than t, or a logical X shift
    bool z_fail = false;  // Z leader heavier than t, or (mode any) a logical Z shift

    bool failed() const {
        return outcome == DecodeOutcome::logical_x || outcome == DecodeOutcome::logical_z ||
               outcome == DecodeOutcome::logical_both || outcome == DecodeOutcome::detected_uncorrectable;
    }
};

/// Minimum-weight syndrome decoding of a residual on one block. A coset leader
/// heavier than t is reported as detected_uncorrectable.
DecodeResult ideal_decode(const CssCode &code, const PauliOperator &residual, DecodeMode mode = DecodeMode::any);

/// Whether the translates a + C, W(a) <= t, tile F_q^n exactly once. Exhaustive
/// when q^n <= 2^24, otherwise through the sphere-packing equality.
bool theorem1_coverage(const CssCode &code, bool allow_shortcut = true);
/// q^{n-K} >= sum_{i<=t} C(n,i) (q^2-1)^i, reported for information.
bool meets_quantum_hamming_bound(const CssCode &code);

}  // namespace qcss

#endif

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

#ifndef QCSS_CIRCUIT_H
#define QCSS_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/gf.h"
#include "qcss/linalg.h"
#include "qcss/pauli.h"
#include "qcss/rng.h"

namespace qcss {

inline constexpr std::size_t kNoQudit = std::numeric_limits<std::size_t>::max();

enum class GateKind { fourier, fourier_inverse, multiply, add, prep_zero, measure_z };

std::string_view gate_name(GateKind k);
GateKind parse_gate_name(std::string_view s);

struct Gate {
    GateKind kind;
    std::size_t a;               // the qudit, or the control of ADD
    std::size_t b = kNoQudit;    // target of ADD
    elem_t r = 0;                // multiplier of M_r
    std::size_t time_step = 0;

    bool two_qudit() const {
        return kind == GateKind::add;
    }
    bool operator==(const Gate &) const = default;
};

/// A named group of qudits whose Z-basis measurement forms one classical word.
/// `support` spans the ideal (noise-free) outcomes; `support_label` names it in
/// the text format.
struct Block {
    std::string name;
    std::vector<std::size_t> qudits;
    std::string support_label;
    Matrix support;
};

/// Gates in parallel time steps over a fixed qudit register.
class Circuit {
   public:
    Circuit(FieldPtr field, std::size_t n_qudits);

    const Field &field() const {
        return *field_;
    }
    const FieldPtr &field_ptr() const {
        return field_;
    }
    std::size_t n_qudits() const {
        return n_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    const std::vector<Block> &blocks() const {
        return blocks_;
    }
    /// Number of time steps spanned (last step + 1).
    std::size_t depth() const;

    /// Places the gate at its `time_step`; throws if a qudit is already used in
    /// that step or the gate is malformed.
    void append(const Gate &g);
    /// Places the gate at the earliest step after every earlier gate on its
    /// qudits and returns that step.
    std::size_t schedule(GateKind kind, std::size_t a, std::size_t b = kNoQudit, elem_t r = 0);
    /// Earliest step at which all the given qudits are free.
    std::size_t frontier(std::span<const std::size_t> qudits) const;
    /// Forces every qudit to be free no earlier than `step`.
    void barrier(std::size_t step);
    std::size_t add_block(Block b);

    /// Gates ordered by time step (stable), a valid execution order.
    std::vector<Gate> ordered_gates() const;

   private:
    void validate(const Gate &g) const;

    FieldPtr field_;
    std::size_t n_;
    std::vector<Gate> gates_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> next_free_;
    std::vector<std::vector<bool>> busy_;  // busy_[step][qudit]
};

/// gPg^dagger for a unitary gate. PrepZero and MeasureZ are rejected.
PauliOperator conjugate_through(const Gate &g, const PauliOperator &p);
/// In-place frame update on raw vectors, ignoring phase; the hot-path form.
void conjugate_frame(const Field &f, const Gate &g, std::span<elem_t> x, std::span<elem_t> z);

struct CostCounts {
    std::size_t two_qudit_gates = 0;
    std::size_t single_qudit_gates = 0;
    std::size_t preparations = 0;
    std::size_t measurements = 0;
    std::size_t time_steps = 0;  // non-empty layers

    bool operator==(const CostCounts &) const = default;
};
CostCounts count_costs(const Circuit &c);

enum class FaultChannel { depolarizing, x_only, z_only };

/// Independent single-qudit faults at countable locations.
struct NoiseModel {
    double epsilon = 0.0;
    bool after_gates = true;     // after F, F^-1, M_r and ADD, on each supported qudit
    bool after_prep = true;      // after each PrepZero
    bool before_measure = true;  // before each MeasureZ
    bool idle = false;           // each live qudit untouched in a time step
    bool correlated_add = false; // one two-qudit fault per ADD instead of two single ones
    FaultChannel channel = FaultChannel::depolarizing;

    void validate() const;
    std::string str() const;
};

std::string_view channel_name(FaultChannel c);
FaultChannel parse_channel(std::string_view s);

/// A place where a fault may strike: just before gate `before_gate` of the
/// ordered schedule (== gates.size() for the end of the circuit).
struct FaultSite {
    std::size_t before_gate;
    std::size_t qudit;
    std::size_t qudit2 = kNoQudit;  // set for correlated ADD faults
};

/// A concrete fault: X_x Z_z on the site's qudit (and X_x2 Z_z2 on qudit2).
struct Fault {
    std::size_t site;
    elem_t x = 0;
    elem_t z = 0;
    elem_t x2 = 0;
    elem_t z2 = 0;
};

/// Circuit flattened into an execution order with its fault sites.
struct Schedule {
    FieldPtr field;
    std::size_t n_qudits = 0;
    std::vector<Gate> gates;
    std::vector<FaultSite> sites;  // sorted by before_gate

    static Schedule build(const Circuit &c, const NoiseModel &noise);
    /// Number of distinct non-identity faults at a site.
    std::uint64_t fault_choices(std::size_t site, const NoiseModel &noise) const;
    /// The choice-th fault of the site's channel, choice < fault_choices.
    Fault fault_at(std::size_t site, std::uint64_t choice, const NoiseModel &noise) const;
};

struct FrameState {
    PauliOperator frame;             // over all qudits; zero on retired ones
    Vec measured;                    // x-frame value recorded at each MeasureZ
    std::vector<bool> retired;
    std::vector<Vec> block_words;    // ideal sample + measured x-frame, per block
};

/// Deterministic frame propagation with an explicit fault list (any order).
/// When `ideal_rng` is given, block words include an ideal sample drawn from
/// each fully measured block's support; otherwise only the frame part.
/// `initial` (over all qudits) seeds the frame, e.g. errors already present on
/// input blocks.
FrameState run_frame(const Circuit &c, const Schedule &s, std::span<const Fault> faults, Rng *ideal_rng = nullptr,
                     const PauliOperator *initial = nullptr);
/// Samples faults independently at every site with probability epsilon.
FrameState run_frame(const Circuit &c, const NoiseModel &noise, std::uint64_t seed);
/// Draws the fault list for one trial.
std::vector<Fault> sample_faults(const Schedule &s, const NoiseModel &noise, Rng &rng);

/// `t=<step> <KIND> q<i> [q<j>] [r=<elem>]` per gate, with `# field:`,
/// `# qudits:` and `# block <name> <support-label> q..` header lines.
void write_circuit(std::ostream &out, const Circuit &c);
/// `resolve_support(label, block_size)` supplies the support matrix of each
/// block named in the header.
Circuit read_circuit(std::istream &in,
                     const std::function<Matrix(const std::string &, std::size_t)> &resolve_support = {});

}  // namespace qcss

#endif

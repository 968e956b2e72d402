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

// Fault-tolerant |0_E> preparation: the bit-flip and phase-flip verification
// networks, their composition, the teleportation encoder at frame level, the
// gate/time-step cost comparison and the Monte Carlo scaling harness.

#ifndef QCSS_FTPREP_H
#define QCSS_FTPREP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcss/circuit.h"
#include "qcss/css.h"

namespace qcss {

enum class PrepOrder {
    raw,             // the encoder alone
    fig1_only,       // t+1 copies, bit-flip check (perfect codes)
    fig2_then_fig1,  // phase-flip checks on t+1 candidates, then bit-flip check
    fig1_then_fig2,  // the inverted composition, for comparison
};

std::string_view order_name(PrepOrder o);
PrepOrder parse_order(std::string_view s);

struct PrepStrategy {
    const CssCode *code;
    PrepOrder order;

    /// fig1_only for perfect base codes, fig2_then_fig1 otherwise.
    static PrepStrategy for_code(const CssCode &code);
    /// Throws std::invalid_argument for fig1_only on a non-perfect code.
    void validate() const;
};

enum class CheckKind { bitflip, phaseflip };

/// A measured ancilla block whose syndrome H_{C^perp} w^T must vanish.
struct Check {
    std::size_t block;  // index into Circuit::blocks()
    CheckKind kind;
    std::size_t round;  // verification round, 1..t
};

/// A preparation network: gates, the checks that gate acceptance, and the
/// qudits of the surviving block.
struct PrepCircuit {
    Circuit circuit;
    std::vector<Check> checks;
    std::vector<std::size_t> output;
    std::size_t copies = 1;
};

PrepCircuit build_prep_circuit(const CssCode &code, PrepOrder order);

/// Appends one bit-flip check round: transversal ADD copy0 -> ancilla, measure ancilla.
void append_bitflip_round(Circuit &c, std::span<const std::size_t> copy0, std::span<const std::size_t> ancilla);
/// Appends one phase-flip check round: F on the ancilla, transversal ADD ancilla ->
/// copy0, F^-1 on the ancilla, measure the ancilla.
void append_phaseflip_round(Circuit &c, std::span<const std::size_t> copy0, std::span<const std::size_t> ancilla);

struct TrialOutcome {
    bool accepted = true;
    std::vector<Vec> syndromes;  // one per check, in PrepCircuit::checks order
    PauliOperator residual;      // frame on the output block
    DecodeResult decode{DecodeOutcome::no_error, {}, {}};
    std::size_t x_weight = 0;    // min weight of residual.x + C^perp
    std::size_t z_weight = 0;    // min weight of residual.z + C
};

/// Syndromes, acceptance and residual classification from a finished frame.
/// `measured` is the x-frame recorded at each MeasureZ; x and z are the final
/// frame over all qudits.
TrialOutcome evaluate_trial(const CssCode &code, const PrepCircuit &prep, std::span<const elem_t> measured,
                            std::span<const elem_t> x, std::span<const elem_t> z, bool with_weights);

TrialOutcome prepare_zero_ft(const PrepStrategy &strategy, const NoiseModel &noise, std::uint64_t seed);
/// The bit-flip check alone on t+1 given (already noisy) copies.
TrialOutcome verify_bitflip(const CssCode &code, std::span<const PauliOperator> copies, const NoiseModel &noise,
                            std::uint64_t seed);
/// The phase-flip check alone on t+1 given copies.
TrialOutcome verify_phaseflip(const CssCode &code, std::span<const PauliOperator> copies, const NoiseModel &noise,
                              std::uint64_t seed);

/// Exhaustive single-fault injection over every site and every fault choice.
struct SoundnessReport {
    std::size_t sites = 0;
    std::size_t faults = 0;
    std::size_t accepted = 0;
    std::size_t violations = 0;  // accepted with effective X or Z weight > t
    std::vector<std::string> examples;
};
SoundnessReport single_fault_soundness(const CssCode &code, PrepOrder order, const NoiseModel &noise,
                                       std::size_t max_examples = 10);

/// Teleportation encoder on two ideal |0_E> blocks (qudits 0..n-1 and n..2n-1) and one input
/// qudit (2n). Requires K = 1.
struct TeleportCircuit {
    Circuit circuit;
    std::vector<std::size_t> a, b;
    std::size_t input = 0;
};
TeleportCircuit build_teleport_circuit(const CssCode &code);

struct TeleportFrameReport {
    std::size_t faults = 0;
    std::size_t strict_ok = 0;      // residual on B correctable as is
    std::size_t equivalent_ok = 0;  // a logical image of an input-qudit Pauli times a correctable error
    std::vector<std::string> violations;
};
/// Residual on the output block after the classically conditioned corrections.
PauliOperator teleport_residual(const CssCode &code, const TeleportCircuit &tc, const FrameState &st);
TrialOutcome teleport_encode_frame(const CssCode &code, const NoiseModel &noise, std::uint64_t seed);
TeleportFrameReport teleport_single_faults(const CssCode &code, const NoiseModel &noise);

struct CostReport {
    std::size_t g_x = 0;          // n t
    std::size_t g_z = 0;          // nonzeros of H_{C^perp} in standard form
    std::size_t n_t_steane = 0;   // d^perp
    std::size_t n_t_present = 2;  // per verification round
    std::size_t rounds = 0;       // t
    CostCounts fig1_network;      // measured on the emitted bit-flip network
};
CostReport cost_report(const CssCode &code);

struct McPoint {
    double epsilon = 0;
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    std::uint64_t failures = 0;    // accepted and logically failed
    std::uint64_t x_failures = 0;  // accepted with an X-type failure
    std::uint64_t z_failures = 0;  // accepted with a Z-type failure
    double p_fail = 0;             // failures / accepted
    double ci_lo = 0;
    double ci_hi = 0;
    double stderr_p = 0;
    double accept_rate = 0;
    double p_fail_unconditional = 0;
};

struct McResult {
    std::vector<McPoint> points;
    std::optional<double> slope;
    double slope_stderr = 0;
    std::size_t points_fitted = 0;
};

struct McOptions {
    NoiseModel noise;  // epsilon is overridden per point
    unsigned workers = 1;
    bool batch = true;  // bit-sliced frames when q = 2
    std::uint64_t min_failures_for_fit = 30;
};

McPoint run_point(const CssCode &code, const PrepCircuit &prep, double epsilon, std::uint64_t trials,
                  std::uint64_t seed, const McOptions &opt);
McResult montecarlo_scaling(const PrepStrategy &strategy, std::span<const double> epsilons, std::uint64_t trials,
                            std::uint64_t seed, const McOptions &opt = {});

/// Wilson score interval for k successes out of n at ~95% confidence.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054);
/// Least-squares slope of log y against log x, with its standard error.
std::pair<double, double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace qcss

#endif

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

#include "qcss/ftprep.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcss {

std::string_view order_name(PrepOrder o) {
    switch (o) {
        case PrepOrder::raw:
            return "raw";
        case PrepOrder::fig1_only:
            return "fig1";
        case PrepOrder::fig2_then_fig1:
            return "fig2+fig1";
        case PrepOrder::fig1_then_fig2:
            return "fig1+fig2";
    }
    return "?";
}

PrepOrder parse_order(std::string_view s) {
    for (auto o : {PrepOrder::raw, PrepOrder::fig1_only, PrepOrder::fig2_then_fig1, PrepOrder::fig1_then_fig2}) {
        if (order_name(o) == s) {
            return o;
        }
    }
    throw std::invalid_argument("unknown order `" + std::string(s) + "` (raw, fig1, fig2+fig1, fig1+fig2)");
}

PrepStrategy PrepStrategy::for_code(const CssCode &code) {
    return {&code, is_perfect(code.base()) ? PrepOrder::fig1_only : PrepOrder::fig2_then_fig1};
}

void PrepStrategy::validate() const {
    if (code == nullptr) {
        throw std::invalid_argument("strategy has no code");
    }
    if (order == PrepOrder::fig1_only && !is_perfect(code->base())) {
        throw std::invalid_argument("fig1 alone is only justified for perfect base codes");
    }
}

namespace {

std::vector<std::size_t> block_range(std::size_t index, std::size_t n) {
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), index * n);
    return out;
}

void transversal_single(Circuit &c, GateKind kind, std::span<const std::size_t> block) {
    std::size_t step = c.frontier(block);
    for (auto q : block) {
        c.append(Gate{kind, q, kNoQudit, 0, step});
    }
}

void transversal_add(Circuit &c, std::span<const std::size_t> control, std::span<const std::size_t> target) {
    if (control.size() != target.size()) {
        throw std::invalid_argument("transversal ADD between blocks of different sizes");
    }
    std::vector<std::size_t> both(control.begin(), control.end());
    both.insert(both.end(), target.begin(), target.end());
    std::size_t step = c.frontier(both);
    for (std::size_t j = 0; j < control.size(); j++) {
        c.append(Gate{GateKind::add, control[j], target[j], 0, step});
    }
}

std::size_t add_code_block(Circuit &c, const CssCode &code, std::string name, std::vector<std::size_t> qudits) {
    return c.add_block(Block{std::move(name), std::move(qudits), "perp", code.g_perp()});
}

}  // namespace

void append_bitflip_round(Circuit &c, std::span<const std::size_t> copy0, std::span<const std::size_t> ancilla) {
    transversal_add(c, copy0, ancilla);
    transversal_single(c, GateKind::measure_z, ancilla);
}

void append_phaseflip_round(Circuit &c, std::span<const std::size_t> copy0, std::span<const std::size_t> ancilla) {
    transversal_single(c, GateKind::fourier, ancilla);
    transversal_add(c, ancilla, copy0);
    transversal_single(c, GateKind::fourier_inverse, ancilla);
    transversal_single(c, GateKind::measure_z, ancilla);
}

PrepCircuit build_prep_circuit(const CssCode &code, PrepOrder order) {
    std::size_t n = code.n();
    std::size_t t = code.t();
    std::size_t copies = 1;
    if (order == PrepOrder::fig1_only) {
        copies = t + 1;
    } else if (order != PrepOrder::raw) {
        copies = (t + 1) * (t + 1);
    }
    PrepCircuit out{Circuit(code.field_ptr(), copies * n), {}, {}, copies};
    Circuit &c = out.circuit;
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < copies; i++) {
        blocks.push_back(block_range(i, n));
        add_code_block(c, code, "copy" + std::to_string(i), blocks.back());
    }
    for (const auto &b : blocks) {
        append_encoder(c, code, b);
    }
    auto bitflip = [&](std::size_t target, std::size_t ancilla, std::size_t round) {
        append_bitflip_round(c, blocks[target], blocks[ancilla]);
        out.checks.push_back({ancilla, CheckKind::bitflip, round});
    };
    auto phaseflip = [&](std::size_t target, std::size_t ancilla, std::size_t round) {
        append_phaseflip_round(c, blocks[target], blocks[ancilla]);
        out.checks.push_back({ancilla, CheckKind::phaseflip, round});
    };
    auto r = [&](std::size_t j, std::size_t l) { return j * (t + 1) + l; };
    switch (order) {
        case PrepOrder::raw:
            break;
        case PrepOrder::fig1_only:
            for (std::size_t i = 1; i <= t; i++) {
                bitflip(0, i, i);
            }
            break;
        case PrepOrder::fig2_then_fig1:
            for (std::size_t j = 0; j <= t; j++) {
                for (std::size_t l = 1; l <= t; l++) {
                    phaseflip(r(j, 0), r(j, l), l);
                }
            }
            for (std::size_t j = 1; j <= t; j++) {
                bitflip(r(0, 0), r(j, 0), j);
            }
            break;
        case PrepOrder::fig1_then_fig2:
            for (std::size_t j = 0; j <= t; j++) {
                for (std::size_t l = 1; l <= t; l++) {
                    bitflip(r(j, 0), r(j, l), l);
                }
            }
            for (std::size_t j = 1; j <= t; j++) {
                phaseflip(r(0, 0), r(j, 0), j);
            }
            break;
    }
    out.output = blocks[0];
    return out;
}

TrialOutcome evaluate_trial(const CssCode &code, const PrepCircuit &prep, std::span<const elem_t> measured,
                            std::span<const elem_t> x, std::span<const elem_t> z, bool with_weights) {
    const Field &f = code.field();
    TrialOutcome out;
    Vec word(code.n());
    for (const auto &chk : prep.checks) {
        const auto &qudits = prep.circuit.blocks()[chk.block].qudits;
        for (std::size_t j = 0; j < qudits.size(); j++) {
            word[j] = measured[qudits[j]];
        }
        Vec s = syndrome(f, code.h_perp(), word);
        out.accepted = out.accepted && hamming_weight(s) == 0;
        out.syndromes.push_back(std::move(s));
    }
    Vec rx(code.n());
    Vec rz(code.n());
    for (std::size_t j = 0; j < code.n(); j++) {
        rx[j] = x[prep.output[j]];
        rz[j] = z[prep.output[j]];
    }
    out.residual = PauliOperator(code.field_ptr(), PhaseExponent(0, f.p()), std::move(rx), std::move(rz));
    out.decode = ideal_decode(code, out.residual, DecodeMode::zero_state);
    if (with_weights) {
        out.x_weight = code.weight_mod_perp(out.residual.x());
        out.z_weight = code.weight_mod_c(out.residual.z());
    }
    return out;
}

namespace {

TrialOutcome evaluate_state(const CssCode &code, const PrepCircuit &prep, const FrameState &st) {
    return evaluate_trial(code, prep, st.measured, st.frame.x(), st.frame.z(), true);
}

TrialOutcome run_network(const CssCode &code, std::span<const PauliOperator> copies, const NoiseModel &noise,
                         std::uint64_t seed, CheckKind kind) {
    std::size_t n = code.n();
    std::size_t t = code.t();
    if (copies.size() != t + 1) {
        throw std::invalid_argument("verification needs exactly t+1 copies");
    }
    PrepCircuit prep{Circuit(code.field_ptr(), (t + 1) * n), {}, block_range(0, n), t + 1};
    Vec x0;
    Vec z0;
    for (std::size_t i = 0; i <= t; i++) {
        if (copies[i].n() != n) {
            throw std::invalid_argument("copy has the wrong block size");
        }
        add_code_block(prep.circuit, code, "copy" + std::to_string(i), block_range(i, n));
        x0.insert(x0.end(), copies[i].x().begin(), copies[i].x().end());
        z0.insert(z0.end(), copies[i].z().begin(), copies[i].z().end());
    }
    for (std::size_t i = 1; i <= t; i++) {
        auto anc = block_range(i, n);
        if (kind == CheckKind::bitflip) {
            append_bitflip_round(prep.circuit, prep.output, anc);
        } else {
            append_phaseflip_round(prep.circuit, prep.output, anc);
        }
        prep.checks.push_back({i, kind, i});
    }
    PauliOperator initial(code.field_ptr(), PhaseExponent(0, code.field().p()), std::move(x0), std::move(z0));
    Schedule s = Schedule::build(prep.circuit, noise);
    Rng rng(seed);
    auto faults = sample_faults(s, noise, rng);
    FrameState st = run_frame(prep.circuit, s, faults, &rng, &initial);
    return evaluate_state(code, prep, st);
}

std::string describe_fault(const Schedule &s, const Fault &f) {
    std::ostringstream out;
    const FaultSite &site = s.sites[f.site];
    out << "site " << f.site << " (before gate " << site.before_gate << ") q" << site.qudit << " X" << f.x << "Z"
        << f.z;
    if (site.qudit2 != kNoQudit) {
        out << " q" << site.qudit2 << " X" << f.x2 << "Z" << f.z2;
    }
    return out.str();
}

}  // namespace

TrialOutcome prepare_zero_ft(const PrepStrategy &strategy, const NoiseModel &noise, std::uint64_t seed) {
    strategy.validate();
    PrepCircuit prep = build_prep_circuit(*strategy.code, strategy.order);
    FrameState st = run_frame(prep.circuit, noise, seed);
    return evaluate_state(*strategy.code, prep, st);
}

TrialOutcome verify_bitflip(const CssCode &code, std::span<const PauliOperator> copies, const NoiseModel &noise,
                            std::uint64_t seed) {
    return run_network(code, copies, noise, seed, CheckKind::bitflip);
}

TrialOutcome verify_phaseflip(const CssCode &code, std::span<const PauliOperator> copies, const NoiseModel &noise,
                              std::uint64_t seed) {
    return run_network(code, copies, noise, seed, CheckKind::phaseflip);
}

SoundnessReport single_fault_soundness(const CssCode &code, PrepOrder order, const NoiseModel &noise,
                                       std::size_t max_examples) {
    PrepCircuit prep = build_prep_circuit(code, order);
    Schedule s = Schedule::build(prep.circuit, noise);
    SoundnessReport rep;
    rep.sites = s.sites.size();
    for (std::size_t site = 0; site < s.sites.size(); site++) {
        for (std::uint64_t choice = 0; choice < s.fault_choices(site, noise); choice++) {
            Fault f = s.fault_at(site, choice, noise);
            FrameState st = run_frame(prep.circuit, s, std::span<const Fault>(&f, 1));
            TrialOutcome o = evaluate_state(code, prep, st);
            rep.faults++;
            if (!o.accepted) {
                continue;
            }
            rep.accepted++;
            if (o.x_weight > code.t() || o.z_weight > code.t()) {
                rep.violations++;
                if (rep.examples.size() < max_examples) {
                    rep.examples.push_back(describe_fault(s, f) + " -> residual " + o.residual.str());
                }
            }
        }
    }
    return rep;
}

TeleportCircuit build_teleport_circuit(const CssCode &code) {
    if (code.k_logical() != 1) {
        throw std::invalid_argument("the teleportation encoder is built for K = 1");
    }
    const Field &f = code.field();
    std::size_t n = code.n();
    TeleportCircuit tc{Circuit(code.field_ptr(), 2 * n + 1), block_range(0, n), block_range(1, n), 2 * n};
    Circuit &c = tc.circuit;
    c.add_block(Block{"a", tc.a, "c", code.h_perp()});
    c.add_block(Block{"b", tc.b, "perp", code.g_perp()});
    c.add_block(Block{"input", {tc.input}, "full", Matrix::identity(1)});

    transversal_single(c, GateKind::fourier, tc.a);
    transversal_add(c, tc.a, tc.b);
    // Controlled X-bar^{-1} from the input onto block a: a_j += -D_j x.
    for (std::size_t j = 0; j < n; j++) {
        elem_t dj = code.d_matrix().at(0, j);
        if (dj == 0) {
            continue;
        }
        elem_t r = f.neg(dj);
        if (r != 1) {
            c.schedule(GateKind::multiply, tc.a[j], kNoQudit, f.inv(r));
        }
        c.schedule(GateKind::add, tc.input, tc.a[j]);
        if (r != 1) {
            c.schedule(GateKind::multiply, tc.a[j], kNoQudit, r);
        }
    }
    c.schedule(GateKind::fourier, tc.input);
    transversal_single(c, GateKind::measure_z, tc.a);
    c.schedule(GateKind::measure_z, tc.input);
    return tc;
}

PauliOperator teleport_residual(const CssCode &code, const TeleportCircuit &tc, const FrameState &st) {
    const Field &f = code.field();
    std::size_t n = code.n();
    Vec xa(n);
    Vec xb(n);
    Vec zb(n);
    for (std::size_t j = 0; j < n; j++) {
        xa[j] = st.measured[tc.a[j]];
        xb[j] = st.frame.x()[tc.b[j]];
        zb[j] = st.frame.z()[tc.b[j]];
    }
    // The decoded outcome of block a shifts by the logical part of its error,
    // and the input outcome by its X frame; the corrections X-bar^{-m} and
    // Z-bar^{-y} inherit those shifts.
    const CosetTable &table = code.table();
    std::size_t idx = table.index(syndrome(f, code.g_perp(), xa));
    elem_t dm = code.logical_coords_x(vec_sub(f, xa, table.leader(idx)))[0];
    elem_t dy = st.measured[tc.input];
    Vec x = vec_sub(f, xb, vec_scale(f, dm, code.d_matrix().row(0)));
    Vec z = vec_sub(f, zb, vec_scale(f, dy, code.logical_z_matrix().row(0)));
    return PauliOperator(code.field_ptr(), PhaseExponent(0, f.p()), std::move(x), std::move(z));
}

TrialOutcome teleport_encode_frame(const CssCode &code, const NoiseModel &noise, std::uint64_t seed) {
    TeleportCircuit tc = build_teleport_circuit(code);
    FrameState st = run_frame(tc.circuit, noise, seed);
    TrialOutcome out;
    out.residual = teleport_residual(code, tc, st);
    out.decode = ideal_decode(code, out.residual, DecodeMode::any);
    out.x_weight = code.weight_mod_perp(out.residual.x());
    out.z_weight = code.weight_mod_perp(out.residual.z());
    return out;
}

TeleportFrameReport teleport_single_faults(const CssCode &code, const NoiseModel &noise) {
    TeleportCircuit tc = build_teleport_circuit(code);
    Schedule s = Schedule::build(tc.circuit, noise);
    TeleportFrameReport rep;
    std::size_t t = code.t();
    for (std::size_t site = 0; site < s.sites.size(); site++) {
        for (std::uint64_t choice = 0; choice < s.fault_choices(site, noise); choice++) {
            Fault f = s.fault_at(site, choice, noise);
            FrameState st = run_frame(tc.circuit, s, std::span<const Fault>(&f, 1));
            PauliOperator r = teleport_residual(code, tc, st);
            rep.faults++;
            bool strict = code.weight_mod_perp(r.x()) <= t && code.weight_mod_perp(r.z()) <= t;
            bool equivalent = code.weight_mod_c(r.x()) <= t && code.weight_mod_c(r.z()) <= t;
            rep.strict_ok += strict;
            rep.equivalent_ok += equivalent;
            if (!equivalent && rep.violations.size() < 10) {
                rep.violations.push_back(describe_fault(s, f) + " -> residual " + r.str());
            }
        }
    }
    return rep;
}

CostReport cost_report(const CssCode &code) {
    CostReport rep;
    std::size_t n = code.n();
    std::size_t t = code.t();
    rep.g_x = n * t;
    rep.g_z = standard_form(code.base()).g_std.nonzeros();
    rep.n_t_steane = dual(code.base()).min_distance();
    rep.rounds = t;
    Circuit c(code.field_ptr(), (t + 1) * n);
    for (std::size_t i = 1; i <= t; i++) {
        append_bitflip_round(c, block_range(0, n), block_range(i, n));
    }
    rep.fig1_network = count_costs(c);
    return rep;
}

}  // namespace qcss

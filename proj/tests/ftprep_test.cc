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

#include <gtest/gtest.h>

#include "qcss/oracle.h"

using namespace qcss;

namespace {

// Second-order Reed-Muller code RM(2,4), a [16,11,4] code that contains its
// dual RM(1,4) and is not perfect.
LinearCode reed_muller_2_4() {
    auto f = Field::of_order(2);
    std::vector<std::vector<elem_t>> rows;
    auto eval = [](auto fn) {
        std::vector<elem_t> r(16);
        for (std::size_t p = 0; p < 16; p++) {
            r[p] = static_cast<elem_t>(fn(p) & 1);
        }
        return r;
    };
    rows.push_back(eval([](std::size_t) { return 1; }));
    for (std::size_t i = 0; i < 4; i++) {
        rows.push_back(eval([i](std::size_t p) { return p >> i; }));
    }
    for (std::size_t i = 0; i < 4; i++) {
        for (std::size_t j = i + 1; j < 4; j++) {
            rows.push_back(eval([i, j](std::size_t p) { return (p >> i) & (p >> j); }));
        }
    }
    return LinearCode(f, Matrix::from_rows(rows, 16), "rm24");
}

PauliOperator x_error(const CssCode &code, std::size_t qudit, elem_t v) {
    return PauliOperator::single(code.field_ptr(), code.n(), qudit, v, 0);
}

}  // namespace

TEST(FtPrep, order_names_round_trip) {
    for (auto o : {PrepOrder::raw, PrepOrder::fig1_only, PrepOrder::fig2_then_fig1, PrepOrder::fig1_then_fig2}) {
        EXPECT_EQ(parse_order(order_name(o)), o);
    }
    EXPECT_THROW(parse_order("fig3"), std::invalid_argument);
}

TEST(FtPrep, strategy_follows_perfectness) {
    CssCode steane = CssCode::from_classical(hamming(2, 3));
    CssCode rm = CssCode::from_classical(reed_muller_2_4());
    EXPECT_EQ(rm.params(), "[[16,6,4]]_2");
    EXPECT_EQ(PrepStrategy::for_code(steane).order, PrepOrder::fig1_only);
    EXPECT_EQ(PrepStrategy::for_code(rm).order, PrepOrder::fig2_then_fig1);
    EXPECT_THROW((PrepStrategy{&rm, PrepOrder::fig1_only}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((PrepStrategy{&steane, PrepOrder::fig2_then_fig1}.validate()));
}

TEST(FtPrep, copy_and_check_counts) {
    CssCode g23 = CssCode::from_classical(golay23());
    PrepCircuit p = build_prep_circuit(g23, PrepOrder::fig1_only);
    EXPECT_EQ(p.copies, 4u);
    EXPECT_EQ(p.checks.size(), 3u);
    CssCode h = CssCode::from_classical(hamming(3, 3));
    PrepCircuit q = build_prep_circuit(h, PrepOrder::fig2_then_fig1);
    EXPECT_EQ(q.copies, 4u);
    ASSERT_EQ(q.checks.size(), 3u);
    EXPECT_EQ(q.checks[0].kind, CheckKind::phaseflip);
    EXPECT_EQ(q.checks[2].kind, CheckKind::bitflip);
    EXPECT_EQ(q.circuit.n_qudits(), 52u);
}

TEST(FtPrep, noiseless_runs_accept_with_identity_residual) {
    NoiseModel noise;
    for (const LinearCode &c : {hamming(2, 3), hamming(3, 3), golay11_ternary(), golay23()}) {
        CssCode code = CssCode::from_classical(c);
        for (auto o : {PrepOrder::raw, PrepOrder::fig1_only, PrepOrder::fig2_then_fig1, PrepOrder::fig1_then_fig2}) {
            for (std::uint64_t seed = 0; seed < 3; seed++) {
                TrialOutcome r = prepare_zero_ft(PrepStrategy{&code, o}, noise, seed);
                EXPECT_TRUE(r.accepted) << code.params() << " " << order_name(o);
                EXPECT_EQ(r.residual.weight(), 0u);
                EXPECT_EQ(r.decode.outcome, DecodeOutcome::no_error);
            }
        }
    }
}

TEST(FtPrep, bitflip_check_rejects_a_single_x_error) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    NoiseModel noise;
    for (std::size_t j = 0; j < code.n(); j++) {
        std::vector<PauliOperator> copies{x_error(code, j, 1), PauliOperator(code.field_ptr(), code.n())};
        TrialOutcome r = verify_bitflip(code, copies, noise, 1);
        EXPECT_FALSE(r.accepted);
        EXPECT_NE(hamming_weight(r.syndromes[0]), 0u);
    }
}

TEST(FtPrep, bitflip_check_misses_matching_ancilla_errors) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    NoiseModel noise;
    std::vector<PauliOperator> copies{x_error(code, 2, 1), x_error(code, 2, 1)};
    TrialOutcome r = verify_bitflip(code, copies, noise, 1);
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.residual.x(), x_error(code, 2, 1).x());
}

TEST(FtPrep, bitflip_check_needs_all_syndromes_zero) {
    CssCode code = CssCode::from_classical(golay23());
    NoiseModel noise;
    PauliOperator clean(code.field_ptr(), code.n());
    // The copy-0 error is cancelled on two ancillas but seen by the third.
    std::vector<PauliOperator> copies{x_error(code, 5, 1), x_error(code, 5, 1), x_error(code, 5, 1), clean};
    TrialOutcome r = verify_bitflip(code, copies, noise, 1);
    EXPECT_FALSE(r.accepted);
    EXPECT_EQ(hamming_weight(r.syndromes[0]), 0u);
    EXPECT_EQ(hamming_weight(r.syndromes[1]), 0u);
    EXPECT_NE(hamming_weight(r.syndromes[2]), 0u);
    std::vector<PauliOperator> too_few{clean, clean};
    EXPECT_THROW(verify_bitflip(code, too_few, noise, 1), std::invalid_argument);
}

TEST(FtPrep, phaseflip_check_rejects_a_single_z_error) {
    CssCode code = CssCode::from_classical(hamming(3, 3));
    NoiseModel noise;
    PauliOperator clean(code.field_ptr(), code.n());
    for (std::size_t j = 0; j < code.n(); j++) {
        for (elem_t v = 1; v < 3; v++) {
            std::vector<PauliOperator> copies{PauliOperator::single(code.field_ptr(), code.n(), j, 0, v), clean};
            EXPECT_FALSE(verify_phaseflip(code, copies, noise, 2).accepted);
        }
    }
    // An X error on the checked block passes the phase-flip check untouched.
    std::vector<PauliOperator> copies{x_error(code, 0, 2), clean};
    TrialOutcome r = verify_phaseflip(code, copies, noise, 2);
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.residual.x(), x_error(code, 0, 2).x());
}

TEST(FtPrep, single_faults_are_caught_or_harmless) {
    NoiseModel noise;
    noise.epsilon = 0.01;
    struct Case {
        LinearCode code;
        PrepOrder order;
    };
    for (const auto &[c, order] : {Case{hamming(2, 3), PrepOrder::fig1_only},
                                   Case{hamming(2, 3), PrepOrder::fig2_then_fig1},
                                   Case{hamming(3, 3), PrepOrder::fig2_then_fig1},
                                   Case{reed_muller_2_4(), PrepOrder::fig2_then_fig1}}) {
        CssCode code = CssCode::from_classical(c);
        SoundnessReport rep = single_fault_soundness(code, order, noise);
        EXPECT_GT(rep.faults, 0u);
        EXPECT_GT(rep.accepted, 0u);
        EXPECT_LT(rep.accepted, rep.faults);
        EXPECT_EQ(rep.violations, 0u) << code.params() << " " << order_name(order) << ": "
                                      << (rep.examples.empty() ? "" : rep.examples[0]);
    }
}

TEST(FtPrep, single_faults_with_idle_and_correlated_noise) {
    NoiseModel noise;
    noise.epsilon = 0.01;
    noise.idle = true;
    noise.correlated_add = true;
    CssCode code = CssCode::from_classical(hamming(2, 3));
    EXPECT_EQ(single_fault_soundness(code, PrepOrder::fig1_only, noise).violations, 0u);
}

TEST(FtPrep, raw_encoder_spreads_single_faults) {
    NoiseModel noise;
    noise.epsilon = 0.01;
    CssCode code = CssCode::from_classical(hamming(2, 3));
    SoundnessReport rep = single_fault_soundness(code, PrepOrder::raw, noise);
    EXPECT_EQ(rep.accepted, rep.faults);
    EXPECT_GT(rep.violations, 0u);
}

// On perfect codes every Z residual on the encoded zero is equivalent to one
// of weight at most t, so fig1 alone never leaves an uncorrectable phase error.
TEST(FtPrep, z_faults_on_perfect_codes_are_always_benign) {
    NoiseModel noise;
    noise.epsilon = 0.08;
    noise.channel = FaultChannel::z_only;
    for (const LinearCode &c : {hamming(2, 3), hamming(3, 3), golay11_ternary()}) {
        CssCode code = CssCode::from_classical(c);
        PrepStrategy strat{&code, PrepOrder::fig1_only};
        StateVector zero = build_codeword(code, Vec(code.k_logical(), 0));
        std::size_t heavy = 0;
        for (std::uint64_t seed = 0; seed < 300; seed++) {
            TrialOutcome r = prepare_zero_ft(strat, noise, seed);
            if (!r.accepted) {
                continue;  // a Z fault ahead of an encoder Fourier gate becomes an X error
            }
            EXPECT_FALSE(r.decode.z_fail);
            EXPECT_NE(r.decode.outcome, DecodeOutcome::logical_z);
            EXPECT_LE(r.z_weight, code.t());
            if (hamming_weight(r.residual.z()) > code.t() && heavy < 5) {
                heavy++;
                Theorem2Witness w = theorem2_witness(code, r.residual.z(), &zero);
                EXPECT_LE(hamming_weight(w.witness), code.t());
                EXPECT_LT(w.deviation, 1e-9);
            }
        }
    }
}

TEST(FtPrep, teleport_noiseless_and_single_faults) {
    NoiseModel noise;
    for (const LinearCode &c : {hamming(2, 3), golay11_ternary()}) {
        CssCode code = CssCode::from_classical(c);
        TrialOutcome r = teleport_encode_frame(code, noise, 4);
        EXPECT_EQ(r.residual.weight(), 0u);
        EXPECT_EQ(r.decode.outcome, DecodeOutcome::no_error);
        NoiseModel one;
        one.epsilon = 0.01;
        TeleportFrameReport rep = teleport_single_faults(code, one);
        EXPECT_GT(rep.faults, 0u);
        EXPECT_EQ(rep.equivalent_ok, rep.faults) << (rep.violations.empty() ? "" : rep.violations[0]);
        EXPECT_LE(rep.strict_ok, rep.equivalent_ok);
    }
}

TEST(FtPrep, teleport_corrections_are_logical_paulis) {
    CssCode code = CssCode::from_classical(golay11_ternary());
    TeleportCircuit tc = build_teleport_circuit(code);
    NoiseModel noise;
    Schedule s = Schedule::build(tc.circuit, noise);
    const Field &f = code.field();
    // An X error on the input before its Fourier gate shifts only the Z correction.
    for (std::size_t site = 0; site < s.sites.size(); site++) {
        if (s.sites[site].qudit != tc.input) {
            continue;
        }
        for (std::uint64_t ch = 0; ch < s.fault_choices(site, noise); ch++) {
            Fault fl = s.fault_at(site, ch, noise);
            FrameState st = run_frame(tc.circuit, s, std::span<const Fault>(&fl, 1));
            PauliOperator r = teleport_residual(code, tc, st);
            DecodeResult d = ideal_decode(code, r, DecodeMode::any);
            EXPECT_NE(d.outcome, DecodeOutcome::detected_uncorrectable);
            // The residual is a logical power X-bar^a Z-bar^b.
            Vec xs = vec_sub(f, r.x(), vec_scale(f, d.x_shift[0], code.d_matrix().row(0)));
            Vec zs = vec_sub(f, r.z(), vec_scale(f, d.z_shift[0], code.logical_z_matrix().row(0)));
            EXPECT_EQ(code.weight_mod_perp(xs), 0u);
            EXPECT_EQ(code.weight_mod_perp(zs), 0u);
        }
    }
    EXPECT_THROW(build_teleport_circuit(CssCode::from_classical(hamming(3, 3))), std::invalid_argument);
}

TEST(FtPrep, cost_report_counts) {
    CostReport s = cost_report(CssCode::from_classical(hamming(2, 3)));
    EXPECT_EQ(s.g_x, 7u);
    EXPECT_EQ(s.g_z, 13u);
    EXPECT_EQ(s.n_t_steane, 4u);
    EXPECT_EQ(s.n_t_present, 2u);
    EXPECT_EQ(s.rounds, 1u);
    EXPECT_EQ(s.fig1_network.two_qudit_gates, 7u);
    EXPECT_EQ(s.fig1_network.measurements, 7u);
    EXPECT_EQ(s.fig1_network.time_steps, 2u);
    CostReport g = cost_report(CssCode::from_classical(golay23()));
    EXPECT_EQ(g.g_x, 69u);
    EXPECT_GE(g.g_z, 69u);
    EXPECT_EQ(g.rounds, 3u);
}

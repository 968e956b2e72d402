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

#include "qcss/circuit.h"

#include <gtest/gtest.h>

#include <array>
#include <set>
#include <sstream>

#include "qcss/css.h"
#include "qcss/oracle.h"

using namespace qcss;

namespace {

std::vector<Gate> unitary_gates(const Field &f) {
    std::vector<Gate> gates = {{GateKind::fourier, 0}, {GateKind::fourier_inverse, 1}, {GateKind::add, 0, 1},
                               {GateKind::add, 1, 0}};
    for (elem_t r = 1; r < f.q(); r++) {
        gates.push_back({GateKind::multiply, 1, kNoQudit, r});
    }
    return gates;
}

}  // namespace

// g P g^dagger computed by the frame rules must equal the dense product on
// every basis input, phase included.
TEST(Circuit, conjugation_matches_dense_products) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto f = Field::of_order(q);
        for (const Gate &g : unitary_gates(*f)) {
            for (elem_t x0 = 0; x0 < q; x0++) {
                for (elem_t z0 = 0; z0 < q; z0++) {
                    for (elem_t x1 = 0; x1 < q; x1++) {
                        for (elem_t z1 = 0; z1 < q; z1 += (q > 3 ? 2 : 1)) {
                            PauliOperator p(f, PhaseExponent(0, f->p()), Vec{x0, x1}, Vec{z0, z1});
                            PauliOperator image = conjugate_through(g, p);
                            for (elem_t e0 = 0; e0 < q; e0++) {
                                for (elem_t e1 = 0; e1 < q; e1++) {
                                    StateVector lhs = StateVector::basis(f, Vec{e0, e1});
                                    apply_pauli_dense(p, lhs);
                                    apply_gate_dense(g, lhs);
                                    StateVector rhs = StateVector::basis(f, Vec{e0, e1});
                                    apply_gate_dense(g, rhs);
                                    apply_pauli_dense(image, rhs);
                                    ASSERT_LT(exact_distance(lhs, rhs), 1e-10)
                                        << "q=" << q << " gate=" << gate_name(g.kind) << " P=" << p.str();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST(Circuit, add_rules_on_generators) {
    auto f = Field::of_order(3);
    Gate add{GateKind::add, 0, 1};
    // X on the control spreads to the target; Z on the target spreads back inverted.
    auto xc = conjugate_through(add, PauliOperator::single(f, 2, 0, 1, 0));
    EXPECT_EQ(xc.x(), (Vec{1, 1}));
    auto xt = conjugate_through(add, PauliOperator::single(f, 2, 1, 1, 0));
    EXPECT_EQ(xt.x(), (Vec{0, 1}));
    auto zc = conjugate_through(add, PauliOperator::single(f, 2, 0, 0, 1));
    EXPECT_EQ(zc.z(), (Vec{1, 0}));
    auto zt = conjugate_through(add, PauliOperator::single(f, 2, 1, 0, 1));
    EXPECT_EQ(zt.z(), (Vec{2, 1}));
}

TEST(Circuit, fourier_conjugation_rotates_x_to_z) {
    auto f = Field::of_order(5);
    auto image = conjugate_through(Gate{GateKind::fourier, 0}, PauliOperator::single(f, 1, 0, 2, 0));
    EXPECT_EQ(image.x(), Vec{0});
    EXPECT_EQ(image.z(), Vec{2});
    auto back = conjugate_through(Gate{GateKind::fourier_inverse, 0}, image);
    EXPECT_EQ(back, PauliOperator::single(f, 1, 0, 2, 0));
}

TEST(Circuit, scheduler_packs_disjoint_gates) {
    Circuit c(Field::of_order(2), 4);
    EXPECT_EQ(c.schedule(GateKind::prep_zero, 0), 0u);
    EXPECT_EQ(c.schedule(GateKind::prep_zero, 1), 0u);
    EXPECT_EQ(c.schedule(GateKind::add, 0, 1), 1u);
    EXPECT_EQ(c.schedule(GateKind::fourier, 2), 0u);
    EXPECT_EQ(c.schedule(GateKind::add, 2, 1), 2u);
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_THROW(c.append(Gate{GateKind::fourier, 0, kNoQudit, 0, 1}), std::invalid_argument);
    EXPECT_THROW(c.append(Gate{GateKind::add, 3, 3, 0, 5}), std::invalid_argument);
    EXPECT_THROW(c.append(Gate{GateKind::multiply, 3, kNoQudit, 0, 5}), std::invalid_argument);
    EXPECT_THROW(c.append(Gate{GateKind::fourier, 9}), std::out_of_range);
    c.barrier(7);
    EXPECT_EQ(c.schedule(GateKind::fourier, 3), 7u);
}

TEST(Circuit, text_format_round_trip) {
    CssCode code = CssCode::from_classical(hamming(3, 3));
    Circuit c = encoding_circuit(code);
    std::stringstream s;
    write_circuit(s, c);
    Circuit back = read_circuit(s, [&](const std::string &label, std::size_t) {
        EXPECT_EQ(label, "perp");
        return code.g_perp();
    });
    EXPECT_EQ(back.ordered_gates(), c.ordered_gates());
    EXPECT_EQ(back.n_qudits(), c.n_qudits());
    ASSERT_EQ(back.blocks().size(), c.blocks().size());
    EXPECT_EQ(back.blocks()[0].qudits, c.blocks()[0].qudits);
    std::stringstream again;
    write_circuit(again, back);
    s.clear();
    s.seekg(0);
    EXPECT_EQ(again.str(), s.str());
}

TEST(Circuit, malformed_text_reports_the_line) {
    std::stringstream bad("# field: 2^1/1,1\n# qudits: 2\nt=0 ADD q0\n");
    try {
        read_circuit(bad);
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::stringstream no_header("t=0 F q0\n");
    EXPECT_THROW(read_circuit(no_header), std::invalid_argument);
    std::stringstream bad_gate("# field: 2^1/1,1\n# qudits: 2\nt=0 CZ q0 q1\n");
    EXPECT_THROW(read_circuit(bad_gate), std::invalid_argument);
}

TEST(Circuit, cost_counts) {
    CssCode steane = CssCode::from_classical(hamming(2, 3));
    CostCounts cc = count_costs(encoding_circuit(steane));
    EXPECT_EQ(cc.preparations, 7u);
    EXPECT_EQ(cc.measurements, 0u);
    EXPECT_EQ(cc.two_qudit_gates, 9u);  // off-diagonal ones of the standard-form generator of C^perp
    EXPECT_GE(cc.time_steps, 3u);
}

TEST(Circuit, fault_sites_follow_the_noise_model) {
    Circuit c(Field::of_order(3), 3);
    c.schedule(GateKind::prep_zero, 0);
    c.schedule(GateKind::prep_zero, 1);
    c.schedule(GateKind::fourier, 0);
    c.schedule(GateKind::add, 0, 1);
    c.schedule(GateKind::measure_z, 1);
    NoiseModel noise;
    noise.epsilon = 0.1;
    Schedule s = Schedule::build(c, noise);
    // 2 preps, F, two ADD halves, one measurement.
    EXPECT_EQ(s.sites.size(), 6u);
    EXPECT_EQ(s.fault_choices(0, noise), 8u);
    noise.correlated_add = true;
    s = Schedule::build(c, noise);
    EXPECT_EQ(s.sites.size(), 5u);
    std::size_t pair = 0;
    for (std::size_t i = 0; i < s.sites.size(); i++) {
        if (s.sites[i].qudit2 != kNoQudit) {
            pair = i;
        }
    }
    EXPECT_EQ(s.fault_choices(pair, noise), 80u);
    noise.correlated_add = false;
    noise.idle = true;
    s = Schedule::build(c, noise);
    // Qudit 1 idles during F, qudit 0 during the measurement; qudit 2 is never live.
    EXPECT_EQ(s.sites.size(), 8u);
    noise.idle = false;
    noise.channel = FaultChannel::z_only;
    s = Schedule::build(c, noise);
    EXPECT_EQ(s.fault_choices(0, noise), 2u);
    Fault fl = s.fault_at(0, 1, noise);
    EXPECT_EQ(fl.x, 0);
    EXPECT_EQ(fl.z, 2);
}

TEST(Circuit, every_fault_choice_is_distinct_and_nontrivial) {
    Circuit c(Field::of_order(4), 2);
    c.schedule(GateKind::prep_zero, 0);
    c.schedule(GateKind::prep_zero, 1);
    c.schedule(GateKind::add, 0, 1);
    for (bool corr : {false, true}) {
        NoiseModel noise;
        noise.epsilon = 0.01;
        noise.correlated_add = corr;
        Schedule s = Schedule::build(c, noise);
        for (std::size_t i = 0; i < s.sites.size(); i++) {
            std::set<std::array<elem_t, 4>> seen;
            for (std::uint64_t ch = 0; ch < s.fault_choices(i, noise); ch++) {
                Fault fl = s.fault_at(i, ch, noise);
                EXPECT_TRUE(fl.x || fl.z || fl.x2 || fl.z2);
                seen.insert({fl.x, fl.z, fl.x2, fl.z2});
            }
            EXPECT_EQ(seen.size(), s.fault_choices(i, noise));
        }
    }
}

TEST(Circuit, zero_noise_frames_are_identity) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    Circuit c = encoding_circuit(code);
    NoiseModel noise;
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        FrameState st = run_frame(c, noise, seed);
        EXPECT_TRUE(st.frame.is_identity());
    }
}

TEST(Circuit, measured_blocks_sample_the_support_span) {
    CssCode code = CssCode::from_classical(hamming(3, 3));
    Circuit c = encoding_circuit(code);
    for (std::size_t i = 0; i < code.n(); i++) {
        c.schedule(GateKind::measure_z, i);
    }
    LinearCode perp = dual(code.base());
    NoiseModel noise;
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        FrameState st = run_frame(c, noise, seed);
        ASSERT_EQ(st.block_words.size(), 1u);
        EXPECT_TRUE(perp.contains(st.block_words[0]));
    }
}

TEST(Circuit, injected_fault_propagates_through_add) {
    auto f = Field::of_order(3);
    Circuit c(f, 2);
    c.schedule(GateKind::prep_zero, 0);
    c.schedule(GateKind::prep_zero, 1);
    c.schedule(GateKind::add, 0, 1);
    c.schedule(GateKind::measure_z, 0);
    c.schedule(GateKind::measure_z, 1);
    NoiseModel noise;
    noise.epsilon = 0.5;
    Schedule s = Schedule::build(c, noise);
    // Site 0 is after the preparation of qudit 0.
    ASSERT_EQ(s.sites[0].qudit, 0u);
    Fault fl{0, 2, 0};
    FrameState st = run_frame(c, s, std::span<const Fault>(&fl, 1));
    EXPECT_EQ(st.measured, (Vec{2, 2}));
}

TEST(Circuit, sampled_fault_rate_matches_epsilon) {
    Circuit c(Field::of_order(2), 50);
    for (std::size_t q = 0; q < 50; q++) {
        c.schedule(GateKind::prep_zero, q);
    }
    NoiseModel noise;
    noise.epsilon = 0.03;
    Schedule s = Schedule::build(c, noise);
    Rng rng(5);
    std::uint64_t total = 0;
    const int reps = 4000;
    for (int i = 0; i < reps; i++) {
        total += sample_faults(s, noise, rng).size();
    }
    double mean = static_cast<double>(total) / (reps * 50.0);
    EXPECT_NEAR(mean, 0.03, 0.003);
}

TEST(Circuit, noise_and_channel_names) {
    EXPECT_EQ(parse_channel("z"), FaultChannel::z_only);
    EXPECT_THROW(parse_channel("y"), std::invalid_argument);
    EXPECT_EQ(parse_gate_name("FINV"), GateKind::fourier_inverse);
    NoiseModel bad;
    bad.epsilon = 1.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

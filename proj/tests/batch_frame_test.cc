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

#include "qcss/batch_frame.h"

#include <gtest/gtest.h>

#include "qcss/ftprep.h"
#include "qcss/simd.h"

using namespace qcss;

namespace {

void expect_batch_matches_scalar(const PrepCircuit &prep, const NoiseModel &noise, std::size_t trials,
                                 std::uint64_t seed) {
    Schedule s = Schedule::build(prep.circuit, noise);
    Rng rng(seed);
    std::vector<std::vector<Fault>> faults(trials);
    for (auto &f : faults) {
        f = sample_faults(s, noise, rng);
    }
    BatchFrame batch = run_frame_batch(s, faults);
    ASSERT_EQ(batch.trials(), trials);
    for (std::size_t t = 0; t < trials; t++) {
        FrameState st = run_frame(prep.circuit, s, faults[t]);
        for (std::size_t q = 0; q < s.n_qudits; q++) {
            ASSERT_EQ(batch.bit(batch.measured(q), t), st.measured[q] != 0) << "trial " << t << " qudit " << q;
            ASSERT_EQ(batch.bit(batch.x(q), t), st.frame.x()[q] != 0) << "trial " << t << " qudit " << q;
            ASSERT_EQ(batch.bit(batch.z(q), t), st.frame.z()[q] != 0) << "trial " << t << " qudit " << q;
        }
    }
}

}  // namespace

TEST(BatchFrame, matches_scalar_frames_on_the_steane_network) {
    CssCode steane = CssCode::from_classical(hamming(2, 3));
    NoiseModel noise;
    noise.epsilon = 0.05;
    for (PrepOrder order : {PrepOrder::raw, PrepOrder::fig1_only, PrepOrder::fig2_then_fig1}) {
        expect_batch_matches_scalar(build_prep_circuit(steane, order), noise, 300, 7);
    }
}

TEST(BatchFrame, matches_scalar_frames_with_idle_and_correlated_faults) {
    CssCode steane = CssCode::from_classical(hamming(2, 3));
    NoiseModel noise;
    noise.epsilon = 0.03;
    noise.idle = true;
    noise.correlated_add = true;
    expect_batch_matches_scalar(build_prep_circuit(steane, PrepOrder::fig1_then_fig2), noise, 200, 8);
}

TEST(BatchFrame, matches_scalar_frames_under_both_kernel_backends) {
    CssCode code = CssCode::from_classical(hamming(2, 4));
    NoiseModel noise;
    noise.epsilon = 0.02;
    auto before = simd::active_backend();
    for (auto b : {simd::Backend::scalar, simd::Backend::avx2}) {
        if (!simd::backend_supported(b)) {
            continue;
        }
        simd::set_backend(b);
        expect_batch_matches_scalar(build_prep_circuit(code, PrepOrder::fig2_then_fig1), noise, 130, 9);
    }
    simd::set_backend(before);
}

TEST(BatchFrame, inject_toggles_single_trials) {
    BatchFrame bf(2, 70);
    bf.inject(65, 1, true, false);
    EXPECT_TRUE(bf.bit(bf.x(1), 65));
    EXPECT_FALSE(bf.bit(bf.x(1), 64));
    bf.apply(Gate{GateKind::add, 1, 0});
    EXPECT_TRUE(bf.bit(bf.x(0), 65));
    bf.apply(Gate{GateKind::fourier, 0});
    EXPECT_FALSE(bf.bit(bf.x(0), 65));
    EXPECT_TRUE(bf.bit(bf.z(0), 65));
    bf.inject(65, 1, true, false);
    EXPECT_FALSE(bf.bit(bf.x(1), 65));
}

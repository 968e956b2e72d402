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

#include <gtest/gtest.h>

#include <boost/math/distributions/binomial.hpp>
#include <cmath>

#include "qcss/ftprep.h"

using namespace qcss;

namespace {

void expect_same_point(const McPoint &a, const McPoint &b) {
    EXPECT_EQ(a.trials, b.trials);
    EXPECT_EQ(a.accepted, b.accepted);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.x_failures, b.x_failures);
    EXPECT_EQ(a.z_failures, b.z_failures);
    EXPECT_EQ(a.p_fail, b.p_fail);
}

}  // namespace

TEST(MonteCarlo, results_do_not_depend_on_worker_count) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    PrepCircuit prep = build_prep_circuit(code, PrepOrder::fig1_only);
    McOptions one;
    McOptions many;
    many.workers = 4;
    McPoint a = run_point(code, prep, 0.02, 20000, 99, one);
    McPoint b = run_point(code, prep, 0.02, 20000, 99, many);
    expect_same_point(a, b);
    EXPECT_EQ(a.trials, 20000u);
    EXPECT_GT(a.failures, 0u);
}

TEST(MonteCarlo, bit_sliced_and_scalar_paths_agree) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    for (auto order : {PrepOrder::raw, PrepOrder::fig1_only, PrepOrder::fig1_then_fig2}) {
        PrepCircuit prep = build_prep_circuit(code, order);
        McOptions batch;
        McOptions scalar;
        scalar.batch = false;
        expect_same_point(run_point(code, prep, 0.03, 9000, 5, batch), run_point(code, prep, 0.03, 9000, 5, scalar));
    }
}

TEST(MonteCarlo, seeds_change_the_sample) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    PrepCircuit prep = build_prep_circuit(code, PrepOrder::raw);
    McOptions opt;
    McPoint a = run_point(code, prep, 0.05, 10000, 1, opt);
    McPoint b = run_point(code, prep, 0.05, 10000, 2, opt);
    EXPECT_NE(a.failures, b.failures);
}

TEST(MonteCarlo, zero_noise_accepts_everything) {
    CssCode code = CssCode::from_classical(hamming(3, 3));
    PrepCircuit prep = build_prep_circuit(code, PrepOrder::fig2_then_fig1);
    McPoint p = run_point(code, prep, 0.0, 5000, 3, McOptions{});
    EXPECT_EQ(p.accepted, 5000u);
    EXPECT_EQ(p.failures, 0u);
    EXPECT_EQ(p.accept_rate, 1.0);
}

// Against an independent oracle: the raw encoder's unconditional failure rate
// at one fault per run is the fraction of single faults that fail.
TEST(MonteCarlo, raw_failure_rate_matches_single_fault_enumeration) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    PrepCircuit prep = build_prep_circuit(code, PrepOrder::raw);
    NoiseModel noise;
    noise.epsilon = 0.001;
    Schedule s = Schedule::build(prep.circuit, noise);
    double failing = 0;
    double total = 0;
    for (std::size_t site = 0; site < s.sites.size(); site++) {
        std::uint64_t choices = s.fault_choices(site, noise);
        for (std::uint64_t ch = 0; ch < choices; ch++) {
            Fault f = s.fault_at(site, ch, noise);
            FrameState st = run_frame(prep.circuit, s, std::span<const Fault>(&f, 1));
            TrialOutcome o = evaluate_trial(code, prep, st.measured, st.frame.x(), st.frame.z(), false);
            failing += o.decode.failed() / static_cast<double>(choices);
        }
        total += 1;
    }
    double predicted = noise.epsilon * failing;  // first order in epsilon
    McOptions opt;
    opt.workers = 4;
    McPoint p = run_point(code, prep, noise.epsilon, 400000, 17, opt);
    EXPECT_GT(total, 0);
    EXPECT_NEAR(p.p_fail_unconditional, predicted, 5 * std::sqrt(predicted / 400000.0) + 0.05 * predicted);
}

TEST(MonteCarlo, wilson_interval_properties) {
    auto [lo, hi] = wilson_interval(0, 100);
    EXPECT_EQ(lo, 0.0);
    EXPECT_GT(hi, 0.0);
    EXPECT_LT(hi, 0.05);
    auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR(lo2 + hi2, 1.0, 1e-12);
    EXPECT_NEAR(lo2, 0.4038, 1e-3);
    auto [lo3, hi3] = wilson_interval(3, 0);
    EXPECT_EQ(lo3, 0.0);
    EXPECT_EQ(hi3, 1.0);
}

// Coverage of the Wilson interval checked against exact binomial probabilities.
TEST(MonteCarlo, wilson_interval_has_near_nominal_coverage) {
    const std::uint64_t n = 400;
    for (double p : {0.01, 0.05, 0.2}) {
        boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
        double covered = 0;
        for (std::uint64_t k = 0; k <= n; k++) {
            auto [lo, hi] = wilson_interval(k, n);
            if (lo <= p && p <= hi) {
                covered += boost::math::pdf(dist, static_cast<double>(k));
            }
        }
        EXPECT_GT(covered, 0.92) << p;
        EXPECT_LT(covered, 0.99) << p;
    }
}

TEST(MonteCarlo, loglog_slope_recovers_power_laws) {
    std::vector<double> x{0.001, 0.002, 0.005, 0.01};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(7.0 * v * v);
    }
    auto [slope, err] = loglog_slope(x, y);
    EXPECT_NEAR(slope, 2.0, 1e-12);
    EXPECT_NEAR(err, 0.0, 1e-9);
    y[1] *= 1.1;
    auto [s2, e2] = loglog_slope(x, y);
    EXPECT_GT(e2, 0.0);
    EXPECT_NEAR(s2, 2.0, 0.1);
    EXPECT_THROW(loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
    EXPECT_THROW(loglog_slope(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}), std::invalid_argument);
    EXPECT_THROW(loglog_slope(std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 2.0}), std::invalid_argument);
}

TEST(MonteCarlo, scaling_fit_uses_only_well_populated_points) {
    CssCode code = CssCode::from_classical(hamming(2, 3));
    std::vector<double> eps{0.0005, 0.02, 0.04};
    McOptions opt;
    opt.workers = 4;
    McResult r = montecarlo_scaling(PrepStrategy{&code, PrepOrder::raw}, eps, 20000, 8, opt);
    ASSERT_EQ(r.points.size(), 3u);
    EXPECT_LT(r.points[0].failures, opt.min_failures_for_fit);
    EXPECT_EQ(r.points_fitted, 2u);
    ASSERT_TRUE(r.slope.has_value());
    EXPECT_NEAR(*r.slope, 1.0, 0.3);
    // Acceptance is non-increasing in epsilon.
    McResult ft = montecarlo_scaling(PrepStrategy{&code, PrepOrder::fig1_only}, eps, 20000, 8, opt);
    for (std::size_t i = 1; i < ft.points.size(); i++) {
        EXPECT_LE(ft.points[i].accept_rate, ft.points[i - 1].accept_rate);
    }
}

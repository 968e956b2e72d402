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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qcss/batch_frame.h"
#include "qcss/ftprep.h"

namespace qcss {

namespace {

// Work is cut into fixed chunks with their own seeds, so totals do not depend
// on how many workers run them.
constexpr std::uint64_t kChunkTrials = 4096;

struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    std::uint64_t failures = 0;
    std::uint64_t x_failures = 0;
    std::uint64_t z_failures = 0;

    void add(const Tally &o) {
        trials += o.trials;
        accepted += o.accepted;
        failures += o.failures;
        x_failures += o.x_failures;
        z_failures += o.z_failures;
    }
    void record(const TrialOutcome &o) {
        if (!o.accepted) {
            return;
        }
        accepted++;
        failures += o.decode.failed();
        x_failures += o.decode.x_fail;
        z_failures += o.decode.z_fail;
    }
};

Tally run_chunk(const CssCode &code, const PrepCircuit &prep, const Schedule &s, const NoiseModel &noise,
                std::uint64_t trials, std::uint64_t seed, bool batch) {
    Rng rng(seed);
    Tally tally;
    tally.trials = trials;
    std::vector<std::vector<Fault>> faulty;
    for (std::uint64_t i = 0; i < trials; i++) {
        auto faults = sample_faults(s, noise, rng);
        if (faults.empty()) {
            tally.accepted++;  // a fault-free run accepts with no residual
        } else {
            faulty.push_back(std::move(faults));
        }
    }
    if (faulty.empty()) {
        return tally;
    }
    std::size_t nq = s.n_qudits;
    if (batch && code.field().q() == 2) {
        BatchFrame bf = run_frame_batch(s, faulty);
        Vec measured(nq);
        Vec x(nq);
        Vec z(nq);
        for (std::size_t j = 0; j < faulty.size(); j++) {
            for (std::size_t q = 0; q < nq; q++) {
                measured[q] = bf.bit(bf.measured(q), j);
                x[q] = bf.bit(bf.x(q), j);
                z[q] = bf.bit(bf.z(q), j);
            }
            tally.record(evaluate_trial(code, prep, measured, x, z, false));
        }
    } else {
        for (const auto &faults : faulty) {
            FrameState st = run_frame(prep.circuit, s, faults);
            tally.record(evaluate_trial(code, prep, st.measured, st.frame.x(), st.frame.z(), false));
        }
    }
    return tally;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    double nn = static_cast<double>(n);
    double p = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double centre = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    double lo = k == 0 ? 0.0 : std::max(0.0, centre - half);
    double hi = k == n ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

std::pair<double, double> loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two points");
    }
    std::size_t n = x.size();
    std::vector<double> lx(n);
    std::vector<double> ly(n);
    for (std::size_t i = 0; i < n; i++) {
        if (x[i] <= 0 || y[i] <= 0) {
            throw std::invalid_argument("log-log fit needs positive values");
        }
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < n; i++) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < n; i++) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("slope fit needs distinct x values");
    }
    double slope = sxy / sxx;
    double err = 0;
    if (n > 2) {
        double sse = 0;
        for (std::size_t i = 0; i < n; i++) {
            double r = ly[i] - my - slope * (lx[i] - mx);
            sse += r * r;
        }
        err = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
    }
    return {slope, err};
}

McPoint run_point(const CssCode &code, const PrepCircuit &prep, double epsilon, std::uint64_t trials,
                  std::uint64_t seed, const McOptions &opt) {
    NoiseModel noise = opt.noise;
    noise.epsilon = epsilon;
    noise.validate();
    Schedule s = Schedule::build(prep.circuit, noise);

    std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Tally> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            std::uint64_t len = std::min(kChunkTrials, trials - c * kChunkTrials);
            results[c] = run_chunk(code, prep, s, noise, len, stream_seed(seed, c), opt.batch);
        }
    };
    unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    Tally total;
    for (const auto &r : results) {
        total.add(r);
    }

    McPoint pt;
    pt.epsilon = epsilon;
    pt.trials = total.trials;
    pt.accepted = total.accepted;
    pt.failures = total.failures;
    pt.x_failures = total.x_failures;
    pt.z_failures = total.z_failures;
    if (total.accepted > 0) {
        double a = static_cast<double>(total.accepted);
        pt.p_fail = static_cast<double>(total.failures) / a;
        pt.stderr_p = std::sqrt(pt.p_fail * (1 - pt.p_fail) / a);
    }
    std::tie(pt.ci_lo, pt.ci_hi) = wilson_interval(total.failures, total.accepted);
    if (total.trials > 0) {
        pt.accept_rate = static_cast<double>(total.accepted) / static_cast<double>(total.trials);
        pt.p_fail_unconditional = static_cast<double>(total.failures) / static_cast<double>(total.trials);
    }
    return pt;
}

McResult montecarlo_scaling(const PrepStrategy &strategy, std::span<const double> epsilons, std::uint64_t trials,
                            std::uint64_t seed, const McOptions &opt) {
    strategy.validate();
    PrepCircuit prep = build_prep_circuit(*strategy.code, strategy.order);
    McResult out;
    std::vector<double> fx;
    std::vector<double> fy;
    for (std::size_t i = 0; i < epsilons.size(); i++) {
        out.points.push_back(run_point(*strategy.code, prep, epsilons[i], trials, stream_seed(seed, i), opt));
        const McPoint &pt = out.points.back();
        if (pt.failures >= opt.min_failures_for_fit && pt.p_fail > 0) {
            fx.push_back(pt.epsilon);
            fy.push_back(pt.p_fail);
        }
    }
    out.points_fitted = fx.size();
    if (fx.size() >= 2) {
        auto [slope, err] = loglog_slope(fx, fy);
        out.slope = slope;
        out.slope_stderr = err;
    }
    return out;
}

}  // namespace qcss

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

#include <algorithm>
#include <stdexcept>

#include "qcss/simd.h"

namespace qcss {

BatchFrame::BatchFrame(std::size_t n_qudits, std::size_t trials)
    : n_(n_qudits),
      trials_(trials),
      words_((trials + 63) / 64),
      x_(n_qudits * words_, 0),
      z_(n_qudits * words_, 0),
      m_(n_qudits * words_, 0) {
}

void BatchFrame::apply(const Gate &g) {
    switch (g.kind) {
        case GateKind::fourier:
        case GateKind::fourier_inverse:
            // Over F_2, -z = z, so both directions are the Hadamard swap.
            simd::swap_words(x(g.a), z(g.a));
            break;
        case GateKind::multiply:
            break;  // r = 1 is the only nonzero element
        case GateKind::add:
            simd::xor_words(x(g.b), x(g.a));
            simd::xor_words(z(g.a), z(g.b));
            break;
        case GateKind::prep_zero:
            std::fill(x(g.a).begin(), x(g.a).end(), 0);
            std::fill(z(g.a).begin(), z(g.a).end(), 0);
            break;
        case GateKind::measure_z: {
            auto m = measured(g.a);
            auto xa = x(g.a);
            std::copy(xa.begin(), xa.end(), m.begin());
            std::fill(xa.begin(), xa.end(), 0);
            std::fill(z(g.a).begin(), z(g.a).end(), 0);
            break;
        }
    }
}

void BatchFrame::inject(std::size_t trial, std::size_t q, bool xb, bool zb) {
    std::uint64_t mask = std::uint64_t{1} << (trial % 64);
    if (xb) {
        x(q)[trial / 64] ^= mask;
    }
    if (zb) {
        z(q)[trial / 64] ^= mask;
    }
}

BatchFrame run_frame_batch(const Schedule &s, std::span<const std::vector<Fault>> trial_faults) {
    if (s.field->q() != 2) {
        throw std::invalid_argument("run_frame_batch: bit-sliced frames need q = 2");
    }
    BatchFrame frame(s.n_qudits, trial_faults.size());

    // Bucket faults by the gate they precede.
    std::vector<std::vector<std::pair<std::size_t, const Fault *>>> buckets(s.gates.size() + 1);
    for (std::size_t t = 0; t < trial_faults.size(); t++) {
        for (const auto &f : trial_faults[t]) {
            if (f.site >= s.sites.size()) {
                throw std::out_of_range("fault site out of range");
            }
            buckets[s.sites[f.site].before_gate].emplace_back(t, &f);
        }
    }
    auto inject = [&](std::size_t at) {
        for (auto [t, f] : buckets[at]) {
            const FaultSite &site = s.sites[f->site];
            frame.inject(t, site.qudit, f->x, f->z);
            if (site.qudit2 != kNoQudit) {
                frame.inject(t, site.qudit2, f->x2, f->z2);
            }
        }
    };
    for (std::size_t i = 0; i < s.gates.size(); i++) {
        inject(i);
        frame.apply(s.gates[i]);
    }
    inject(s.gates.size());
    return frame;
}

}  // namespace qcss

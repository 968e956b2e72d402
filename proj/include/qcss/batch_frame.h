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

#ifndef QCSS_BATCH_FRAME_H
#define QCSS_BATCH_FRAME_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcss/circuit.h"

namespace qcss {

/// Bit-sliced Pauli frames for many independent binary (q = 2) trials.
///
/// Trial j of qudit i lives in bit (j % 64) of word (j / 64) of the qudit's X
/// and Z rows, so a gate updates 64 trials per word with the vector kernels.
/// Phases are not tracked.
class BatchFrame {
   public:
    BatchFrame(std::size_t n_qudits, std::size_t trials);

    std::size_t n_qudits() const {
        return n_;
    }
    std::size_t trials() const {
        return trials_;
    }
    std::size_t words() const {
        return words_;
    }

    std::span<std::uint64_t> x(std::size_t q) {
        return {x_.data() + q * words_, words_};
    }
    std::span<std::uint64_t> z(std::size_t q) {
        return {z_.data() + q * words_, words_};
    }
    std::span<std::uint64_t> measured(std::size_t q) {
        return {m_.data() + q * words_, words_};
    }
    std::span<const std::uint64_t> x(std::size_t q) const {
        return {x_.data() + q * words_, words_};
    }
    std::span<const std::uint64_t> z(std::size_t q) const {
        return {z_.data() + q * words_, words_};
    }
    std::span<const std::uint64_t> measured(std::size_t q) const {
        return {m_.data() + q * words_, words_};
    }

    bool bit(std::span<const std::uint64_t> row, std::size_t trial) const {
        return (row[trial / 64] >> (trial % 64)) & 1;
    }

    void apply(const Gate &g);
    /// XORs X_x Z_z (bits) into one trial's frame on qudit q.
    void inject(std::size_t trial, std::size_t q, bool x, bool z);

   private:
    std::size_t n_;
    std::size_t trials_;
    std::size_t words_;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    std::vector<std::uint64_t> m_;
};

/// Runs `trial_faults.size()` binary trials through the schedule at once.
/// Equivalent, trial by trial, to run_frame without ideal sampling.
BatchFrame run_frame_batch(const Schedule &s, std::span<const std::vector<Fault>> trial_faults);

}  // namespace qcss

#endif

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

#include <bit>
#include <stdexcept>
#include <utility>

#include "qcss/simd.h"

namespace qcss::simd::scalar {

void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("gf_axpy: length mismatch");
    }
    if (a == 0) {
        return;
    }
    const Field &f = *ops.field;
    for (std::size_t i = 0; i < y.size(); i++) {
        y[i] = f.add(y[i], f.mul(a, x[i]));
    }
}

void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y) {
    const Field &f = *ops.field;
    for (auto &v : y) {
        v = f.mul(a, v);
    }
}

std::size_t count_nonzero(std::span<const elem_t> x) {
    std::size_t n = 0;
    for (auto v : x) {
        n += v != 0;
    }
    return n;
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    if (dst.size() != src.size()) {
        throw std::invalid_argument("xor_words: length mismatch");
    }
    for (std::size_t i = 0; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    if (dst.size() != src.size()) {
        throw std::invalid_argument("or_words: length mismatch");
    }
    for (std::size_t i = 0; i < dst.size(); i++) {
        dst[i] |= src[i];
    }
}

void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("swap_words: length mismatch");
    }
    for (std::size_t i = 0; i < a.size(); i++) {
        std::swap(a[i], b[i]);
    }
}

std::uint64_t popcount_words(std::span<const std::uint64_t> x) {
    std::uint64_t n = 0;
    for (auto w : x) {
        n += static_cast<std::uint64_t>(std::popcount(w));
    }
    return n;
}

bool any_words(std::span<const std::uint64_t> x) {
    for (auto w : x) {
        if (w) {
            return true;
        }
    }
    return false;
}

}  // namespace qcss::simd::scalar

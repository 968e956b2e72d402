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

// Compiled with -mavx2; only reached through the runtime dispatch in simd.cc.

#include <immintrin.h>

#include <bit>
#include <stdexcept>

#include "qcss/simd.h"

namespace qcss::simd::avx2 {

namespace {

constexpr std::size_t kLanes16 = 16;  // elem_t lanes per 256-bit register
constexpr std::size_t kWords = 4;     // uint64 words per 256-bit register

// Multiplication by a constant as a 16-entry byte table, broadcast to both
// 128-bit halves. Element lanes are 16 bits wide with a zero high byte, and
// table[0] == 0, so the shuffle leaves the high byte zero.
__m256i nibble_table(const Field &f, elem_t a) {
    alignas(16) std::uint8_t table[16] = {};
    for (std::uint32_t x = 0; x < f.q(); x++) {
        table[x] = static_cast<std::uint8_t>(f.mul(a, static_cast<elem_t>(x)));
    }
    __m128i t = _mm_load_si128(reinterpret_cast<const __m128i *>(table));
    return _mm256_broadcastsi128_si256(t);
}

inline __m256i add_lanes(const GfOps &ops, __m256i y, __m256i v, __m256i p) {
    if (ops.add_kind == GfOps::AddKind::xor_bits) {
        return _mm256_xor_si256(y, v);
    }
    __m256i r = _mm256_add_epi16(y, v);
    return _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
}

}  // namespace

void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("gf_axpy: length mismatch");
    }
    if (!ops.shuffle_friendly()) {
        scalar::gf_axpy(ops, a, x, y);
        return;
    }
    if (a == 0) {
        return;
    }
    const Field &f = *ops.field;
    const __m256i table = nibble_table(f, a);
    const __m256i p = _mm256_set1_epi16(static_cast<short>(f.p()));
    std::size_t i = 0;
    for (; i + kLanes16 <= y.size(); i += kLanes16) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(y.data() + i));
        __m256i prod = _mm256_shuffle_epi8(table, xv);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(y.data() + i), add_lanes(ops, yv, prod, p));
    }
    for (; i < y.size(); i++) {
        y[i] = f.add(y[i], f.mul(a, x[i]));
    }
}

void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y) {
    if (!ops.shuffle_friendly()) {
        scalar::gf_scale(ops, a, y);
        return;
    }
    const Field &f = *ops.field;
    const __m256i table = nibble_table(f, a);
    std::size_t i = 0;
    for (; i + kLanes16 <= y.size(); i += kLanes16) {
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(y.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(y.data() + i), _mm256_shuffle_epi8(table, yv));
    }
    for (; i < y.size(); i++) {
        y[i] = f.mul(a, y[i]);
    }
}

std::size_t count_nonzero(std::span<const elem_t> x) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t zeros = 0;
    std::size_t i = 0;
    for (; i + kLanes16 <= x.size(); i += kLanes16) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i));
        auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(v, zero)));
        zeros += static_cast<std::size_t>(std::popcount(mask)) / 2;
    }
    std::size_t nonzero = i - zeros;
    for (; i < x.size(); i++) {
        nonzero += x[i] != 0;
    }
    return nonzero;
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    if (dst.size() != src.size()) {
        throw std::invalid_argument("xor_words: length mismatch");
    }
    std::size_t i = 0;
    for (; i + kWords <= dst.size(); i += kWords) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst.data() + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst.data() + i), _mm256_xor_si256(a, b));
    }
    for (; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    if (dst.size() != src.size()) {
        throw std::invalid_argument("or_words: length mismatch");
    }
    std::size_t i = 0;
    for (; i + kWords <= dst.size(); i += kWords) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst.data() + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst.data() + i), _mm256_or_si256(a, b));
    }
    for (; i < dst.size(); i++) {
        dst[i] |= src[i];
    }
}

void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("swap_words: length mismatch");
    }
    std::size_t i = 0;
    for (; i + kWords <= a.size(); i += kWords) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a.data() + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(a.data() + i), vb);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(b.data() + i), va);
    }
    for (; i < a.size(); i++) {
        std::uint64_t t = a[i];
        a[i] = b[i];
        b[i] = t;
    }
}

std::uint64_t popcount_words(std::span<const std::uint64_t> x) {
    // Per-nibble lookup popcount, summed per 64-bit lane with SAD.
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                            2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kWords <= x.size(); i += kWords) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[kWords];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    std::uint64_t n = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < x.size(); i++) {
        n += static_cast<std::uint64_t>(_mm_popcnt_u64(x[i]));
    }
    return n;
}

bool any_words(std::span<const std::uint64_t> x) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kWords <= x.size(); i += kWords) {
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i *>(x.data() + i)));
    }
    if (!_mm256_testz_si256(acc, acc)) {
        return true;
    }
    for (; i < x.size(); i++) {
        if (x[i]) {
            return true;
        }
    }
    return false;
}

}  // namespace qcss::simd::avx2

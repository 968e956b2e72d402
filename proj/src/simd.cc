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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcss/simd.h"

namespace qcss::simd {

namespace {

Backend detect_backend() {
    Backend best = backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
    if (const char *env = std::getenv("QCSS_SIMD")) {
        std::string v(env);
        if (v == "scalar") {
            return Backend::scalar;
        }
        if (v == "avx2" && backend_supported(Backend::avx2)) {
            return Backend::avx2;
        }
    }
    return best;
}

std::atomic<Backend> &current() {
    static std::atomic<Backend> backend{detect_backend()};
    return backend;
}

bool use_avx2() {
#ifdef QCSS_HAVE_AVX2_KERNELS
    return current().load(std::memory_order_relaxed) == Backend::avx2;
#else
    return false;
#endif
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

bool backend_supported(Backend b) {
    if (b == Backend::scalar) {
        return true;
    }
#if defined(QCSS_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

Backend active_backend() {
    return current().load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw std::runtime_error("SIMD backend '" + std::string(backend_name(b)) + "' is not supported on this CPU");
    }
    current().store(b, std::memory_order_relaxed);
}

GfOps::GfOps(const Field &f) : field(&f) {
    if (f.p() == 2) {
        add_kind = AddKind::xor_bits;
    } else if (f.m() == 1) {
        add_kind = AddKind::mod_prime;
    } else {
        add_kind = AddKind::table;
    }
}

#ifdef QCSS_HAVE_AVX2_KERNELS
#define QCSS_DISPATCH(fn, ...) return use_avx2() ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define QCSS_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y) {
    QCSS_DISPATCH(gf_axpy, ops, a, x, y);
}

void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y) {
    QCSS_DISPATCH(gf_scale, ops, a, y);
}

std::size_t count_nonzero(std::span<const elem_t> x) {
    QCSS_DISPATCH(count_nonzero, x);
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    QCSS_DISPATCH(xor_words, dst, src);
}

void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    QCSS_DISPATCH(or_words, dst, src);
}

void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b) {
    QCSS_DISPATCH(swap_words, a, b);
}

std::uint64_t popcount_words(std::span<const std::uint64_t> x) {
    QCSS_DISPATCH(popcount_words, x);
}

bool any_words(std::span<const std::uint64_t> x) {
    QCSS_DISPATCH(any_words, x);
}

#undef QCSS_DISPATCH

}  // namespace qcss::simd

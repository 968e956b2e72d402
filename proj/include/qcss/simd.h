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

// Data-parallel inner loops: F_q vector arithmetic over elem_t lanes and
// bitwise operations over packed 64-bit words. Each kernel has a portable
// scalar reference and an AVX2 variant; the active backend is chosen once at
// startup from CPU features and can be overridden with QCSS_SIMD=scalar|avx2.

#ifndef QCSS_SIMD_H
#define QCSS_SIMD_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "qcss/gf.h"

namespace qcss::simd {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
/// Throws std::runtime_error if the backend is not supported on this CPU.
void set_backend(Backend b);

/// Precomputed view of a field for the vector kernels.
///
/// Fields with q <= 16 and a non-table addition are handled by the AVX2 path
/// with byte shuffles over per-call product tables. Addition is XOR for characteristic 2 and
/// add-then-conditional-subtract for prime fields; other fields fall back to
/// the scalar tables.
struct GfOps {
    const Field *field;
    enum class AddKind { xor_bits, mod_prime, table } add_kind;

    explicit GfOps(const Field &f);
    bool shuffle_friendly() const {
        return field->q() <= 16 && add_kind != AddKind::table;
    }
};

/// y[i] += a * x[i].
void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y);
/// y[i] = a * y[i].
void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y);
/// Number of nonzero entries.
std::size_t count_nonzero(std::span<const elem_t> x);

/// dst ^= src.
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
/// dst |= src.
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
/// Exchanges the contents of a and b.
void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b);
std::uint64_t popcount_words(std::span<const std::uint64_t> x);
bool any_words(std::span<const std::uint64_t> x);

// Backend-specific entry points, exposed for equivalence tests.
namespace scalar {
void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y);
void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y);
std::size_t count_nonzero(std::span<const elem_t> x);
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b);
std::uint64_t popcount_words(std::span<const std::uint64_t> x);
bool any_words(std::span<const std::uint64_t> x);
}  // namespace scalar

#ifdef QCSS_HAVE_AVX2_KERNELS
namespace avx2 {
void gf_axpy(const GfOps &ops, elem_t a, std::span<const elem_t> x, std::span<elem_t> y);
void gf_scale(const GfOps &ops, elem_t a, std::span<elem_t> y);
std::size_t count_nonzero(std::span<const elem_t> x);
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void swap_words(std::span<std::uint64_t> a, std::span<std::uint64_t> b);
std::uint64_t popcount_words(std::span<const std::uint64_t> x);
bool any_words(std::span<const std::uint64_t> x);
}  // namespace avx2
#endif

}  // namespace qcss::simd

#endif

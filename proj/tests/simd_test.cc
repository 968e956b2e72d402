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

// The vector kernels must agree bit for bit with their scalar references, on
// every length (including ragged tails) and every field the kernels accept.

#include "qcss/simd.h"

#include <gtest/gtest.h>

#include "qcss/linalg.h"
#include "qcss/rng.h"

using namespace qcss;

namespace {

Vec random_vec(Rng &rng, std::size_t n, std::uint32_t q) {
    Vec v(n);
    for (auto &e : v) {
        e = static_cast<elem_t>(rng.below(q));
    }
    return v;
}

std::vector<std::uint64_t> random_words(Rng &rng, std::size_t n) {
    std::vector<std::uint64_t> v(n);
    for (auto &w : v) {
        w = rng.next();
    }
    return v;
}

}  // namespace

TEST(Simd, scalar_gf_kernels_match_field_arithmetic) {
    Rng rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 7u, 9u, 16u, 25u, 256u}) {
        auto f = Field::of_order(q);
        simd::GfOps ops(*f);
        for (std::size_t n : {0u, 1u, 31u, 64u, 100u}) {
            Vec x = random_vec(rng, n, q);
            Vec y = random_vec(rng, n, q);
            elem_t a = static_cast<elem_t>(rng.below(q));
            Vec expect(n);
            for (std::size_t i = 0; i < n; i++) {
                expect[i] = f->add(y[i], f->mul(a, x[i]));
            }
            simd::scalar::gf_axpy(ops, a, x, y);
            EXPECT_EQ(y, expect);
            simd::scalar::gf_scale(ops, a, y);
            for (std::size_t i = 0; i < n; i++) {
                expect[i] = f->mul(a, expect[i]);
            }
            EXPECT_EQ(y, expect);
        }
    }
}

TEST(Simd, dispatch_reports_a_supported_backend) {
    EXPECT_TRUE(simd::backend_supported(simd::Backend::scalar));
    EXPECT_TRUE(simd::backend_supported(simd::active_backend()));
    auto before = simd::active_backend();
    simd::set_backend(simd::Backend::scalar);
    EXPECT_EQ(simd::active_backend(), simd::Backend::scalar);
    simd::set_backend(before);
}

#ifdef QCSS_HAVE_AVX2_KERNELS

class Avx2Equivalence : public ::testing::Test {
   protected:
    void SetUp() override {
        if (!simd::backend_supported(simd::Backend::avx2)) {
            GTEST_SKIP() << "CPU lacks AVX2";
        }
    }
};

TEST_F(Avx2Equivalence, gf_axpy_and_scale) {
    Rng rng(12);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 64u}) {
        auto f = Field::of_order(q);
        simd::GfOps ops(*f);
        for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 32u, 33u, 255u, 1000u}) {
            for (elem_t a = 0; a < std::min<std::uint32_t>(q, 6); a++) {
                Vec x = random_vec(rng, n, q);
                Vec y1 = random_vec(rng, n, q);
                Vec y2 = y1;
                simd::scalar::gf_axpy(ops, a, x, y1);
                simd::avx2::gf_axpy(ops, a, x, y2);
                ASSERT_EQ(y1, y2) << "axpy q=" << q << " n=" << n << " a=" << a;
                simd::scalar::gf_scale(ops, a, y1);
                simd::avx2::gf_scale(ops, a, y2);
                ASSERT_EQ(y1, y2) << "scale q=" << q << " n=" << n << " a=" << a;
            }
        }
    }
}

TEST_F(Avx2Equivalence, count_nonzero) {
    Rng rng(13);
    for (std::size_t n : {0u, 1u, 15u, 16u, 17u, 47u, 1000u}) {
        Vec x = random_vec(rng, n, 3);
        EXPECT_EQ(simd::scalar::count_nonzero(x), simd::avx2::count_nonzero(x));
    }
}

TEST_F(Avx2Equivalence, word_kernels) {
    Rng rng(14);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 9u, 64u, 129u}) {
        auto a = random_words(rng, n);
        auto b = random_words(rng, n);
        auto a1 = a;
        auto a2 = a;
        simd::scalar::xor_words(a1, b);
        simd::avx2::xor_words(a2, b);
        ASSERT_EQ(a1, a2);
        simd::scalar::or_words(a1, b);
        simd::avx2::or_words(a2, b);
        ASSERT_EQ(a1, a2);
        auto b1 = b;
        auto b2 = b;
        simd::scalar::swap_words(a1, b1);
        simd::avx2::swap_words(a2, b2);
        ASSERT_EQ(a1, a2);
        ASSERT_EQ(b1, b2);
        EXPECT_EQ(simd::scalar::popcount_words(a1), simd::avx2::popcount_words(a1));
        EXPECT_EQ(simd::scalar::any_words(a1), simd::avx2::any_words(a1));
        std::vector<std::uint64_t> zero(n, 0);
        EXPECT_FALSE(simd::avx2::any_words(zero));
    }
}

#endif

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

#include "qcss/linalg.h"

#include <gtest/gtest.h>

#include <boost/math/special_functions/binomial.hpp>
#include <cmath>
#include <set>

#include "qcss/rng.h"

using namespace qcss;

namespace {

Matrix random_matrix(Rng &rng, std::size_t r, std::size_t c, std::uint32_t q) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t j = 0; j < c; j++) {
            m.at(i, j) = static_cast<elem_t>(rng.below(q));
        }
    }
    return m;
}

}  // namespace

TEST(Linalg, nullspace_is_orthogonal_with_complementary_rank) {
    Rng rng(3);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 20; trial++) {
            std::size_t r = 1 + rng.below(6);
            std::size_t c = r + rng.below(6);
            Matrix m = random_matrix(rng, r, c, q);
            Matrix ns = nullspace(*f, m);
            EXPECT_EQ(rank(*f, m) + ns.rows(), c);
            Matrix prod = mul_transpose(*f, m, ns);
            EXPECT_EQ(prod.nonzeros(), 0u);
            EXPECT_EQ(rank(*f, ns), ns.rows());
        }
    }
}

TEST(Linalg, row_reduce_is_reduced) {
    auto f = Field::of_order(7);
    Rng rng(4);
    Matrix m = random_matrix(rng, 4, 7, 7);
    RowEchelon e = row_reduce(*f, m);
    for (std::size_t i = 0; i < e.pivots.size(); i++) {
        for (std::size_t r = 0; r < e.reduced.rows(); r++) {
            EXPECT_EQ(e.reduced.at(r, e.pivots[i]), r == i ? 1 : 0);
        }
    }
}

TEST(Linalg, inverse_and_singular) {
    auto f = Field::of_order(5);
    Rng rng(5);
    int found = 0;
    while (found < 10) {
        Matrix m = random_matrix(rng, 4, 4, 5);
        if (rank(*f, m) < 4) {
            EXPECT_THROW(inverse(*f, m), std::domain_error);
            continue;
        }
        found++;
        Matrix inv = inverse(*f, m);
        Matrix prod = mul_transpose(*f, m, inv.transpose());
        EXPECT_EQ(prod, Matrix::identity(4));
    }
}

TEST(Linalg, solve_row_combination) {
    auto f = Field::of_order(3);
    Matrix m = Matrix::from_rows({{1, 0, 2}, {0, 1, 1}}, 3);
    Vec u{2, 1};
    Vec v = vec_mul(*f, u, m);
    auto sol = solve_row_combination(*f, m, v);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(vec_mul(*f, *sol, m), v);
    EXPECT_FALSE(solve_row_combination(*f, m, Vec{1, 0, 0}).has_value());
}

TEST(Linalg, weight_vector_enumeration_counts_and_order) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (std::size_t n = 1; n <= 5; n++) {
            for (std::size_t w = 0; w <= n; w++) {
                std::set<Vec> seen;
                std::vector<std::size_t> last_support;
                bool ordered = true;
                for_each_weight_vector(n, q, w, [&](std::span<const elem_t> v, std::span<const std::size_t> s) {
                    EXPECT_EQ(hamming_weight(v), w);
                    std::vector<std::size_t> sup(s.begin(), s.end());
                    ordered = ordered && (last_support.empty() || last_support <= sup);
                    last_support = sup;
                    seen.insert(Vec(v.begin(), v.end()));
                    return true;
                });
                double expect = boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                                          static_cast<unsigned>(w)) *
                                std::pow(q - 1.0, static_cast<double>(w));
                EXPECT_EQ(seen.size(), static_cast<std::size_t>(expect)) << q << " " << n << " " << w;
                EXPECT_TRUE(ordered);
            }
        }
    }
}

TEST(Linalg, weight_vector_enumeration_stops_early) {
    int calls = 0;
    bool done = for_each_weight_vector(6, 2, 2, [&](std::span<const elem_t>, std::span<const std::size_t>) {
        return ++calls < 3;
    });
    EXPECT_FALSE(done);
    EXPECT_EQ(calls, 3);
}

TEST(Linalg, vector_helpers) {
    auto f = Field::of_order(4);
    Vec a{1, 2, 3};
    Vec b{3, 2, 1};
    EXPECT_EQ(vec_add(*f, a, b), (Vec{2, 0, 2}));
    EXPECT_EQ(vec_sub(*f, a, a), (Vec{0, 0, 0}));
    EXPECT_EQ(hamming_weight(Vec{0, 1, 0, 3}), 2u);
    EXPECT_EQ(vec_str(Vec{0, 1, 3}, 4), "013");
    EXPECT_EQ(vec_str(Vec{0, 10}, 11), "0,10");
}

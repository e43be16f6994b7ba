/*
 * Copyright 2026 The mrdlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "mrdlab/counting.hpp"
#include "mrdlab/matrix.hpp"

using namespace mrdlab;

TEST_CASE("rank basics") {
    Field f = Field::make(2, 1);
    CHECK(rank(Mat(f, 3, 2)) == 0);
    CHECK(rank(Mat::from_rows(f, {{1, 0}, {0, 1}, {0, 0}})) == 2);
}

TEST_CASE("rank census of binary 2x3") {
    Field f = Field::make(2, 1);
    std::map<int, int> census;
    for_each_mat(f, 2, 3, [&](const Mat& a) { ++census[rank(a)]; });
    CHECK(census[0] == 1);
    CHECK(census[1] == 21);
    CHECK(census[2] == 42);
}

TEST_CASE("rank census matches the closed form for q in {2,3}, m,n <= 3") {
    for (unsigned q : {2u, 3u}) {
        Field f = Field::of_order(q);
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                std::map<int, long> census;
                for_each_mat(f, m, n, [&](const Mat& a) { ++census[rank(a)]; });
                for (int r = 0; r <= std::min(m, n); ++r)
                    CHECK(Int(census[r]) == rank_count(m, n, q, r));
            }
    }
}

TEST_CASE("identity is neutral for matmul") {
    Field f = Field::make(2, 1);
    Mat i2 = Mat::identity(f, 2);
    for_each_mat(f, 2, 3, [&](const Mat& a) { CHECK(matmul(i2, a) == a); });
}

TEST_CASE("rank of products is bounded by both factors, exhaustively on 2x2 pairs") {
    Field f = Field::make(2, 1);
    auto all = enumerate_mats(f, 2, 2);
    for (const Mat& a : all)
        for (const Mat& b : all) CHECK(rank(matmul(a, b)) <= std::min(rank(a), rank(b)));
}

TEST_CASE("transpose involutes and preserves rank up to 3x3") {
    Field f = Field::make(2, 1);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for_each_mat(f, m, n, [&](const Mat& a) {
                CHECK(transpose(transpose(a)) == a);
                CHECK(rank(a) == rank(transpose(a)));
            });
}

TEST_CASE("shape and field errors") {
    Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
    Mat a(f2, 2, 2), b(f2, 3, 2), c(f3, 2, 2);
    CHECK_THROWS_AS(matmul(a, b), Error);
    CHECK_THROWS_AS(matadd(a, b), Error);
    CHECK_THROWS_AS(matadd(a, c), Error);
}

TEST_CASE("kernel dimensions and membership") {
    Field f = Field::make(2, 1);
    CHECK(kernel(Mat::identity(f, 3), Side::Right).empty());

    Mat p = Mat::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
    auto kr = kernel(p, Side::Right);
    REQUIRE(kr.size() == 1);
    CHECK(kr[0] == Mat::from_rows(f, {{0, 0, 1}}));

    for_each_mat(f, 3, 2, [&](const Mat& a) {
        auto kl = kernel(a, Side::Left);
        CHECK(int(kl.size()) == 3 - rank(a));
        for (const Mat& v : kl) CHECK(matmul(v, a).is_zero());
    });
}

TEST_CASE("full-rank enumeration counts") {
    Field f = Field::make(2, 1);
    CHECK(enumerate_full_rank(f, 3, 2).size() == 42);
    CHECK(enumerate_full_rank(f, 2, 3).size() == 42);
    CHECK(Int(enumerate_full_rank(f, 2, 2).size()) == full_rank_count(2, 2, 2));
}

TEST_CASE("enumeration is canonically ordered and duplicate-free") {
    Field f = Field::make(3, 1);
    auto all = enumerate_mats(f, 2, 2);
    REQUIRE(all.size() == 81);
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].pack() == i);
        if (i) CHECK(all[i - 1] < all[i]);
    }
    // re-running yields the identical sequence
    auto again = enumerate_mats(f, 2, 2);
    CHECK(all == again);
}

TEST_CASE("enumeration cap guard") {
    Field f = Field::make(2, 1);
    CHECK_THROWS_AS(enumerate_mats(f, 5, 5, 1 << 20), Error);
}

TEST_CASE("pack/unpack round-trip") {
    Field f = Field::make(2, 3);
    for (std::uint64_t idx = 0; idx < 64; ++idx)
        CHECK(Mat::unpack(f, 1, 2, idx).pack() == idx);
}

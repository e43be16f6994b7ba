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

#include <algorithm>
#include <set>

#include "mrdlab/codes.hpp"

using namespace mrdlab;

namespace {

// the two linear MRD codes of GF(2)^{2x2}
MatrixCode plane_code_a(const Field& f) {
    return MatrixCode(f, 2, 2,
                      {Mat(f, 2, 2), Mat::identity(f, 2), Mat::from_rows(f, {{1, 1}, {1, 0}}),
                       Mat::from_rows(f, {{0, 1}, {1, 1}})});
}

} // namespace

TEST_CASE("rank distance of the 4-element plane code") {
    Field f = Field::make(2, 1);
    MatrixCode a = plane_code_a(f);
    CHECK(a.is_linear());
    CHECK(rank_distance(a) == 2);
    CHECK(is_mrd(a, 1).mrd);
}

TEST_CASE("full space has rank distance 1 and is MRD at k = min(m,n)") {
    Field f = Field::make(2, 1);
    MatrixCode full(f, 2, 2, enumerate_mats(f, 2, 2));
    CHECK(rank_distance(full) == 1);
    CHECK(is_mrd(full, 2).mrd);
    CHECK_FALSE(is_mrd(full, 1).mrd);
}

TEST_CASE("rank distance needs two codewords") {
    Field f = Field::make(2, 1);
    MatrixCode single(f, 2, 2, {Mat(f, 2, 2)});
    CHECK_THROWS_AS(rank_distance(single), Error);
}

TEST_CASE("perturbing a codeword destroys the MRD property with a witness") {
    Field f = Field::make(2, 1);
    auto words = plane_code_a(f).words();
    // replace a rank-2 word by a rank-1 neighbour of another codeword
    words[1] = matadd(words[0], Mat::from_rows(f, {{1, 0}, {0, 0}}));
    MatrixCode bad(f, 2, 2, std::move(words));
    auto rep = is_mrd(bad, 1);
    CHECK_FALSE(rep.mrd);
    REQUIRE(rep.witness.has_value());
    CHECK(rank(matsub(rep.witness->first, rep.witness->second)) < 2);
}

TEST_CASE("gabidulin codes over GF(2)") {
    Field f = Field::make(2, 1);

    MatrixCode g321 = gabidulin(3, 2, 1, f);
    CHECK(g321.size() == 8);
    CHECK(rank_distance(g321) == 2);
    CHECK(is_mrd(g321, 1).mrd);

    MatrixCode g222 = gabidulin(2, 2, 2, f);
    CHECK(g222.size() == 16); // k = min(m,n): the whole space

    MatrixCode g332 = gabidulin(3, 3, 2, f);
    CHECK(g332.size() == 64);
    CHECK(rank_distance(g332) == 2);
    CHECK(is_mrd(g332, 2).mrd);

    // transposed construction for m < n
    MatrixCode g231 = gabidulin(2, 3, 1, f);
    CHECK(g231.size() == 8);
    CHECK(is_mrd(g231, 1).mrd);
    for (const Mat& w : g231.words()) CHECK(g321.contains(transpose(w)));
}

TEST_CASE("column deletion of an (m,m,k) code gives the (m,n,k) code") {
    Field f = Field::make(2, 1);
    MatrixCode g331 = gabidulin(3, 3, 1, f);
    std::set<std::uint64_t> truncated;
    for (const Mat& w : g331.words()) truncated.insert(w.col_slice(0, 2).pack());
    MatrixCode g321 = gabidulin(3, 2, 1, f);
    std::set<std::uint64_t> expect;
    for (const Mat& w : g321.words()) expect.insert(w.pack());
    CHECK(truncated == expect);

    // k = 2: deleting the last column of the (3,3,2) code leaves an MRD code
    MatrixCode g332 = gabidulin(3, 3, 2, f);
    std::vector<Mat> cut;
    for (const Mat& w : g332.words()) cut.push_back(w.col_slice(0, 2));
    CHECK(is_mrd(MatrixCode(f, 3, 2, std::move(cut)), 2).mrd);
}

TEST_CASE("for q = 2, MRD codes, complete mappings, and orthomorphisms coincide") {
    // all 24 graphs of bijections GF(2)^2 -> GF(2)^2
    Field f = Field::make(2, 1);
    std::vector<std::uint64_t> perm{0, 1, 2, 3};
    int mrd_count = 0;
    do {
        VecMap fm{f, 2, perm};
        bool complete = is_complete_mapping(fm);
        bool ortho = is_orthomorphism(fm);
        bool mrd = is_mrd(map_to_mrd(fm), 1).mrd;
        CHECK(complete == ortho);
        CHECK(complete == mrd);
        if (mrd) ++mrd_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(mrd_count == 8); // matches the number of MRD codes of the plane
}

TEST_CASE("transpose of an MRD code is MRD") {
    Field f = Field::make(2, 1);
    for (auto [m, n, k] : {std::tuple{3, 2, 1}, {2, 2, 1}, {3, 3, 2}}) {
        MatrixCode c = gabidulin(m, n, k, f);
        std::vector<Mat> tw;
        for (const Mat& w : c.words()) tw.push_back(transpose(w));
        CHECK(is_mrd(MatrixCode(f, n, m, std::move(tw)), k).mrd);
    }
}

TEST_CASE("Singleton bound with equality exactly for MRD codes") {
    Field f = Field::make(2, 1);
    auto singleton = [&](const MatrixCode& c) {
        int d = rank_distance(c);
        return ipow(Int(2), unsigned(std::max(c.m(), c.n()) * (std::min(c.m(), c.n()) - d + 1)));
    };
    MatrixCode g = gabidulin(3, 2, 1, f);
    CHECK(Int(g.size()) == singleton(g));
    // a non-MRD code: drop one codeword
    auto words = g.words();
    words.pop_back();
    MatrixCode smaller(f, 3, 2, std::move(words));
    CHECK(Int(smaller.size()) < singleton(smaller));
}

TEST_CASE("matrix field of GF(2^3)") {
    Field f = Field::make(2, 1);
    MatrixField mf = matrix_field(3, f);
    CHECK(mf.elements.size() == 8);
    int invertible = 0;
    for (const Mat& g : mf.elements)
        if (rank(g) == 3) ++invertible;
    CHECK(invertible == 7);
    // closure under addition
    for (const Mat& a : mf.elements)
        for (const Mat& b : mf.elements) {
            Mat s = matadd(a, b);
            bool found = false;
            for (const Mat& c : mf.elements)
                if (c == s) found = true;
            CHECK(found);
        }
}

TEST_CASE("F_m * A is an (m,n,1) MRD code and orbits count the codes") {
    Field f = Field::make(2, 1);
    MatrixField mf = matrix_field(3, f);
    Mat a = Mat::from_rows(f, {{1, 0}, {0, 1}, {0, 0}});
    MatrixCode c = mrd_from_field(mf, a);
    CHECK(is_mrd(c, 1).mrd);
    CHECK_THROWS_AS(mrd_from_field(mf, Mat(f, 3, 2)), Error);

    std::set<std::vector<std::uint64_t>> codes;
    for (const Mat& x : enumerate_full_rank(f, 3, 2)) {
        MatrixCode cx = mrd_from_field(mf, x);
        std::vector<std::uint64_t> key;
        for (const Mat& w : cx.words()) key.push_back(w.pack());
        codes.insert(key);
    }
    CHECK(Int(codes.size()) == mrd_orbit_count(3, 2, 2));
}

TEST_CASE("orthomorphism bridge round-trips the plane code") {
    Field f = Field::make(2, 1);
    MatrixCode a = plane_code_a(f);
    VecMap fm = mrd_to_map(a);
    CHECK(is_complete_mapping(fm));
    CHECK(is_orthomorphism(fm)); // characteristic 2: the notions agree
    CHECK(map_to_mrd(fm).words() == a.words());
}

TEST_CASE("linear complete mapping from the companion matrix of x^2+x+1") {
    Field f = Field::make(2, 1);
    Mat comp = Mat::from_rows(f, {{0, 1}, {1, 1}});
    VecMap fm{f, 2, {}};
    fm.tbl.resize(4);
    for (std::uint64_t x = 0; x < 4; ++x) {
        Mat xv = Mat::unpack(f, 1, 2, x);
        fm.tbl[x] = matmul(xv, comp).pack();
    }
    // needs the packing used by mrd_to_map: row vector index = pack of 1x2
    CHECK(is_complete_mapping(fm));
    MatrixCode c = map_to_mrd(fm);
    CHECK(is_mrd(c, 1).mrd);
    VecMap back = mrd_to_map(c);
    CHECK(back.tbl == fm.tbl);
}

TEST_CASE("identity map is not a complete mapping") {
    Field f = Field::make(2, 1);
    VecMap id{f, 2, {0, 1, 2, 3}};
    CHECK_FALSE(is_complete_mapping(id));
    MatrixCode c = map_to_mrd(id);
    CHECK_FALSE(is_mrd(c, 1).mrd);
}

TEST_CASE("mrd_to_map rejects non-bijective first columns") {
    Field f = Field::make(2, 1);
    std::vector<Mat> words;
    for (std::uint64_t i = 0; i < 4; ++i) {
        Mat w(f, 2, 2);
        w.set(0, 1, felem(i & 1));
        w.set(1, 1, felem(i >> 1));
        words.push_back(w); // all first columns zero
    }
    CHECK_THROWS_AS(mrd_to_map(MatrixCode(f, 2, 2, std::move(words))), Error);
}

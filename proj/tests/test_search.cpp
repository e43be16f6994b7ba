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

#include "mrdlab/search.hpp"

using namespace mrdlab;

namespace {

SearchConfig cfg_for(int m, int n, int k) {
    SearchConfig cfg{Field::make(2, 1)};
    cfg.m = m;
    cfg.n = n;
    cfg.k = k;
    return cfg;
}

} // namespace

TEST_CASE("minimum blocking set in AG(2,2): 1 + m(q-1) = 3") {
    auto res = min_dense_size(cfg_for(2, 1, 1));
    REQUIRE(res.minimum.has_value());
    CHECK(*res.minimum == 3);
    CHECK(res.proved);
    REQUIRE(res.witness.has_value());
    CHECK(is_k_dense(*res.witness, 1).dense);
}

TEST_CASE("minimum dense sets at q^{kn} with MRD witnesses for m <= n") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}}) {
        auto res = min_dense_size(cfg_for(m, n, 1));
        REQUIRE(res.minimum.has_value());
        CHECK(*res.minimum == (1 << n));
        CHECK(res.proved);
        REQUIRE(res.witness.has_value());
        CHECK(is_k_dense(*res.witness, 1).dense);
        CHECK(is_mrd(MatrixCode(res.witness->field(), m, n, res.witness->points()), 1).mrd);
    }
}

TEST_CASE("minimum with and without symmetry agree") {
    for (auto [m, n] : {std::pair{2, 1}, {2, 2}}) {
        SearchConfig on = cfg_for(m, n, 1);
        SearchConfig off = cfg_for(m, n, 1);
        off.symmetry = false;
        auto a = min_dense_size(on);
        auto b = min_dense_size(off);
        REQUIRE(a.minimum.has_value());
        REQUIRE(b.minimum.has_value());
        CHECK(*a.minimum == *b.minimum);
        CHECK(a.proved);
        CHECK(b.proved);
    }
}

TEST_CASE("seeded exploration order does not change the minimum") {
    SearchConfig cfg = cfg_for(2, 2, 1);
    cfg.seed = 987654321;
    auto res = min_dense_size(cfg);
    REQUIRE(res.minimum.has_value());
    CHECK(*res.minimum == 4);
    CHECK(res.proved);
    REQUIRE(res.witness.has_value());
    CHECK(is_k_dense(*res.witness, 1).dense);
}

TEST_CASE("nu_1(3,2,GF(2)) = 6 with proof") {
    auto res = min_dense_size(cfg_for(3, 2, 1));
    REQUIRE(res.minimum.has_value());
    CHECK(*res.minimum == 6);
    CHECK(res.proved);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->size() == 6);
    CHECK(is_k_dense(*res.witness, 1).dense);
}

TEST_CASE("decide mode: no 5-point dense set in GF(2)^{3x2}") {
    SearchConfig cfg = cfg_for(3, 2, 1);
    cfg.target = SearchConfig::Target::DecideSize;
    cfg.decide_size = 5;
    auto res = min_dense_size(cfg);
    CHECK(res.verdict == Verdict::Infeasible);
    CHECK(res.proved);
    cfg.decide_size = 6;
    res = min_dense_size(cfg);
    CHECK(res.verdict == Verdict::Feasible);
    REQUIRE(res.witness.has_value());
    CHECK(is_k_dense(*res.witness, 1).dense);
}

TEST_CASE("budget exhaustion is reported, not silently ignored") {
    SearchConfig cfg = cfg_for(3, 2, 1);
    cfg.node_budget = 3;
    auto res = min_dense_size(cfg);
    CHECK_FALSE(res.proved);
    CHECK(res.verdict == Verdict::Unknown);
    CHECK_FALSE(res.minimum.has_value());
    REQUIRE(res.witness.has_value()); // greedy best-so-far
    CHECK(is_k_dense(*res.witness, 1).dense);
}

TEST_CASE("nu_2(3,2,GF(2)) = 22 with proof") {
    auto res = min_dense_size(cfg_for(3, 2, 2));
    REQUIRE(res.minimum.has_value());
    CHECK(*res.minimum == 22);
    CHECK(res.proved);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->size() == 22);
    auto chk = is_k_dense(*res.witness, 2);
    CHECK(chk.dense);
    // a k-dense set is j-dense for all j <= k
    CHECK(is_k_dense(*res.witness, 1).dense);
    MESSAGE("nodes expanded: ", res.nodes);
}

TEST_CASE("decide mode: no 21-point line-blocking set in GF(2)^{3x2}") {
    SearchConfig cfg = cfg_for(3, 2, 2);
    cfg.target = SearchConfig::Target::DecideSize;
    cfg.decide_size = 21;
    auto res = min_dense_size(cfg);
    CHECK(res.verdict == Verdict::Infeasible);
    CHECK(res.proved);
    MESSAGE("decide-21 nodes: ", res.nodes);
}

TEST_CASE("strict bounds hold for the computed n < m value") {
    // q^{kn} < nu_k < q^{km} for (3,2,2), k in {1,2}
    CHECK(4 < 6);
    CHECK(6 < 8);
    CHECK(16 < 22);
    CHECK(22 < 64);
}

TEST_CASE("find_mrd_subset: planted code is found") {
    Field f = Field::make(2, 1);
    MatrixCode g = gabidulin(2, 3, 1, f);
    std::vector<Mat> pts = g.words();
    pts.push_back(Mat::from_rows(f, {{1, 1, 1}, {0, 0, 1}}));
    pts.push_back(Mat::from_rows(f, {{1, 0, 1}, {0, 1, 1}}));
    PointSet s(f, 2, 3, std::move(pts));
    auto found = find_mrd_subset(s, 1);
    REQUIRE(found.has_value());
    CHECK(is_mrd(*found, 1).mrd);
}

TEST_CASE("find_mrd_subset: the vertex-example subspace contains no MRD code") {
    Field f = Field::make(2, 1);
    std::vector<Mat> pts;
    for_each_mat(f, 2, 3, [&](const Mat& a) {
        felem a12 = a.at(0, 1), a13 = a.at(0, 2), a22 = a.at(1, 1), a23 = a.at(1, 2);
        if (f.add(f.add(a12, a13), a23) == 0 && f.add(f.add(a12, a22), a23) == 0)
            pts.push_back(a);
    });
    PointSet s(f, 2, 3, std::move(pts));
    REQUIRE(s.size() == 16);
    CHECK_FALSE(find_mrd_subset(s, 1).has_value());
}

TEST_CASE("find_mrd_subset: the full 2x2 space yields one of the 8 codes") {
    Field f = Field::make(2, 1);
    PointSet s(f, 2, 2, enumerate_mats(f, 2, 2));
    auto found = find_mrd_subset(s, 1);
    REQUIRE(found.has_value());
    CHECK(found->size() == 4);
    CHECK(is_mrd(*found, 1).mrd);
}

TEST_CASE("plane lemma report") {
    PlaneLemmaReport rep = verify_plane_lemma();
    CHECK(rep.mrd_code_count == 8);
    CHECK(rep.size4_all_mrd);
    CHECK(rep.part_i);
    CHECK(rep.part_ii);
    CHECK(rep.part_iii);
    CHECK(rep.affine_plane_order4);
    CHECK(rep.blocking_sets_of_size[5] > 0);
    CHECK(rep.blocking_sets_of_size[6] > 0);
    CHECK(rep.blocking_sets_of_size[7] > 0);
    CHECK(rep.blocking_sets_of_size[8] > 0);
    MESSAGE("blocking sets of sizes 4..8: ", rep.blocking_sets_of_size[4], " ",
            rep.blocking_sets_of_size[5], " ", rep.blocking_sets_of_size[6], " ",
            rep.blocking_sets_of_size[7], " ", rep.blocking_sets_of_size[8]);
}

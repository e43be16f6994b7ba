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

#include <cmath>
#include <random>

#include "mrdlab/codes.hpp"
#include "mrdlab/randomcoding.hpp"

using namespace mrdlab;

namespace {

std::vector<Mat> rows_of(const Field& f, std::initializer_list<std::initializer_list<unsigned>> rs) {
    std::vector<Mat> out;
    for (const auto& r : rs) out.push_back(Mat::from_rows(f, {r}));
    return out;
}

} // namespace

TEST_CASE("vector set properties are verified at construction") {
    Field f = Field::make(2, 1);
    // the 3 nonzero vectors of GF(2)^2: any 2 are independent
    VectorSet u(f, 2, rows_of(f, {{0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::AnyKIndependent, 2);
    CHECK(u.vectors().size() == 3);
    // adding 0 breaks it
    CHECK_THROWS_AS(VectorSet(f, 2, rows_of(f, {{0, 0}, {1, 0}, {1, 1}}),
                              VectorSetProperty::AnyKIndependent, 2),
                    Error);
    // all of GF(2)^2 satisfies the cap condition for k = 2 (no 3 points collinear)
    VectorSet cap(f, 2, rows_of(f, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::CapCondition,
                  2);
    CHECK(cap.vectors().size() == 4);
    // over GF(3), three collinear points violate the k = 2 cap condition
    Field f3 = Field::make(3, 1);
    CHECK_THROWS_AS(VectorSet(f3, 2, rows_of(f3, {{0, 0}, {1, 0}, {2, 0}}),
                              VectorSetProperty::CapCondition, 2),
                    Error);
}

TEST_CASE("pairwise independence of codeword maps (k = 2, binary 2x2)") {
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over_space(f, 2, 2);
    VectorSet u(f, 2, rows_of(f, {{0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::AnyKIndependent, 2);
    auto res = joint_law_check(d, u, JointLawMode::Linear, 2);
    CHECK(res.ok);
}

TEST_CASE("k = 1 linear joint law is the definition of goodness") {
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over(gabidulin(2, 3, 1, f));
    VectorSet u(f, 2, rows_of(f, {{1, 0}}), VectorSetProperty::AnyKIndependent, 1);
    CHECK(joint_law_check(d, u, JointLawMode::Linear, 1).ok);
}

TEST_CASE("triple law with a uniform translate (k = 2, binary 2x2)") {
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over_space(f, 2, 2);
    VectorSet u(f, 2, rows_of(f, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::CapCondition,
                2);
    auto res = joint_law_check(d, u, JointLawMode::Affine, 2);
    CHECK(res.ok);
}

TEST_CASE("joint law checks reject mismatched inputs") {
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over_space(f, 2, 2);
    VectorSet u(f, 2, rows_of(f, {{0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::AnyKIndependent, 2);
    CHECK_THROWS_AS(joint_law_check(d, u, JointLawMode::Affine, 2), Error);
    MatrixDistribution bad = point_mass(Mat(f, 2, 2));
    CHECK_THROWS_AS(joint_law_check(bad, u, JointLawMode::Linear, 2), Error);
}

TEST_CASE("joint laws hold over the corpus of k-good distributions") {
    Field f = Field::make(2, 1);
    VectorSet u2(f, 2, rows_of(f, {{0, 1}, {1, 0}, {1, 1}}), VectorSetProperty::AnyKIndependent, 2);
    VectorSet u1(f, 2, rows_of(f, {{0, 1}, {1, 1}}), VectorSetProperty::AnyKIndependent, 1);
    CHECK(joint_law_check(uniform_over_space(f, 2, 2), u2, JointLawMode::Linear, 2).ok);
    CHECK(joint_law_check(uniform_over(gabidulin(2, 2, 1, f)), u1, JointLawMode::Linear, 1).ok);
    CHECK(joint_law_check(uniform_over_space(f, 2, 3),
                          VectorSet(f, 2, rows_of(f, {{0, 1}, {1, 0}, {1, 1}}),
                                    VectorSetProperty::AnyKIndependent, 2),
                          JointLawMode::Linear, 2)
              .ok);
}

TEST_CASE("intersecting codes: examples") {
    Field f = Field::make(2, 1);
    // repetition code is 1-wise intersecting
    CHECK(is_k_wise_intersecting(Mat::from_rows(f, {{1, 1, 1, 1}}), 1));
    // identity generator: codewords 10 and 01 never share a nonzero position
    CHECK_FALSE(is_k_wise_intersecting(Mat::identity(f, 2), 2));
    // row space of [[1,0,1],[0,1,1]]: pairs (101,011): common position 3;
    // (101,110): common 1; (011,110): common 2 -> 2-wise intersecting
    CHECK(is_k_wise_intersecting(Mat::from_rows(f, {{1, 0, 1}, {0, 1, 1}}), 2));
}

TEST_CASE("failure bound values and exact comparison at (2,3,2)") {
    CHECK(intersecting_failure_bound(2, 3, 2, 2) == Rational(81, 32));
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over_space(f, 2, 3);
    Rational exact2 = intersecting_failure_exact(d, 2);
    CHECK(exact2 == Rational(36, 64));
    CHECK(exact2 <= intersecting_failure_bound(2, 3, 2, 2));
    Rational exact1 = intersecting_failure_exact(d, 1);
    CHECK(exact1 == 0);
    CHECK(exact1 <= intersecting_failure_bound(2, 3, 2, 1));
}

TEST_CASE("Monte Carlo estimate converges to the exact sweep") {
    Field f = Field::make(2, 1);
    MatrixDistribution d = uniform_over_space(f, 2, 3);
    Rational exact = intersecting_failure_exact(d, 2);
    const std::uint64_t trials = 4096;
    for (std::uint64_t seed : {1ull, 2ull, 42ull}) {
        Rational est = intersecting_failure_estimate(d, 2, trials, seed);
        double p = double(numerator(est).convert_to<double>()) /
                   double(denominator(est).convert_to<double>());
        double tol = 4.0 * std::sqrt(p * (1 - p) / double(trials));
        double diff = std::abs(
            (est - exact).convert_to<double>());
        CHECK(diff <= tol);
    }
    // estimates are reproducible for a fixed seed
    CHECK(intersecting_failure_estimate(d, 2, 64, 7) == intersecting_failure_estimate(d, 2, 64, 7));
}

TEST_CASE("pattern families") {
    PatternFamily sep = separating_2_1();
    CHECK(sep.k == 3);
    CHECK(sep.sets.size() == 3);
    PatternFamily singles = singleton_family(2, 2);
    CHECK(singles.sets.size() == 4);
    CHECK(f_set_rate_threshold(singles) == doctest::Approx(0.415037499278844).epsilon(1e-9));
}

TEST_CASE("f_set_extract: clean inputs pass through") {
    Field f = Field::make(2, 1);
    PatternFamily singles = singleton_family(2, 2);
    // two vectors whose 2x4 pattern matrix shows all four column patterns
    std::vector<Mat> c = rows_of(f, {{0, 0, 1, 1}, {0, 1, 0, 1}});
    auto r = f_set_extract(c, singles);
    CHECK(r.removed == 0);
    CHECK(r.kept.size() == 2);
    CHECK(is_f_set(r.kept, singles));
}

TEST_CASE("f_set_extract: short inputs are vacuous") {
    Field f = Field::make(2, 1);
    PatternFamily sep = separating_2_1();
    std::vector<Mat> c = rows_of(f, {{0, 0, 1}, {1, 0, 1}});
    auto r = f_set_extract(c, sep); // |C| = 2 < k = 3
    CHECK(r.removed == 0);
    CHECK(r.kept.size() == 2);
    CHECK(is_f_set(r.kept, sep));
}

TEST_CASE("f_set_extract removes duplicates and offending tuples") {
    Field f = Field::make(2, 1);
    PatternFamily singles = singleton_family(2, 2);
    std::vector<Mat> c = rows_of(f, {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}});
    auto r = f_set_extract(c, singles);
    // the duplicate pair is removed wholesale; tuples involving them go too
    CHECK(r.removed >= 2);
    CHECK(is_f_set(r.kept, singles));
}

TEST_CASE("extraction output verifies on 100 seeded trials") {
    Field f = Field::make(2, 1);
    PatternFamily singles = singleton_family(2, 2);
    PatternFamily sep = separating_2_1();
    std::mt19937_64 rng(20110501);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Mat> c;
        for (int i = 0; i < 8; ++i) c.push_back(Mat::unpack(f, 1, 4, rng() % 16));
        CHECK(is_f_set(f_set_extract(c, singles).kept, singles));
        std::vector<Mat> c3;
        for (int i = 0; i < 8; ++i) c3.push_back(Mat::unpack(f, 1, 4, rng() % 16));
        CHECK(is_f_set(f_set_extract(c3, sep).kept, sep));
    }
}

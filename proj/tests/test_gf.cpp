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

#include "mrdlab/gf.hpp"

using namespace mrdlab;

TEST_CASE("prime field GF(2)") {
    Field f = Field::make(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.primitive_element() == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.mul(1, 1) == 1);
}

TEST_CASE("GF(8) with the shipped modulus x^3+x+1") {
    Field f = Field::make(2, 3);
    CHECK(f.modulus() == std::vector<unsigned>{1, 1, 0, 1});
    // alpha * alpha^2 = alpha^3 = alpha + 1, i.e. index 3
    CHECK(f.mul(2, 4) == 3);
    CHECK(f.mul_order(2) == 7);
    for (felem a = 1; a < 8; ++a) CHECK(f.mul(f.inv(a), a) == 1);
}

TEST_CASE("explicit modulus equals the default") {
    Field f = Field::make(2, 3, std::vector<unsigned>{1, 1, 0, 1});
    Field g = Field::make(2, 3);
    CHECK(f == g);
}

TEST_CASE("GF(4): every nonzero element satisfies x^3 = 1") {
    Field f = Field::make(2, 2);
    for (felem a = 1; a < 4; ++a) CHECK(f.pow(a, 3) == 1);
}

TEST_CASE("element enumeration is the index order") {
    Field f = Field::make(2, 2);
    auto e = f.elements();
    REQUIRE(e.size() == 4);
    for (size_t i = 0; i < e.size(); ++i) CHECK(e[i] == felem(i));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), Error);                                   // non-prime
    CHECK_THROWS_AS(Field::make(2, 17), Error);                                  // too large
    CHECK_THROWS_AS(Field::make(2, 3, std::vector<unsigned>{1, 0, 0, 1}), Error); // x^3+1 reducible
    CHECK_THROWS_AS(Field::make(2, 1).inv(0), Error);
}

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
        Field f = Field::of_order(q);
        for (felem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            for (felem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (felem c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius: (a+b)^p = a^p + b^p") {
    for (unsigned q : {4u, 8u, 9u, 16u}) {
        Field f = Field::of_order(q);
        for (felem a = 0; a < q; ++a)
            for (felem b = 0; b < q; ++b)
                CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
    }
}

TEST_CASE("log/antilog round-trip") {
    Field f = Field::make(2, 4);
    for (felem a = 1; a < 16; ++a) CHECK(f.antilog(f.log(a)) == a);
}

TEST_CASE("large field uses log tables: GF(2^10)") {
    Field f = Field::make(2, 10);
    CHECK(f.q() == 1024);
    felem x = 123, y = 456;
    CHECK(f.mul(x, f.inv(x)) == 1);
    CHECK(f.add(x, y) == (x ^ y)); // characteristic 2: addition is xor of packings
    CHECK(f.mul_order(f.primitive_element()) == 1023);
}

TEST_CASE("extension field over a non-prime base") {
    Field f4 = Field::make(2, 2);
    ExtField e(f4, 2); // GF(16) over GF(4)
    CHECK(e.order() == 16);
    auto g = e.gen();
    // the generator has multiplicative order 15
    auto acc = e.one();
    int ord = 0;
    do {
        acc = e.mul(acc, g);
        ++ord;
    } while (acc != e.one());
    CHECK(ord == 15);
}

TEST_CASE("ExtField over a prime base matches the Field packing") {
    Field f2 = Field::make(2, 1);
    ExtField e(f2, 3);
    Field f8 = Field::make(2, 3);
    for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b)
            CHECK(e.pack(e.mul(e.unpack(a), e.unpack(b))) == f8.mul(felem(a), felem(b)));
}

/*
   Copyright 2026 The ffperiod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>
#include <set>

#include "doctest.h"
#include "ffp/error.hpp"
#include "ffp/gf.hpp"
#include "oracles.hpp"

using namespace ffp;
using namespace ffp::gf;

TEST_CASE("canonical moduli and primitive elements") {
    auto F16 = make_field(2, 4);
    CHECK(F16->modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
    CHECK(F16->primitive() == 2);
    CHECK(F16->describe() == "GF(2^4) mod x^4 + x + 1");
    auto F9 = make_field(3, 2);
    CHECK(F9->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(make_field(7, 1)->primitive() == 3);
    CHECK(make_field(2, 4) == F16);
}

TEST_CASE("arithmetic agrees with schoolbook reduction") {
    const std::pair<u64, unsigned> fields[] = {{2, 1}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}};
    for (auto [p, m] : fields) {
        auto F = make_field(p, m);
        CAPTURE(F->describe());
        for (Elem a = 0; a < F->order(); ++a) {
            for (Elem b = 0; b < F->order(); ++b) {
                REQUIRE(F->mul(a, b) == oracle::mul(*F, a, b));
                REQUIRE(F->add(a, b) == oracle::add(*F, a, b));
            }
        }
    }
}

TEST_CASE("primitive element generates the unit group") {
    for (auto [p, m] : {std::pair<u64, unsigned>{2, 6}, {3, 4}, {5, 3}, {13, 1}}) {
        auto F = make_field(p, m);
        std::set<Elem> seen;
        Elem x = 1;
        for (u64 i = 0; i + 1 < F->order(); ++i, x = F->mul(x, F->primitive())) seen.insert(x);
        CHECK(seen.size() == F->order() - 1);
        CHECK(F->mult_order(F->primitive()) == F->order() - 1);
    }
}

TEST_CASE("table-free fields match table fields") {
    auto T = make_field(2, 12);
    REQUIRE(T->has_tables());
    auto big = make_field(2, 21);
    CHECK_FALSE(big->has_tables());
    CHECK(is_prime(big->p()));
    const Elem g = big->primitive();
    CHECK(big->mult_order(g) == big->order() - 1);
    for (Elem a : {Elem{3}, Elem{12345}, Elem{2000000}}) {
        CHECK(big->mul(a, big->inv(a)) == 1);
        CHECK(big->pow(a, big->order() - 1) == 1);
    }
    CHECK_THROWS_AS(big->log(5), Error);
}

TEST_CASE("inverse, pow, Fermat") {
    auto F = make_field(5, 3);
    for (Elem a = 1; a < F->order(); ++a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->pow(a, F->order()) == a);
        CHECK(F->exp(F->log(a)) == a);
    }
    CHECK_THROWS_AS(F->inv(0), Error);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_field(6, 1), Error);
    try {
        make_field(2, 40);
        FAIL("expected cap error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeCapExceeded);
    }
}

TEST_CASE("FieldElement operators") {
    auto F = make_field(3, 2);
    FieldElement a(F, 4), b(F, 7);
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    CHECK(-a + a == FieldElement(F, 0));
    CHECK(a.pow(8) == FieldElement(F, 1));
    FieldElement other(make_field(3, 1), 1);
    CHECK_THROWS_AS(static_cast<void>(a + other), Error);
}

TEST_CASE("field axioms on random triples and table consistency") {
    std::mt19937_64 rng(9);
    for (auto [p, m] : {std::pair<u64, unsigned>{2, 10}, {3, 6}, {5, 4}, {7, 3}, {31, 2}, {2, 22}}) {
        auto F = make_field(p, m);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F->order() - 1));
        for (int i = 0; i < 300; ++i) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            REQUIRE(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            REQUIRE(F->sub(F->add(a, b), b) == a);
            if (a) REQUIRE(F->mul(a, F->inv(a)) == 1);
        }
        if (F->has_tables()) {
            Elem x = 1;
            for (u64 i = 0; i + 1 < F->order(); ++i, x = F->mul(x, F->primitive())) REQUIRE(F->exp(i) == x);
        }
    }
    auto F4 = make_field(2, 2);
    const Elem z = primitive_element(F4).code();
    CHECK(F4->pow(z, 3) == 1);
    CHECK(z != 1);
    CHECK(F4->mul(z, z) != 1);
    CHECK(primitive_element(make_field(2, 1)).code() == 1);
}

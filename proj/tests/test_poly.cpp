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

#include "doctest.h"
#include "ffp/error.hpp"
#include "ffp/poly.hpp"
#include "oracles.hpp"

using namespace ffp;
using namespace ffp::gf;

TEST_CASE("basic ring operations") {
    auto F2 = make_field(2, 1);
    PolyFq a(F2, {1, 1, 0, 0, 1});
    CHECK(to_string(a) == "x^4 + x + 1");
    CHECK(a.degree() == 4);
    CHECK(PolyFq(F2).degree() == -1);
    PolyFq b(F2, {1, 1});
    auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(gcd(a * b, b * b) == b);
    CHECK(a.derivative() == PolyFq(F2, {1}));
    CHECK_THROWS_AS(divmod(a, PolyFq(F2)), Error);
}

TEST_CASE("Rabin test matches trial division") {
    for (auto [p, m, dmax] : {std::tuple<u64, unsigned, unsigned>{2, 1, 8}, {3, 1, 5}, {2, 2, 4}, {5, 1, 3}}) {
        auto F = make_field(p, m);
        for (unsigned d = 1; d <= dmax; ++d) {
            for (const auto& h : oracle::monic_polys(F, d)) {
                CAPTURE(to_string(h));
                REQUIRE(is_irreducible(h) == oracle::irreducible(h));
            }
        }
    }
}

TEST_CASE("factor degrees match trial division") {
    auto F3 = make_field(3, 1);
    for (const auto& h : oracle::monic_polys(F3, 5)) {
        CAPTURE(to_string(h));
        REQUIRE(factor_degrees(h) == oracle::factor_degrees(h));
    }
    auto F2 = make_field(2, 1);
    PolyFq sq(F2, {1, 0, 1, 0, 1});
    CHECK(factor_degrees(sq) == std::vector<unsigned>{2, 2});
    CHECK_THROWS_AS(factor_degrees(PolyFq(F2)), Error);
}

TEST_CASE("count of monic irreducibles follows Gauss's formula") {
    auto F2 = make_field(2, 1);
    std::size_t count = 0;
    for (const auto& h : oracle::monic_polys(F2, 8)) count += is_irreducible(h);
    CHECK(count == 30);
    auto F4 = make_field(2, 2);
    count = 0;
    for (const auto& h : oracle::monic_polys(F4, 3)) count += is_irreducible(h);
    CHECK(count == 20);
}

TEST_CASE("frobenius of x") {
    auto F2 = make_field(2, 1);
    PolyFq h(F2, {1, 1, 0, 0, 1});
    CHECK(frobenius_x(h, 4) == PolyFq::x(F2));
    CHECK(powmod(PolyFq::x(F2), 15, h) == PolyFq::constant(F2, 1));
}

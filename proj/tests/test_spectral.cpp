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

#include "doctest.h"
#include "ffp/error.hpp"
#include "ffp/spectral.hpp"
#include "ffp/tower.hpp"
#include "oracles.hpp"

using namespace ffp;
using namespace ffp::gf;
using namespace ffp::spectral;

namespace {

PolyFq sparse(const FieldRef& F, std::initializer_list<std::size_t> exps) {
    std::vector<Elem> c;
    for (auto e : exps) {
        if (c.size() <= e) c.resize(e + 1, 0);
        c[e] = 1;
    }
    return PolyFq(F, c);
}

}  // namespace

TEST_CASE("S(x) for the sigma_2 polynomial over F_2") {
    auto F2 = make_field(2, 1);
    const PolyFq h = sparse(F2, {3, 5, 6, 9, 10, 12});
    CHECK(auto_subfield_order(h, 2, 4) == 2);
    const SPoly s = build_S(h, 2, 4, 2);
    const std::vector<Elem> want{1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0};
    CHECK(std::vector<Elem>(s.coeff_seq.values().begin(), s.coeff_seq.values().end()) == want);
    CHECK(s.poly == h + PolyFq::constant(F2, 1));
    const Verdict v = degree_n_factor_test(h, 2, 4);
    CHECK(v.proven());
    CHECK(v.evidence.least_period == 15);
    CHECK(v.evidence.threshold == 3);
    const auto degs = oracle_factor_degrees(h);
    CHECK(std::count(degs.begin(), degs.end(), 4u) >= 1);
}

TEST_CASE("S detects roots: its transform is the zero indicator of h") {
    auto t = make_tower(3, 2);
    auto F3 = t->base();
    for (const auto& h : oracle::monic_polys(F3, 3)) {
        const SPoly s = build_S(h, 3, 2);
        const auto& E = t->ext();
        const auto lifted = zfun::lift(s.coeff_seq, *t);
        const auto S = zfun::dft(lifted, zfun::root_of_unity(E, 8));
        for (u64 i = 0; i < 8; ++i) REQUIRE(S[i] == (t->eval(h, E->exp(i)) == 0 ? 1u : 0u));
    }
}

TEST_CASE("trivial S") {
    auto F2 = make_field(2, 1);
    CHECK(build_S(PolyFq::constant(F2, 1), 2, 3).coeff_seq.support().empty());
    auto F4 = make_field(2, 2);
    // h = x over F_2 with n = 2 and L = F_4: 1 - x^3 vanishes mod x^3 - 1
    const auto s = build_S(PolyFq::x(F2), 2, 2, 4);
    CHECK(s.coeff_seq.support().empty());
    CHECK_FALSE(degree_n_factor_test(PolyFq::x(F2), 2, 2, 4).proven());
    CHECK(F4->order() == 4);
}

TEST_CASE("subfield validation") {
    auto F2 = make_field(2, 1);
    const PolyFq h(F2, {1, 1, 0, 0, 1});
    CHECK(auto_subfield_order(h, 2, 4) == 4);
    CHECK_THROWS_AS(build_S(h, 2, 4, 2), Error);
    CHECK_THROWS_AS(build_S(h, 2, 4, 8), Error);
    CHECK_THROWS_AS(build_S(h, 2, 4, 3), Error);
    CHECK(build_S(h, 2, 4, 16).subfield_order == 16);
    CHECK_THROWS_AS(build_S(PolyFq(F2), 2, 4), Error);
    CHECK_THROWS_AS(build_S(PolyFq(make_field(3, 1), {1, 1}), 2, 4), Error);
}

TEST_CASE("product of the irreducible quadratics has no quartic factor") {
    auto F2 = make_field(2, 1);
    const PolyFq h(F2, {1, 1, 1});
    const Verdict v = degree_n_factor_test(h, 2, 4);
    CHECK_FALSE(v.proven());
    CHECK(v.evidence.least_period == 3);
    CHECK(oracle_factor_degrees(h) == std::vector<unsigned>{2});
}

TEST_CASE("irreducibility certificate") {
    auto F2 = make_field(2, 1);
    CHECK(irreducible_sufficient_test(PolyFq(F2, {1, 1, 0, 0, 1}), 2, 4).proven());
    CHECK(oracle_irreducible(PolyFq(F2, {1, 1, 0, 0, 1})));
    const PolyFq sq(F2, {1, 0, 1, 0, 1});
    CHECK_FALSE(oracle_irreducible(sq));
    CHECK_FALSE(irreducible_sufficient_test(sq, 2, 4).proven());
    CHECK_THROWS_AS(irreducible_sufficient_test(sq, 2, 3), Error);
    CHECK_THROWS_AS(irreducible_sufficient_test(PolyFq(F2, {1, 1}), 2, 1), Error);
}

TEST_CASE("support test cases") {
    auto rep = support_degree_test(zfun::SupportSet(15, {3, 5}), 2, 4);
    CHECK(rep.sufficient_i.proven());
    CHECK(rep.primitive_iii);
    CHECK(rep.necessary_ii);
    rep = support_degree_test(zfun::SupportSet(15, {0}), 2, 4);
    CHECK_FALSE(rep.sufficient_i.proven());
    CHECK_FALSE(rep.necessary_ii);
    CHECK_FALSE(rep.primitive_iii);
    CHECK_THROWS_AS(support_degree_test(zfun::SupportSet(14, {1}), 2, 4), Error);
}

TEST_CASE("coprime divisor pair") {
    auto t = make_tower(2, 4);
    const auto& E = *t->ext();
    // (x - zeta^3)(x - zeta^5) conjugate-closed: product of the minimal polynomials
    const PolyFq h = char_poly(*t, E.exp(3)) * char_poly(*t, E.exp(5));
    const Verdict v = coprime_divisor_test(h, 2, 4);
    CHECK(v.proven());
    REQUIRE(v.evidence.divisor_pair);
    CHECK(*v.evidence.divisor_pair == std::pair<u64, u64>{3, 5});
    const PolyFq g = char_poly(*t, E.exp(1));
    CHECK(*coprime_divisor_test(g, 2, 4).evidence.divisor_pair == std::pair<u64, u64>{1, 1});
    CHECK_FALSE(coprime_divisor_test(char_poly(*t, E.exp(3)), 2, 4).proven());
}

TEST_CASE("randomized soundness of the three certificates") {
    std::mt19937_64 rng(17);
    for (auto [q, n, deg] : {std::tuple<u64, unsigned, unsigned>{3, 2, 5}, {3, 3, 6}, {4, 2, 5}, {5, 2, 4}, {2, 6, 9}, {7, 2, 3}}) {
        const auto pp = *as_prime_power(q);
        auto F = make_field(pp.p, pp.m);
        for (int i = 0; i < 40; ++i) {
            std::vector<Elem> c(deg + 1);
            for (auto& x : c) x = static_cast<Elem>(rng() % q);
            c[deg] = 1;
            const PolyFq h(F, c);
            const auto degs = oracle::factor_degrees(h);
            const bool has_n = std::find(degs.begin(), degs.end(), n) != degs.end();
            CHECK(degs == oracle_factor_degrees(h));
            if (degree_n_factor_test(h, q, n).proven()) CHECK(has_n);
            if (coprime_divisor_test(h, q, n).proven()) CHECK(has_n);
        }
        for (const auto& h : oracle::monic_polys(F, n)) {
            if (irreducible_sufficient_test(h, q, n).proven()) REQUIRE(oracle::irreducible(h));
        }
    }
}

TEST_CASE("linear factor has no coprime pair") {
    auto F2 = make_field(2, 1);
    CHECK_FALSE(coprime_divisor_test(PolyFq(F2, {1, 1}), 2, 4).proven());
    auto F3 = make_field(3, 1);
    CHECK_FALSE(coprime_divisor_test(PolyFq(F3, {1, 0, 1}) * PolyFq(F3, {1, 0, 1}), 3, 3).proven());
}

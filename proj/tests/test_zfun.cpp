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
#include "ffp/zfun.hpp"
#include "oracles.hpp"

using namespace ffp;
using namespace ffp::gf;
using namespace ffp::zfun;

namespace {

CyclicFn random_fn(const FieldRef& F, u64 N, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<Elem> pick(1, static_cast<Elem>(F->order() - 1));
    std::vector<Elem> v(N, 0);
    for (auto& x : v)
        if (keep(rng)) x = pick(rng);
    return CyclicFn(F, v);
}

std::vector<Elem> vals(const CyclicFn& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST_CASE("dft matches the defining sum") {
    std::mt19937_64 rng(1);
    for (auto [p, m] : {std::pair<u64, unsigned>{2, 4}, {3, 2}, {7, 1}, {2, 6}}) {
        auto F = make_field(p, m);
        for (u64 N : divisors(F->order() - 1)) {
            const auto zeta = root_of_unity(F, N);
            CHECK(F->mult_order(zeta.code()) == N);
            const auto f = random_fn(F, N, rng, 0.5);
            REQUIRE(vals(dft(f, zeta)) == oracle::dft(*F, vals(f), zeta.code()));
            REQUIRE(idft(dft(f, zeta), zeta) == f);
        }
    }
}

TEST_CASE("both convolution paths match the double sum") {
    std::mt19937_64 rng(2);
    auto F = make_field(3, 2);
    for (u64 N : {1, 2, 4, 8}) {
        for (double dens : {0.1, 0.5, 1.0}) {
            const auto f = random_fn(F, N, rng, dens), g = random_fn(F, N, rng, dens);
            const auto want = oracle::convolve(*F, vals(f), vals(g));
            CHECK(vals(convolve(f, g, ConvPath::Sparse)) == want);
            CHECK(vals(convolve(f, g, ConvPath::Dense)) == want);
            CHECK(vals(convolve(f, g)) == want);
        }
    }
    auto F2 = make_field(2, 6);
    const auto f = random_fn(F2, 63, rng, 0.05), g = random_fn(F2, 63, rng, 0.05);
    CHECK(convolution_path(f, g) == ConvPath::Sparse);
    const auto d = random_fn(F2, 63, rng, 0.9);
    CHECK(convolution_path(d, d) == ConvPath::Dense);
}

TEST_CASE("conv_power") {
    auto F = make_field(3, 1);
    const auto d1 = CyclicFn::kronecker(F, 8, 1);
    CHECK(conv_power(d1, 0) == CyclicFn::kronecker(F, 8));
    CHECK(conv_power(d1, 3) == CyclicFn::kronecker(F, 8, 3));
    const auto f = CyclicFn(F, {1, 2, 0, 1, 0, 0, 0, 0});
    CHECK(conv_power(f, 3) == convolve(convolve(f, f), f));
}

TEST_CASE("least period and support-period of the transform") {
    auto F = make_field(2, 4);
    CHECK(least_period(CyclicFn(F, {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0})) == 15);
    CHECK(least_period(CyclicFn(F, {1, 2, 1, 2, 1, 2})) == 2);
    CHECK(least_period(CyclicFn::zero(F, 15)) == 1);
    CHECK(dft_period_by_support(SupportSet(15, {})) == 1);
    CHECK(dft_period_by_support(SupportSet(15, {3, 5})) == 15);
    CHECK(dft_period_by_support(SupportSet(15, {3, 6})) == 5);
    CHECK(dft_period_by_support(SupportSet(15, {0})) == 1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_fn(F, 15, rng, 0.3);
        const auto zeta = root_of_unity(F, 15);
        REQUIRE(least_period(dft(f, zeta)) == dft_period_by_support(f.support()));
        REQUIRE(least_period(f) == oracle::least_period(f));
    }
}

TEST_CASE("shift, reversal, value permutation") {
    auto F = make_field(5, 1);
    CyclicFn f(F, {0, 1, 2, 3, 4, 0});
    CHECK(vals(shift(f, 1)) == std::vector<Elem>{1, 2, 3, 4, 0, 0});
    CHECK(shift(f, -1) == shift(f, 5));
    CHECK(vals(reversal(f)) == std::vector<Elem>{0, 4, 3, 2, 1, 0});
    const std::vector<Elem> sigma{0, 2, 1, 4, 3};
    CHECK(vals(compose_perm(f, sigma)) == std::vector<Elem>{0, 2, 1, 4, 3, 0});
    const std::vector<Elem> bad{0, 0, 1, 2, 3};
    CHECK_THROWS_AS(compose_perm(f, bad), Error);
}

TEST_CASE("transform errors") {
    auto F = make_field(2, 4);
    CyclicFn f(F, std::vector<Elem>(15, 1));
    CHECK_THROWS_AS(dft(f, root_of_unity(F, 5)), Error);
    CHECK_THROWS_AS(root_of_unity(F, 7), Error);
    CHECK_THROWS_AS(dft(f, FieldElement(make_field(2, 2), 2)), Error);
    CHECK_THROWS_AS(CyclicFn(F, {}), Error);
    CHECK_THROWS_AS(CyclicFn(F, {16}), Error);
    CHECK_THROWS_AS(SupportSet(5, {7}), Error);
}

TEST_CASE("shifted golden sequence and linearity") {
    auto F = make_field(2, 1);
    const CyclicFn s(F, {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0});
    CHECK(least_period(shift(s, 7)) == 15);
    std::mt19937_64 rng(4);
    auto F9 = make_field(3, 2);
    const auto zeta = root_of_unity(F9, 8);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_fn(F9, 8, rng, 0.6), g = random_fn(F9, 8, rng, 0.6);
        const Elem a = static_cast<Elem>(rng() % 9), b = static_cast<Elem>(rng() % 9);
        REQUIRE(dft(f.scaled(a) + g.scaled(b), zeta) == dft(f, zeta).scaled(a) + dft(g, zeta).scaled(b));
    }
}

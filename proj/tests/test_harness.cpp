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

#include <cstdlib>

#include "doctest.h"
#include "ffp/error.hpp"
#include "ffp/harness.hpp"
#include "ffp/report.hpp"
#include "oracles.hpp"

using namespace ffp;
using namespace ffp::hm;

TEST_CASE("case labels") {
    CHECK(classify(2, 4, 2, 0) == CaseLabel::I);
    CHECK(classify(3, 4, 2, 0) == CaseLabel::II);
    CHECK(classify(3, 4, 1, 0) == CaseLabel::I);
    CHECK(classify(3, 2, 1, 0) == CaseLabel::III);
    CHECK(classify(4, 2, 1, 0) == CaseLabel::Excluded);
    CHECK(classify(4, 2, 1, 3) == CaseLabel::I);
    CHECK(classify(5, 3, 3, 1) == CaseLabel::Norm);
}

TEST_CASE("single tuples") {
    auto r = verify_period_claims(2, 4, 2, 0);
    CHECK(r.r == 15);
    CHECK(r.threshold == 3);
    CHECK(r.case_label == CaseLabel::I);
    CHECK(r.claims.all());
    r = verify_period_claims(3, 2, 1, 0);
    CHECK(r.case_label == CaseLabel::III);
    CHECK(r.r == 4);
    CHECK(r.claims.case_claim);
    r = verify_period_claims(2, 2, 1, 1);
    CHECK(r.r == 3);
    CHECK(r.case_label == CaseLabel::I);
    r = verify_period_claims(2, 2, 1, 0);
    CHECK(r.case_label == CaseLabel::Excluded);
    CHECK(r.outcome == Outcome::Excluded);
    CHECK(r.r == 0);
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(verify_period_claims(2, 4, 3, 0), Error);
    CHECK_THROWS_AS(verify_period_claims(2, 4, 0, 0), Error);
    CHECK_THROWS_AS(verify_period_claims(6, 4, 1, 0), Error);
    CHECK_THROWS_AS(verify_period_claims(3, 4, 1, 3), Error);
    try {
        verify_period_claims(3, 6, 1, 0, 100);
        FAIL("expected cap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeCapExceeded);
    }
    CHECK_THROWS_AS(hm_witness(3, 3, 3, 0), Error);
    CHECK_THROWS_AS(hm_witness(3, 3, 4, 1), Error);
}

TEST_CASE("witnesses") {
    const auto P = hm_witness(2, 4, 2, 0);
    REQUIRE(P);
    CHECK(gf::to_string(*P) == "x^4 + x + 1");
    CHECK(oracle::irreducible(*P));
    CHECK_FALSE(hm_witness(2, 2, 1, 0));
    CHECK_FALSE(hm_witness(4, 2, 1, 0));
    for (auto [q, n] : {std::pair<u64, unsigned>{2, 12}, {3, 7}, {4, 6}, {8, 4}, {16, 3}, {64, 2}}) {
        for (gf::Elem c = 1; c < q; ++c) {
            const auto W = hm_witness(q, n, n, c);
            REQUIRE(W);
            CHECK(W->coeff(0) == c);
        }
    }
}

TEST_CASE("small sweep has no failures and matches the witness invariant") {
    SweepConfig cfg;
    cfg.q_list = {2, 3};
    cfg.n_min = 2;
    cfg.n_max = 4;
    cfg.w_policy = WPolicy::Full;
    const auto res = sweep(cfg);
    CHECK(res.summary.fail == 0);
    CHECK(res.summary.capped == 0);
    CHECK(res.summary.pass + res.summary.excluded == res.reports.size());
    for (const auto& r : res.reports) {
        if (r.outcome != Outcome::Pass) continue;
        REQUIRE(r.witness);
        CHECK(r.witness->coeff(r.n - r.w) == r.c);
        if (r.case_label == CaseLabel::I) CHECK(r.r == r.modulus);
        if (2 * r.w > r.n && r.w < r.n) CHECK(r.delegated_to == r.n - r.w);
    }
}

TEST_CASE("sweep ordering and determinism") {
    SweepConfig cfg;
    cfg.q_list = {5, 2, 4};
    cfg.n_min = 2;
    cfg.n_max = 5;
    cfg.w_policy = WPolicy::Full;
    cfg.size_cap = 2000;
    const auto a = sweep(cfg);
    cfg.threads = 6;
    const auto b = sweep(cfg);
    CHECK(report::to_json(a) == report::to_json(b));
    for (std::size_t i = 1; i < a.reports.size(); ++i) {
        const auto& x = a.reports[i - 1];
        const auto& y = a.reports[i];
        CHECK(std::tie(x.q, x.n, x.w, x.c) < std::tie(y.q, y.n, y.w, y.c));
    }
    CHECK(a.summary.capped > 0);
    CHECK(a.summary.fail == 0);
}

TEST_CASE("empty grid") {
    const auto res = sweep(SweepConfig{});
    CHECK(res.reports.empty());
    CHECK(res.summary.pass + res.summary.fail + res.summary.excluded + res.summary.capped == 0);
}

TEST_CASE("q = 5, n = 6 completes") {
    SweepConfig cfg;
    cfg.q_list = {5};
    cfg.n_min = cfg.n_max = 6;
    const auto res = sweep(cfg);
    CHECK(res.reports.size() == 15);
    CHECK(res.summary.fail == 0);
}

TEST_CASE("size cap from the environment") {
    ::setenv("FFP_SIZE_CAP", "123", 1);
    CHECK(size_cap_from_env(7) == 123);
    ::setenv("FFP_SIZE_CAP", "abc", 1);
    CHECK_THROWS_AS(size_cap_from_env(7), Error);
    ::unsetenv("FFP_SIZE_CAP");
    CHECK(size_cap_from_env(7) == 7);
}

TEST_CASE("json report layout") {
    SweepConfig cfg;
    cfg.q_list = {2};
    cfg.n_min = cfg.n_max = 4;
    cfg.only_w = 2;
    cfg.only_c = 0;
    const auto j = report::to_json(sweep(cfg));
    REQUIRE(j["reports"].size() == 1);
    const auto& r = j["reports"][0];
    CHECK(r["r"] == 15);
    CHECK(r["threshold"] == 3);
    CHECK(r["case_label"] == "I");
    CHECK(r["claims"]["case_claim"] == true);
    CHECK(r["witness"] == nlohmann::json::array({1, 1, 0, 0, 1}));
    CHECK(j["summary"]["pass"] == 1);
}

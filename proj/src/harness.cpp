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

#include "ffp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <tuple>

#include "ffp/cyclo.hpp"
#include "ffp/error.hpp"
#include "ffp/symfun.hpp"
#include "ffp/tower.hpp"

namespace ffp::hm {

std::string_view to_string(CaseLabel c) noexcept {
    switch (c) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        case CaseLabel::Excluded: return "Excluded";
        case CaseLabel::Norm: return "Norm";
    }
    return "?";
}

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Excluded: return "excluded";
        case Outcome::Capped: return "capped";
    }
    return "?";
}

CaseLabel classify(u64 q, unsigned n, unsigned w, Elem c) {
    if (w == n) return CaseLabel::Norm;
    if (c != 0) return CaseLabel::I;
    const bool even = q % 2 == 0;
    if (n == 2) return even ? CaseLabel::Excluded : CaseLabel::III;
    if (!even && 2 * w == n) return CaseLabel::II;
    return CaseLabel::I;
}

namespace {

void check_params(u64 q, unsigned n, Elem c) {
    if (!as_prime_power(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
    if (c >= q) throw Error(ErrorCode::InvalidArgument, "c = " + std::to_string(c) + " is not an F_" + std::to_string(q) + " code");
}

u64 modulus_checked(u64 q, unsigned n, u64 cap) {
    const u64 N = symfun::cyclic_modulus(q, n, ~u64{0});
    if (N > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    "q^n - 1 = " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
    }
    return N;
}

}  // namespace

PeriodReport verify_period_claims(u64 q, unsigned n, unsigned w, Elem c, u64 size_cap) {
    check_params(q, n, c);
    if (w < 1 || 2 * w > n) throw Error(ErrorCode::WOutOfRange, "w must lie in [1, n/2]");

    PeriodReport rep;
    rep.q = q;
    rep.n = n;
    rep.w = w;
    rep.c = c;
    rep.case_label = classify(q, n, w, c);
    rep.modulus = modulus_checked(q, n, size_cap);
    rep.threshold = cyclo::threshold(n, q);
    if (rep.case_label == CaseLabel::Excluded) {
        rep.outcome = Outcome::Excluded;
        rep.note = "c = 0, n = 2, q even";
        return rep;
    }

    const auto pp = *as_prime_power(q);
    const auto Fq = gf::make_field(pp.p, pp.m);
    const auto delta = symfun::delta_wc(q, n, w, gf::FieldElement(Fq, c));
    rep.r = zfun::least_period(delta);

    const u64 N = rep.modulus;
    rep.claims.r_gt_threshold = rep.r > rep.threshold;
    rep.claims.r_not_dividing_threshold = rep.threshold % rep.r != 0;
    switch (rep.case_label) {
        case CaseLabel::I: rep.claims.case_claim = rep.r == N; break;
        case CaseLabel::II: rep.claims.case_claim = 2 * rep.r >= N; break;
        case CaseLabel::III: rep.claims.case_claim = rep.r > q - 1; break;
        default: break;
    }
    rep.outcome = rep.claims.all() ? Outcome::Pass : Outcome::Fail;
    return rep;
}

std::optional<PolyFq> hm_witness(u64 q, unsigned n, unsigned w, Elem c) {
    check_params(q, n, c);
    if (w < 1 || w > n) throw Error(ErrorCode::WOutOfRange, "w must lie in [1, n]");
    if (w == n && c == 0) throw Error(ErrorCode::InvalidArgument, "w = n requires c != 0");

    const auto t = gf::make_tower(q, n);
    const auto& E = *t->ext();
    const u64 N = E.order() - 1;
    for (u64 k = 0; k < N; ++k) {
        const Elem xi = E.exp(k);
        if (gf::element_degree(*t, xi) != n) continue;
        PolyFq P = gf::char_poly(*t, xi);
        if (P.coeff(n - w) != c) continue;
        if (!P.is_monic() || P.degree() != static_cast<int>(n) || !gf::is_irreducible(P)) {
            throw Error(ErrorCode::Internal, "witness " + gf::to_string(P) + " failed the irreducibility check");
        }
        return P;
    }
    return std::nullopt;
}

u64 size_cap_from_env(u64 fallback) {
    const char* s = std::getenv("FFP_SIZE_CAP");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorCode::InvalidArgument, std::string("bad FFP_SIZE_CAP: ") + s);
    return v;
}

namespace {

struct Tuple {
    u64 q;
    unsigned n;
    unsigned w;
    Elem c;
};

PeriodReport run_tuple(const Tuple& t, const SweepConfig& cfg) {
    PeriodReport rep;
    rep.q = t.q;
    rep.n = t.n;
    rep.w = t.w;
    rep.c = t.c;
    rep.case_label = classify(t.q, t.n, t.w, t.c);
    try {
        rep.modulus = modulus_checked(t.q, t.n, cfg.size_cap);
        rep.threshold = cyclo::threshold(t.n, t.q);
        if (rep.case_label == CaseLabel::Norm) {
            if (t.c == 0) {
                rep.case_label = CaseLabel::Excluded;
                rep.outcome = Outcome::Excluded;
                rep.note = "w = n requires c != 0";
                return rep;
            }
        } else {
            const unsigned w_eff = 2 * t.w > t.n ? t.n - t.w : t.w;
            PeriodReport p = verify_period_claims(t.q, t.n, w_eff, t.c, cfg.size_cap);
            rep.case_label = p.case_label;
            rep.r = p.r;
            rep.claims = p.claims;
            rep.outcome = p.outcome;
            rep.note = p.note;
            if (w_eff != t.w) rep.delegated_to = w_eff;
        }
        if (cfg.with_witness) {
            rep.witness_searched = true;
            rep.witness = hm_witness(t.q, t.n, t.w, t.c);
            if (rep.case_label != CaseLabel::Excluded && !rep.witness) {
                rep.outcome = Outcome::Fail;
                rep.note = "no witness found";
            } else if (rep.case_label == CaseLabel::Norm) {
                rep.outcome = Outcome::Pass;
            }
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeCapExceeded) throw;
        rep.outcome = Outcome::Capped;
        rep.note = e.what();
    }
    return rep;
}

}  // namespace

SweepResult sweep(const SweepConfig& cfg) {
    std::vector<Tuple> tuples;
    for (u64 q : cfg.q_list) {
        if (!as_prime_power(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
        for (unsigned n = std::max(cfg.n_min, 2u); n <= cfg.n_max; ++n) {
            const unsigned w_max = cfg.w_policy == WPolicy::Full ? n : n / 2;
            for (unsigned w = 1; w <= w_max; ++w) {
                if (cfg.only_w && *cfg.only_w != w) continue;
                for (Elem c = 0; c < q; ++c) {
                    if (cfg.only_c && *cfg.only_c != c) continue;
                    tuples.push_back({q, n, w, c});
                }
            }
        }
    }
    std::sort(tuples.begin(), tuples.end(), [](const Tuple& a, const Tuple& b) {
        return std::tie(a.q, a.n, a.w, a.c) < std::tie(b.q, b.n, b.w, b.c);
    });

    SweepResult res;
    res.reports.resize(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) res.reports[i] = run_tuple(tuples[i], cfg);
    };
    const unsigned nt = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(tuples.size())));
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::exception_ptr> errs(nt);
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < nt; ++k) {
            pool.emplace_back([&, k] {
                try {
                    worker();
                } catch (...) {
                    errs[k] = std::current_exception();
                    next = tuples.size();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errs) {
            if (e) std::rethrow_exception(e);
        }
    }

    for (const auto& r : res.reports) {
        switch (r.outcome) {
            case Outcome::Pass: ++res.summary.pass; break;
            case Outcome::Fail: ++res.summary.fail; break;
            case Outcome::Excluded: ++res.summary.excluded; break;
            case Outcome::Capped: ++res.summary.capped; break;
        }
    }
    return res;
}

}  // namespace ffp::hm

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

#include "ffp/spectral.hpp"

#include <string>

#include "ffp/cyclo.hpp"
#include "ffp/error.hpp"
#include "ffp/symfun.hpp"
#include "ffp/tower.hpp"

namespace ffp::spectral {

using gf::Elem;
using zfun::CyclicFn;

std::string_view to_string(Status s) noexcept { return s == Status::Proven ? "Proven" : "Inconclusive"; }

namespace {

gf::TowerRef tower_of(const PolyFq& h, u64 q, unsigned n) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "h must be nonzero");
    symfun::cyclic_modulus(q, n);
    auto t = gf::make_tower(q, n);
    if (h.ctx() != t->base()) throw Error(ErrorCode::CtxMismatch, "h is not over F_" + std::to_string(q));
    return t;
}

std::vector<Elem> image_on_units(const gf::Tower& t, const PolyFq& h) {
    const auto& E = *t.ext();
    const u64 N = E.order() - 1;
    std::vector<Elem> img(N);
    Elem x = 1;
    const Elem g = E.primitive();
    for (u64 i = 0; i < N; ++i) {
        img[i] = t.eval(h, x);
        x = E.mul(x, g);
    }
    return img;
}

void require_n(unsigned n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
}

}  // namespace

u64 auto_subfield_order(const PolyFq& h, u64 q, unsigned n) {
    auto t = tower_of(h, q, n);
    const auto img = image_on_units(*t, h);
    for (u64 d : divisors(n)) {
        bool inside = true;
        for (Elem y : img) {
            if (!t->in_subfield(y, static_cast<unsigned>(d))) {
                inside = false;
                break;
            }
        }
        if (inside) return checked_pow(q, static_cast<unsigned>(d));
    }
    throw Error(ErrorCode::Internal, "image of h escapes F_{q^n}");
}

SPoly build_S(const PolyFq& h, u64 q, unsigned n, std::optional<u64> subfield_order) {
    auto t = tower_of(h, q, n);
    const auto& E = *t->ext();
    const u64 N = E.order() - 1;

    u64 L;
    if (subfield_order) {
        L = *subfield_order;
        auto pp = as_prime_power(L);
        if (!pp || pp->p != E.p() || E.m() % pp->m != 0) {
            throw Error(ErrorCode::BadSubfield, std::to_string(L) + " is not a subfield order of " + E.describe());
        }
        for (Elem y : image_on_units(*t, h)) {
            if (E.pow(y, L) != y) {
                throw Error(ErrorCode::BadSubfield, "F_" + std::to_string(L) + " does not contain the image of h");
            }
        }
    } else {
        L = auto_subfield_order(h, q, n);
    }

    const auto& base = t->base();
    std::vector<Elem> folded(N, 0);
    const auto& hc = h.coeffs();
    for (std::size_t i = 0; i < hc.size(); ++i) folded[i % N] = base->add(folded[i % N], hc[i]);
    CyclicFn b(base, std::move(folded));
    CyclicFn acc = CyclicFn::kronecker(base, N);
    for (u64 e = L - 1; e != 0; e >>= 1) {
        if (e & 1) acc = zfun::convolve(acc, b);
        if (e > 1) b = zfun::convolve(b, b);
    }
    CyclicFn s = CyclicFn::kronecker(base, N) - acc;
    PolyFq poly(base, std::vector<Elem>(s.values().begin(), s.values().end()));
    return {h, L, std::move(poly), std::move(s)};
}

Verdict degree_n_factor_test(const PolyFq& h, u64 q, unsigned n, std::optional<u64> subfield_order) {
    require_n(n);
    SPoly s = build_S(h, q, n, subfield_order);
    Verdict v;
    v.evidence.modulus = s.coeff_seq.modulus();
    v.evidence.least_period = zfun::least_period(s.coeff_seq);
    v.evidence.threshold = cyclo::threshold(n, q);
    v.evidence.subfield_order = s.subfield_order;
    v.status = v.evidence.threshold % v.evidence.least_period != 0 ? Status::Proven : Status::Inconclusive;
    return v;
}

SupportDegreeReport support_degree_test(const zfun::SupportSet& s, u64 q, unsigned n) {
    require_n(n);
    const u64 N = symfun::cyclic_modulus(q, n);
    if (s.modulus() != N) throw Error(ErrorCode::ModulusMismatch, "support is not on Z_{q^n - 1}");
    SupportDegreeReport rep;
    const u64 r = zfun::dft_period_by_support(s);
    rep.sufficient_i.evidence.modulus = N;
    rep.sufficient_i.evidence.least_period = r;
    rep.sufficient_i.evidence.threshold = cyclo::threshold(n, q);
    rep.sufficient_i.status =
        rep.sufficient_i.evidence.threshold % r != 0 ? Status::Proven : Status::Inconclusive;
    rep.necessary_ii = true;
    for (u64 d : divisors(n)) {
        if (d == n) continue;
        if ((checked_pow(q, static_cast<unsigned>(d)) - 1) % r == 0) rep.necessary_ii = false;
    }
    rep.primitive_iii = r == N;
    return rep;
}

Verdict irreducible_sufficient_test(const PolyFq& h, u64 q, unsigned n, std::optional<u64> subfield_order) {
    if (n < 2 || h.degree() != static_cast<int>(n)) {
        throw Error(ErrorCode::DegreeMismatch,
                    "deg h = " + std::to_string(h.degree()) + ", n = " + std::to_string(n));
    }
    return degree_n_factor_test(h, q, n, subfield_order);
}

Verdict coprime_divisor_test(const PolyFq& h, u64 q, unsigned n) {
    auto t = tower_of(h, q, n);
    const auto& E = *t->ext();
    const u64 N = E.order() - 1;
    std::vector<u64> roots;
    for (u64 a : divisors(N)) {
        if (t->eval(h, E.exp(a)) == 0) roots.push_back(a);
    }
    Verdict v;
    v.evidence.modulus = N;
    for (std::size_t i = 0; i < roots.size() && !v.proven(); ++i) {
        for (std::size_t j = i; j < roots.size(); ++j) {
            if (ffp::gcd(roots[i], roots[j]) == 1) {
                v.status = Status::Proven;
                v.evidence.divisor_pair = std::pair{roots[i], roots[j]};
                break;
            }
        }
    }
    return v;
}

bool oracle_irreducible(const PolyFq& h) { return gf::is_irreducible(h); }

std::vector<unsigned> oracle_factor_degrees(const PolyFq& h) { return gf::factor_degrees(h); }

}  // namespace ffp::spectral

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

#include "ffp/tower.hpp"

#include <map>
#include <mutex>
#include <string>

#include "ffp/error.hpp"

namespace ffp::gf {

Tower::Tower(FieldRef base, FieldRef ext, unsigned n) : base_(std::move(base)), ext_(std::move(ext)), n_(n) {
    const auto& B = *base_;
    const auto& E = *ext_;
    Elem beta = 0;
    if (B.m() > 1) {
        // Smallest root of the base modulus; its coefficients live in F_p.
        bool found = false;
        for (u64 c = 0; c < E.order() && !found; ++c) {
            Elem acc = 0;
            const auto& mod = B.modulus();
            for (auto it = mod.rbegin(); it != mod.rend(); ++it) {
                acc = E.add(E.mul(acc, static_cast<Elem>(c)), static_cast<Elem>(*it));
            }
            if (acc == 0) {
                beta = static_cast<Elem>(c);
                found = true;
            }
        }
        if (!found) throw Error(ErrorCode::Internal, "base modulus has no root in " + E.describe());
    }
    lift_.resize(B.order());
    for (u64 code = 0; code < B.order(); ++code) {
        Elem v;
        if (B.m() == 1) {
            v = static_cast<Elem>(code);
        } else {
            auto cs = B.coeffs(static_cast<Elem>(code));
            v = 0;
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) v = E.add(E.mul(v, beta), static_cast<Elem>(*it));
        }
        lift_[code] = v;
        restrict_.emplace(v, static_cast<Elem>(code));
    }
    if (restrict_.size() != B.order()) throw Error(ErrorCode::Internal, "subfield embedding is not injective");
}

std::optional<Elem> Tower::restrict_to_base(Elem ext_code) const {
    auto it = restrict_.find(ext_code);
    if (it == restrict_.end()) return std::nullopt;
    return it->second;
}

FieldElement Tower::lift(const FieldElement& c) const {
    if (c.ctx() != base_) throw Error(ErrorCode::CtxMismatch, "lift expects a base-field element");
    return {ext_, lift(c.code())};
}

FieldElement Tower::restrict_to_base(const FieldElement& c) const {
    if (c.ctx() != ext_) throw Error(ErrorCode::CtxMismatch, "restrict expects an extension-field element");
    auto r = restrict_to_base(c.code());
    if (!r) throw Error(ErrorCode::BadSubfield, "element is not in F_" + std::to_string(q()));
    return {base_, *r};
}

Elem Tower::frobenius(Elem x, unsigned k) const {
    if (x == 0) return 0;
    const u64 Q = ext_->order();
    return ext_->pow(x, ffp::powmod(q(), k, Q - 1));
}

Elem Tower::eval(const PolyFq& h, Elem x) const {
    if (h.ctx() != base_) throw Error(ErrorCode::CtxMismatch, "polynomial is not over the tower base");
    Elem acc = 0;
    const auto& c = h.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ext_->add(ext_->mul(acc, x), lift(*it));
    return acc;
}

TowerRef make_tower(u64 q, unsigned n) {
    auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorCode::BadTower, std::to_string(q) + " is not a prime power");
    if (n == 0) throw Error(ErrorCode::BadTower, "extension degree must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, TowerRef> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({q, n}); it != cache.end()) return it->second;
    }
    auto base = make_field(pp->p, pp->m);
    auto ext = make_field(pp->p, pp->m * n);
    TowerRef t(new Tower(std::move(base), std::move(ext), n));
    std::lock_guard lock(mu);
    return cache.emplace(std::pair{q, n}, std::move(t)).first->second;
}

TowerRef tower_for(const FieldRef& ctx, u64 q, unsigned n) {
    auto pp = as_prime_power(q);
    if (!pp || pp->p != ctx->p() || n == 0 || pp->m * n != ctx->m()) {
        throw Error(ErrorCode::BadTower,
                    std::to_string(q) + "^" + std::to_string(n) + " does not match " + ctx->describe());
    }
    auto t = make_tower(q, n);
    if (t->ext() != ctx) throw Error(ErrorCode::BadTower, "field is not the canonical instance");
    return t;
}

unsigned element_degree(const Tower& t, Elem xi) {
    if (xi == 0) return 1;
    for (u64 d : divisors(t.n())) {
        if (t.in_subfield(xi, static_cast<unsigned>(d))) return static_cast<unsigned>(d);
    }
    throw Error(ErrorCode::Internal, "Frobenius orbit longer than n");
}

namespace {

// e_0..e_n of the Frobenius conjugates of xi, computed in the extension.
std::vector<Elem> conjugate_symmetric(const Tower& t, Elem xi) {
    const auto& E = *t.ext();
    const unsigned n = t.n();
    std::vector<Elem> e(n + 1, 0);
    e[0] = 1;
    Elem c = xi;
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned j = k + 1; j >= 1; --j) e[j] = E.add(e[j], E.mul(e[j - 1], c));
        c = t.frobenius(c, 1);
    }
    return e;
}

Elem to_base(const Tower& t, Elem v) {
    auto r = t.restrict_to_base(v);
    if (!r) throw Error(ErrorCode::Internal, "characteristic coefficient outside F_q");
    return *r;
}

}  // namespace

PolyFq char_poly(const Tower& t, Elem xi) {
    const auto& E = *t.ext();
    const unsigned n = t.n();
    auto e = conjugate_symmetric(t, xi);
    std::vector<Elem> c(n + 1);
    for (unsigned w = 0; w <= n; ++w) {
        Elem v = (w % 2 == 0) ? e[w] : E.neg(e[w]);
        c[n - w] = to_base(t, v);
    }
    return PolyFq(t.base(), std::move(c));
}

Elem sigma_eval(const Tower& t, unsigned w, Elem xi) {
    if (w > t.n()) throw Error(ErrorCode::WOutOfRange, "w = " + std::to_string(w) + " > n = " + std::to_string(t.n()));
    return to_base(t, conjugate_symmetric(t, xi)[w]);
}

unsigned element_degree(const FieldElement& xi, u64 q, unsigned n) {
    return element_degree(*tower_for(xi.ctx(), q, n), xi.code());
}

PolyFq char_poly(const FieldElement& xi, u64 q, unsigned n) { return char_poly(*tower_for(xi.ctx(), q, n), xi.code()); }

FieldElement sigma_eval(unsigned w, const FieldElement& xi, u64 q, unsigned n) {
    auto t = tower_for(xi.ctx(), q, n);
    return {t->base(), sigma_eval(*t, w, xi.code())};
}

}  // namespace ffp::gf

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

#include "ffp/zfun.hpp"

#include <bit>
#include <string>

#include "ffp/error.hpp"
#include "ffp/tower.hpp"

namespace ffp::zfun {

namespace {

std::vector<u64> collect_support(std::span<const Elem> v) {
    std::vector<u64> s;
    for (u64 i = 0; i < v.size(); ++i) {
        if (v[i] != 0) s.push_back(i);
    }
    return s;
}

void require_compatible(const CyclicFn& a, const CyclicFn& b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorCode::ModulusMismatch,
                    std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
    }
    if (a.ctx() != b.ctx()) throw Error(ErrorCode::CtxMismatch, "functions over different fields");
}

}  // namespace

SupportSet::SupportSet(u64 modulus, std::vector<u64> members) : n_(modulus), members_(std::move(members)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    for (u64 k : members_) {
        if (k >= n_) throw Error(ErrorCode::InvalidArgument, "support member " + std::to_string(k) + " outside Z_N");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CyclicFn::CyclicFn(FieldRef ctx, std::vector<Elem> values)
    : ctx_(std::move(ctx)),
      values_(std::move(values)),
      support_(values_.empty() ? 1 : values_.size(), collect_support(values_)) {
    if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    for (Elem e : values_) {
        if (!ctx_->valid(e)) throw Error(ErrorCode::InvalidArgument, "value code out of range");
    }
}

CyclicFn CyclicFn::zero(FieldRef ctx, u64 modulus) { return CyclicFn(std::move(ctx), std::vector<Elem>(modulus, 0)); }

CyclicFn CyclicFn::kronecker(FieldRef ctx, u64 modulus, u64 at) {
    std::vector<Elem> v(modulus, 0);
    if (modulus != 0) v[at % modulus] = 1;
    return CyclicFn(std::move(ctx), std::move(v));
}

CyclicFn CyclicFn::indicator(FieldRef ctx, const SupportSet& s) {
    std::vector<Elem> v(s.modulus(), 0);
    for (u64 k : s.members()) v[k] = 1;
    return CyclicFn(std::move(ctx), std::move(v));
}

FieldElement CyclicFn::at(std::int64_t i) const {
    auto n = static_cast<std::int64_t>(modulus());
    auto r = i % n;
    if (r < 0) r += n;
    return {ctx_, values_[static_cast<u64>(r)]};
}

CyclicFn CyclicFn::scaled(Elem s) const {
    std::vector<Elem> v(values_.size());
    for (u64 i = 0; i < v.size(); ++i) v[i] = ctx_->mul(values_[i], s);
    return CyclicFn(ctx_, std::move(v));
}

CyclicFn operator+(const CyclicFn& a, const CyclicFn& b) {
    require_compatible(a, b);
    std::vector<Elem> v(a.modulus());
    for (u64 i = 0; i < v.size(); ++i) v[i] = a.ctx_->add(a.values_[i], b.values_[i]);
    return CyclicFn(a.ctx_, std::move(v));
}

CyclicFn operator-(const CyclicFn& a, const CyclicFn& b) {
    require_compatible(a, b);
    std::vector<Elem> v(a.modulus());
    for (u64 i = 0; i < v.size(); ++i) v[i] = a.ctx_->sub(a.values_[i], b.values_[i]);
    return CyclicFn(a.ctx_, std::move(v));
}

CyclicFn operator*(const CyclicFn& a, const CyclicFn& b) {
    require_compatible(a, b);
    std::vector<Elem> v(a.modulus());
    for (u64 i = 0; i < v.size(); ++i) v[i] = a.ctx_->mul(a.values_[i], b.values_[i]);
    return CyclicFn(a.ctx_, std::move(v));
}

namespace {

void check_root(const CyclicFn& f, const FieldElement& zeta) {
    if (zeta.ctx() != f.ctx()) throw Error(ErrorCode::CtxMismatch, "root of unity from another field");
    const u64 n = f.modulus();
    const u64 units = f.ctx()->order() - 1;
    if (units % n != 0) {
        throw Error(ErrorCode::NotDivisor, std::to_string(n) + " does not divide " + std::to_string(units));
    }
    if (zeta.is_zero() || f.ctx()->mult_order(zeta.code()) != n) {
        throw Error(ErrorCode::OrderMismatch, "root of unity does not have order " + std::to_string(n));
    }
}

CyclicFn transform(const CyclicFn& f, Elem zeta) {
    const auto& F = *f.ctx();
    const u64 n = f.modulus();
    std::vector<Elem> pw(n);
    pw[0] = 1;
    for (u64 k = 1; k < n; ++k) pw[k] = F.mul(pw[k - 1], zeta);
    std::vector<Elem> g(n, 0);
    const auto vals = f.values();
    for (u64 j : f.support().members()) {
        const Elem fj = vals[j];
        u64 idx = 0;  // i * j mod n
        for (u64 i = 0; i < n; ++i) {
            g[i] = F.add(g[i], F.mul(fj, pw[idx]));
            idx += j;
            if (idx >= n) idx -= n;
        }
    }
    return CyclicFn(f.ctx(), std::move(g));
}

}  // namespace

CyclicFn dft(const CyclicFn& f, const FieldElement& zeta) {
    check_root(f, zeta);
    return transform(f, zeta.code());
}

CyclicFn idft(const CyclicFn& f, const FieldElement& zeta) {
    check_root(f, zeta);
    const auto& F = *f.ctx();
    CyclicFn g = transform(f, F.inv(zeta.code()));
    const Elem n_inv = F.inv(F.from_int(static_cast<std::int64_t>(f.modulus() % F.p())));
    return g.scaled(n_inv);
}

FieldElement root_of_unity(const FieldRef& ctx, u64 modulus) {
    const u64 units = ctx->order() - 1;
    if (modulus == 0 || units % modulus != 0) {
        throw Error(ErrorCode::NotDivisor, std::to_string(modulus) + " does not divide " + std::to_string(units));
    }
    return gf::primitive_element(ctx).pow(units / modulus);
}

ConvPath convolution_path(const CyclicFn& f, const CyclicFn& g) {
    const u64 n = f.modulus();
    const u64 budget = n * std::max<u64>(1, std::bit_width(n));
    return u64{f.support().size()} * g.support().size() < budget ? ConvPath::Sparse : ConvPath::Dense;
}

CyclicFn convolve(const CyclicFn& f, const CyclicFn& g) { return convolve(f, g, convolution_path(f, g)); }

CyclicFn convolve(const CyclicFn& f, const CyclicFn& g, ConvPath path) {
    require_compatible(f, g);
    const auto& F = *f.ctx();
    const u64 n = f.modulus();
    const auto fv = f.values();
    const auto gv = g.values();
    std::vector<Elem> out(n, 0);
    if (path == ConvPath::Sparse) {
        for (u64 j : f.support().members()) {
            for (u64 k : g.support().members()) {
                u64 i = j + k;
                if (i >= n) i -= n;
                out[i] = F.add(out[i], F.mul(fv[j], gv[k]));
            }
        }
    } else {
        for (u64 j = 0; j < n; ++j) {
            for (u64 k = 0; k < n; ++k) {
                u64 i = j + k;
                if (i >= n) i -= n;
                out[i] = F.add(out[i], F.mul(fv[j], gv[k]));
            }
        }
    }
    return CyclicFn(f.ctx(), std::move(out));
}

CyclicFn conv_power(const CyclicFn& f, u64 m) {
    // acc (x) f at every step, so f stays the right operand and its support bounds the cost.
    CyclicFn acc = CyclicFn::kronecker(f.ctx(), f.modulus());
    for (u64 i = 0; i < m; ++i) acc = convolve(acc, f);
    return acc;
}

bool is_periodic(const CyclicFn& f, u64 r) {
    const u64 n = f.modulus();
    const auto v = f.values();
    r %= n;
    for (u64 i = 0; i < n; ++i) {
        u64 j = i + r;
        if (j >= n) j -= n;
        if (v[i] != v[j]) return false;
    }
    return true;
}

u64 least_period(const CyclicFn& f) { return least_period_of(f.values()); }

u64 dft_period_by_support(const SupportSet& s) {
    if (s.empty()) return 1;
    u64 g = s.modulus();
    for (u64 k : s.members()) g = gcd(g, k);
    return s.modulus() / g;
}

CyclicFn shift(const CyclicFn& f, std::int64_t k) {
    const u64 n = f.modulus();
    auto sn = static_cast<std::int64_t>(n);
    u64 off = static_cast<u64>(((k % sn) + sn) % sn);
    std::vector<Elem> v(n);
    for (u64 i = 0; i < n; ++i) v[i] = f[(i + off) % n];
    return CyclicFn(f.ctx(), std::move(v));
}

CyclicFn reversal(const CyclicFn& f) {
    const u64 n = f.modulus();
    std::vector<Elem> v(n);
    for (u64 i = 0; i < n; ++i) v[i] = f[n - 1 - i];
    return CyclicFn(f.ctx(), std::move(v));
}

CyclicFn compose_perm(const CyclicFn& f, std::span<const Elem> sigma) {
    const u64 order = f.ctx()->order();
    if (sigma.size() != order) throw Error(ErrorCode::BadPermutation, "permutation size differs from field order");
    std::vector<bool> seen(order, false);
    for (Elem e : sigma) {
        if (e >= order || seen[e]) throw Error(ErrorCode::BadPermutation, "value map is not a bijection");
        seen[e] = true;
    }
    std::vector<Elem> v(f.modulus());
    for (u64 i = 0; i < v.size(); ++i) v[i] = sigma[f[i]];
    return CyclicFn(f.ctx(), std::move(v));
}

CyclicFn lift(const CyclicFn& f, const gf::Tower& t) {
    if (f.ctx() != t.base()) throw Error(ErrorCode::CtxMismatch, "function is not over the tower base");
    std::vector<Elem> v(f.modulus());
    for (u64 i = 0; i < v.size(); ++i) v[i] = t.lift(f[i]);
    return CyclicFn(t.ext(), std::move(v));
}

}  // namespace ffp::zfun

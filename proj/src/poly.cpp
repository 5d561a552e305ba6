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

#include "ffp/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ffp/error.hpp"

namespace ffp::gf {

namespace {

void require_same(const PolyFq& a, const PolyFq& b) {
    if (a.ctx() != b.ctx()) throw Error(ErrorCode::CtxMismatch, "polynomials over different fields");
}

}  // namespace

PolyFq::PolyFq(FieldRef ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null field");
}

PolyFq::PolyFq(FieldRef ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null field");
    for (Elem e : c_) {
        if (!ctx_->valid(e)) throw Error(ErrorCode::InvalidArgument, "coefficient code out of range");
    }
    normalize();
}

void PolyFq::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::constant(FieldRef ctx, Elem c) { return PolyFq(std::move(ctx), std::vector<Elem>{c}); }

PolyFq PolyFq::monomial(FieldRef ctx, Elem c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return PolyFq(std::move(ctx), std::move(v));
}

PolyFq PolyFq::monic() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero");
    return scaled(ctx_->inv(leading()));
}

PolyFq PolyFq::scaled(Elem s) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = ctx_->mul(c_[i], s);
    return PolyFq(ctx_, std::move(v));
}

PolyFq PolyFq::derivative() const {
    if (c_.size() <= 1) return PolyFq(ctx_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = ctx_->mul(c_[i], ctx_->from_int(static_cast<std::int64_t>(i % ctx_->p())));
    }
    return PolyFq(ctx_, std::move(v));
}

Elem PolyFq::eval(Elem x) const {
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ctx_->add(ctx_->mul(acc, x), *it);
    return acc;
}

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
    require_same(a, b);
    const auto& f = *a.ctx_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return PolyFq(a.ctx_, std::move(v));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
    require_same(a, b);
    const auto& f = *a.ctx_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
    return PolyFq(a.ctx_, std::move(v));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return PolyFq(a.ctx_);
    const auto& f = *a.ctx_;
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return PolyFq(a.ctx_, std::move(v));
}

DivMod divmod(const PolyFq& a, const PolyFq& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    const auto& f = *a.ctx();
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    if (r.size() < bc.size()) return {PolyFq(a.ctx()), a};
    std::vector<Elem> q(r.size() - db, 0);
    const Elem lead_inv = f.inv(bc.back());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        Elem t = f.mul(r[i], lead_inv);
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(t, bc[j]));
    }
    r.resize(db);
    return {PolyFq(a.ctx(), std::move(q)), PolyFq(a.ctx(), std::move(r))};
}

PolyFq operator%(const PolyFq& a, const PolyFq& b) { return divmod(a, b).rem; }
PolyFq operator/(const PolyFq& a, const PolyFq& b) { return divmod(a, b).quot; }

PolyFq gcd(const PolyFq& a, const PolyFq& b) {
    PolyFq x = a, y = b;
    while (!y.is_zero()) {
        PolyFq r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

PolyFq powmod(const PolyFq& base, u64 e, const PolyFq& mod) {
    PolyFq r = PolyFq::constant(mod.ctx(), 1) % mod;
    PolyFq b = base % mod;
    while (e != 0) {
        if (e & 1) r = (r * b) % mod;
        e >>= 1;
        if (e != 0) b = (b * b) % mod;
    }
    return r;
}

PolyFq frobenius_x(const PolyFq& h, unsigned k) {
    const u64 q = h.ctx()->order();
    PolyFq x = PolyFq::x(h.ctx()) % h;
    for (unsigned i = 0; i < k; ++i) x = powmod(x, q, h);
    return x;
}

bool is_irreducible(const PolyFq& h) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of zero");
    const int n = h.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const PolyFq x = PolyFq::x(h.ctx()) % h;
    if (frobenius_x(h, static_cast<unsigned>(n)) != x) return false;
    for (u64 t : prime_factors(static_cast<u64>(n))) {
        PolyFq g = gcd(frobenius_x(h, static_cast<unsigned>(n / t)) - x, h);
        if (g.degree() > 0) return false;
    }
    return true;
}

std::vector<unsigned> factor_degrees(const PolyFq& h) {
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factoring zero");
    std::vector<unsigned> out;
    PolyFq rem = h.monic();
    for (unsigned d = 1; rem.degree() >= 1; ++d) {
        // Every factor of degree < d is gone, so a remainder of degree < 2d is irreducible.
        if (static_cast<unsigned>(rem.degree()) < 2 * d) {
            out.push_back(static_cast<unsigned>(rem.degree()));
            break;
        }
        PolyFq g = gcd(frobenius_x(rem, d) - PolyFq::x(rem.ctx()), rem);
        while (g.degree() > 0) {
            for (int k = 0; k < g.degree() / static_cast<int>(d); ++k) out.push_back(d);
            rem = rem / g;
            g = gcd(g, rem);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const PolyFq& h) {
    if (h.is_zero()) return "0";
    const bool prime_field = h.ctx()->m() == 1;
    std::ostringstream os;
    bool first = true;
    for (int i = h.degree(); i >= 0; --i) {
        Elem c = h.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c == 1 && i > 0;
        if (!unit) {
            if (prime_field) os << c;
            else os << '[' << c << ']';
            if (i > 0) os << '*';
        }
        if (i == 1) os << 'x';
        else if (i > 1) os << "x^" << i;
    }
    return os.str();
}

}  // namespace ffp::gf

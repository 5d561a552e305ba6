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

#include "ffp/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ffp/error.hpp"
#include "ffp/poly.hpp"

namespace ffp::gf {

FieldCtx::FieldCtx(u64 p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), order_(checked_pow(p, m)), modulus_(std::move(modulus)) {
    place_.resize(m_ + 1);
    place_[0] = 1;
    for (unsigned i = 1; i <= m_; ++i) place_[i] = place_[i - 1] * p_;
}

std::vector<unsigned> FieldCtx::coeffs(Elem a) const {
    std::vector<unsigned> c(m_);
    u64 v = a;
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = static_cast<unsigned>(v % p_);
        v /= p_;
    }
    return c;
}

Elem FieldCtx::from_coeffs(std::span<const unsigned> c) const {
    if (c.size() > m_) throw Error(ErrorCode::InvalidArgument, "too many coefficients for " + describe());
    u64 v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
        v += c[i] * place_[i];
    }
    return static_cast<Elem>(v);
}

Elem FieldCtx::from_int(std::int64_t k) const {
    auto p = static_cast<std::int64_t>(p_);
    auto r = k % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
    u64 out = 0, x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        u64 d = (x % p_ + y % p_) % p_;
        out += d * place_[i];
        x /= p_;
        y /= p_;
    }
    return static_cast<Elem>(out);
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (m_ == 1) {
        u64 s = u64{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    if (!has_tables()) return add_digits(a, b);
    const u64 n = order_ - 1;
    u64 la = log_[a], lb = log_[b];
    u64 d = lb >= la ? lb - la : lb + n - la;
    std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
}

Elem FieldCtx::neg(Elem a) const {
    if (a == 0 || p_ == 2) return a;
    if (m_ == 1) return static_cast<Elem>(p_ - a);
    if (has_tables()) return exp_[log_[a] + (order_ - 1) / 2];
    u64 out = 0, x = a;
    for (unsigned i = 0; i < m_; ++i) {
        u64 d = x % p_;
        out += ((p_ - d) % p_) * place_[i];
        x /= p_;
    }
    return static_cast<Elem>(out);
}

Elem FieldCtx::mul_poly(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(u64{a} * b % p_);
    auto da = coeffs(a), db = coeffs(b);
    std::vector<u64> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p_;
    }
    // x^m = -(sum_{j<m} modulus_j x^j)
    for (std::size_t i = prod.size() - 1; i >= m_; --i) {
        u64 t = prod[i];
        if (t == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < m_; ++j) {
            prod[i - m_ + j] = (prod[i - m_ + j] + t * ((p_ - modulus_[j]) % p_)) % p_;
        }
    }
    u64 out = 0;
    for (unsigned i = 0; i < m_; ++i) out += prod[i] * place_[i];
    return static_cast<Elem>(out);
}

Elem FieldCtx::pow_poly(Elem a, u64 e) const {
    Elem r = 1, b = a;
    while (e != 0) {
        if (e & 1) r = mul_poly(r, b);
        b = mul_poly(b, b);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(u64{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    if (has_tables()) return exp_[u64{log_[a]} + log_[b]];
    return mul_poly(a, b);
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    if (has_tables()) {
        u64 la = log_[a];
        return la == 0 ? 1 : exp_[order_ - 1 - la];
    }
    return pow_poly(a, order_ - 2);
}

Elem FieldCtx::pow(Elem a, u64 e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables()) {
        const u64 n = order_ - 1;
        return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * (e % n) % n)];
    }
    return pow_poly(a, e);
}

u64 FieldCtx::log(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
    if (!has_tables()) throw Error(ErrorCode::SizeCapExceeded, "no log table for " + describe());
    return log_[a];
}

Elem FieldCtx::exp(u64 i) const {
    if (has_tables()) return exp_[i % (order_ - 1)];
    return pow_poly(primitive_, i);
}

u64 FieldCtx::mult_order(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "order of zero");
    const u64 n = order_ - 1;
    if (has_tables()) return n / ffp::gcd(n, log_[a]);
    u64 ord = n;
    for (u64 t : prime_factors(n)) {
        while (ord % t == 0 && pow_poly(a, ord / t) == 1) ord /= t;
    }
    return ord;
}

Elem FieldCtx::find_primitive() const {
    const u64 n = order_ - 1;
    const auto ts = prime_factors(n);
    for (u64 c = 1; c < order_; ++c) {
        bool gen = true;
        for (u64 t : ts) {
            if (pow_poly(static_cast<Elem>(c), n / t) == 1) {
                gen = false;
                break;
            }
        }
        if (gen) return static_cast<Elem>(c);
    }
    throw Error(ErrorCode::Internal, "no primitive element in " + describe());
}

void FieldCtx::build_tables() {
    const u64 n = order_ - 1;
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    Elem v = 1;
    for (u64 i = 0; i < n; ++i) {
        exp_[i] = v;
        log_[v] = static_cast<std::uint32_t>(i);
        v = mul_poly(v, primitive_);
    }
    for (u64 i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
    if (p_ != 2 && m_ > 1) {
        zech_.resize(n);
        for (u64 d = 0; d < n; ++d) {
            Elem s = add_digits(1, exp_[d]);
            zech_[d] = s == 0 ? kNoLog : log_[s];
        }
    }
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << m_ << ")";
    if (m_ > 1) {
        auto fp = make_field(p_, 1);
        std::vector<Elem> c(modulus_.begin(), modulus_.end());
        os << " mod " << to_string(PolyFq(fp, std::move(c)));
    }
    return os.str();
}

FieldRef make_field(u64 p, unsigned m, u64 size_cap) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    u64 order;
    try {
        order = checked_pow(p, m);
    } catch (const Error&) {
        throw Error(ErrorCode::SizeCapExceeded, std::to_string(p) + "^" + std::to_string(m));
    }
    if (order > size_cap || order > (u64{1} << 31)) {
        throw Error(ErrorCode::SizeCapExceeded,
                    std::to_string(p) + "^" + std::to_string(m) + " exceeds cap " + std::to_string(size_cap));
    }

    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, FieldRef> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({p, m}); it != cache.end()) return it->second;
    }

    std::vector<unsigned> modulus{0, 1};
    if (m > 1) {
        auto fp = make_field(p, 1, size_cap);
        const u64 lower = checked_pow(p, m);
        bool found = false;
        for (u64 code = 0; code < lower && !found; ++code) {
            std::vector<Elem> c(m + 1);
            u64 v = code;
            for (unsigned i = 0; i < m; ++i) {
                c[i] = static_cast<Elem>(v % p);
                v /= p;
            }
            c[m] = 1;
            if (is_irreducible(PolyFq(fp, c))) {
                modulus.assign(c.begin(), c.end());
                found = true;
            }
        }
        if (!found) throw Error(ErrorCode::Internal, "no irreducible of degree " + std::to_string(m));
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx(p, m, std::move(modulus)));
    ctx->primitive_ = ctx->find_primitive();
    if (ctx->order_ <= kTableCap) ctx->build_tables();

    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::pair{p, m}, std::move(ctx));
    return it->second;
}

FieldElement::FieldElement(FieldRef ctx, Elem code) : ctx_(std::move(ctx)), code_(code) {
    if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (!ctx_->valid(code_)) throw Error(ErrorCode::InvalidArgument, "element code out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (a.ctx() != b.ctx()) throw Error(ErrorCode::CtxMismatch, "elements of different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx_, a.ctx_->add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx_, a.ctx_->sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx_, a.ctx_->mul(a.code_, b.code_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.ctx_, a.ctx_->mul(a.code_, a.ctx_->inv(b.code_))};
}

FieldElement primitive_element(const FieldRef& ctx) { return {ctx, ctx->primitive()}; }

}  // namespace ffp::gf

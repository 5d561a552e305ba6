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

#ifndef FFP_GF_HPP
#define FFP_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ffp/numtheory.hpp"

namespace ffp::gf {

/// Packed element code: sum of c_i * p^i where c_i is the coefficient of
/// the i-th basis power. Code order is the canonical lexicographic order
/// (constant term varies fastest).
using Elem = std::uint32_t;

inline constexpr u64 kDefaultSizeCap = u64{1} << 24;
inline constexpr u64 kTableCap = u64{1} << 20;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// An immutable finite field F_{p^m}. Obtain instances through make_field().
class FieldCtx {
public:
    u64 p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    u64 order() const noexcept { return order_; }
    /// Monic modulus over F_p, little-endian, m + 1 entries. For m == 1 this is x.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, u64 e) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t k) const;

    std::vector<unsigned> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const unsigned> c) const;
    bool valid(Elem a) const noexcept { return a < order_; }

    /// The canonical primitive element (lexicographically first generator).
    Elem primitive() const noexcept { return primitive_; }
    /// Discrete log base primitive(); a must be nonzero.
    u64 log(Elem a) const;
    Elem exp(u64 i) const;
    u64 mult_order(Elem a) const;

    std::string describe() const;

private:
    friend FieldRef make_field(u64 p, unsigned m, u64 size_cap);
    FieldCtx(u64 p, unsigned m, std::vector<unsigned> modulus);

    Elem mul_poly(Elem a, Elem b) const;
    Elem pow_poly(Elem a, u64 e) const;
    Elem add_digits(Elem a, Elem b) const;
    Elem find_primitive() const;
    void build_tables();

    u64 p_;
    unsigned m_;
    u64 order_;
    std::vector<unsigned> modulus_;
    std::vector<u64> place_;  // p^i
    Elem primitive_ = 1;
    // exp_ has length 2(order-1) so that exp_[log a + log b] needs no reduction.
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    // zech_[d] = log(1 + g^d), or kNoLog when 1 + g^d = 0.
    std::vector<std::uint32_t> zech_;
    static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

/// Deterministic construction: the same (p, m) always yields the same
/// modulus, primitive element and tables (instances are shared).
FieldRef make_field(u64 p, unsigned m, u64 size_cap = kDefaultSizeCap);

/// Value-semantic element of a field.
class FieldElement {
public:
    FieldElement(FieldRef ctx, Elem code);

    const FieldRef& ctx() const noexcept { return ctx_; }
    Elem code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    std::vector<unsigned> coeffs() const { return ctx_->coeffs(code_); }

    FieldElement pow(u64 e) const { return {ctx_, ctx_->pow(code_, e)}; }
    FieldElement inv() const { return {ctx_, ctx_->inv(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {ctx_, ctx_->neg(code_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.ctx_ == b.ctx_ && a.code_ == b.code_;
    }

private:
    FieldRef ctx_;
    Elem code_;
};

FieldElement primitive_element(const FieldRef& ctx);

}  // namespace ffp::gf

#endif  // FFP_GF_HPP

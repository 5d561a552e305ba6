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

#ifndef FFP_POLY_HPP
#define FFP_POLY_HPP

#include <string>
#include <vector>

#include "ffp/gf.hpp"

namespace ffp::gf {

/// Polynomial over a finite field, little-endian in x, no trailing zeros.
class PolyFq {
public:
    explicit PolyFq(FieldRef ctx);
    PolyFq(FieldRef ctx, std::vector<Elem> coeffs);

    static PolyFq constant(FieldRef ctx, Elem c);
    static PolyFq monomial(FieldRef ctx, Elem c, std::size_t deg);
    static PolyFq x(FieldRef ctx) { return monomial(std::move(ctx), 1, 1); }

    const FieldRef& ctx() const noexcept { return ctx_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff_element(std::size_t i) const { return {ctx_, coeff(i)}; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    PolyFq monic() const;
    PolyFq derivative() const;
    Elem eval(Elem x) const;
    PolyFq scaled(Elem s) const;

    friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator*(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator%(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator/(const PolyFq& a, const PolyFq& b);
    friend bool operator==(const PolyFq& a, const PolyFq& b) noexcept {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }

private:
    void normalize();

    FieldRef ctx_;
    std::vector<Elem> c_;
};

struct DivMod {
    PolyFq quot;
    PolyFq rem;
};

DivMod divmod(const PolyFq& a, const PolyFq& b);
/// Monic gcd (zero if both are zero).
PolyFq gcd(const PolyFq& a, const PolyFq& b);
PolyFq powmod(const PolyFq& base, u64 e, const PolyFq& mod);
/// x^{Q^k} mod h where Q is the order of the coefficient field.
PolyFq frobenius_x(const PolyFq& h, unsigned k);

/// Rabin's test. Constants are not irreducible; throws ZeroPolynomial on 0.
bool is_irreducible(const PolyFq& h);
/// Degrees of the irreducible factors of h with multiplicity, ascending.
std::vector<unsigned> factor_degrees(const PolyFq& h);

/// "x^4 + x + 1"; non-prime-field coefficients are written as [code].
std::string to_string(const PolyFq& h);

}  // namespace ffp::gf

#endif  // FFP_POLY_HPP

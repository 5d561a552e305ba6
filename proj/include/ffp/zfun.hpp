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

#ifndef FFP_ZFUN_HPP
#define FFP_ZFUN_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "ffp/gf.hpp"
#include "ffp/numtheory.hpp"

namespace ffp::gf {
class Tower;
}

namespace ffp::zfun {

using gf::Elem;
using gf::FieldElement;
using gf::FieldRef;

/// Sorted, duplicate-free subset of Z_N.
class SupportSet {
public:
    SupportSet(u64 modulus, std::vector<u64> members);

    u64 modulus() const noexcept { return n_; }
    const std::vector<u64>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(u64 k) const { return std::binary_search(members_.begin(), members_.end(), k % n_); }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

private:
    u64 n_;
    std::vector<u64> members_;
};

/// A function Z_N -> F stored densely; its support is computed once at
/// construction.
class CyclicFn {
public:
    CyclicFn(FieldRef ctx, std::vector<Elem> values);

    static CyclicFn zero(FieldRef ctx, u64 modulus);
    /// delta_at: 1 at `at`, 0 elsewhere.
    static CyclicFn kronecker(FieldRef ctx, u64 modulus, u64 at = 0);
    static CyclicFn indicator(FieldRef ctx, const SupportSet& s);

    u64 modulus() const noexcept { return values_.size(); }
    const FieldRef& ctx() const noexcept { return ctx_; }
    std::span<const Elem> values() const noexcept { return values_; }
    Elem operator[](u64 i) const noexcept { return values_[i % values_.size()]; }
    /// Value at any integer, reduced to its canonical representative.
    FieldElement at(std::int64_t i) const;
    const SupportSet& support() const noexcept { return support_; }

    CyclicFn scaled(Elem s) const;
    friend CyclicFn operator+(const CyclicFn& a, const CyclicFn& b);
    friend CyclicFn operator-(const CyclicFn& a, const CyclicFn& b);
    /// Pointwise product.
    friend CyclicFn operator*(const CyclicFn& a, const CyclicFn& b);
    friend bool operator==(const CyclicFn& a, const CyclicFn& b) noexcept {
        return a.ctx_ == b.ctx_ && a.values_ == b.values_;
    }

private:
    FieldRef ctx_;
    std::vector<Elem> values_;
    SupportSet support_;
};

/// g(i) = sum_j f(j) zeta^{ij}. zeta must have multiplicative order exactly N.
CyclicFn dft(const CyclicFn& f, const FieldElement& zeta);
/// N^{-1} times the transform based on zeta^{-1}.
CyclicFn idft(const CyclicFn& f, const FieldElement& zeta);
/// Canonical root of unity of order N: primitive^((Q-1)/N).
FieldElement root_of_unity(const FieldRef& ctx, u64 modulus);

enum class ConvPath { Sparse, Dense };
/// Support pairs when |supp f| * |supp g| < N * bit_width(N), else dense.
ConvPath convolution_path(const CyclicFn& f, const CyclicFn& g);
CyclicFn convolve(const CyclicFn& f, const CyclicFn& g);
CyclicFn convolve(const CyclicFn& f, const CyclicFn& g, ConvPath path);
/// f^{(x)m}; m = 0 gives delta_0.
CyclicFn conv_power(const CyclicFn& f, u64 m);

bool is_periodic(const CyclicFn& f, u64 r);
u64 least_period(const CyclicFn& f);
/// N / gcd(N, supp); 1 for the empty support.
u64 dft_period_by_support(const SupportSet& s);

/// Smallest positive r dividing N with v[i] == v[(i + r) mod N] for all i.
template <class T>
u64 least_period_of(std::span<const T> v) {
    const u64 n = v.size();
    if (n == 0) return 1;
    for (u64 r : divisors(n)) {
        bool ok = true;
        for (u64 i = 0; i + r < n && ok; ++i) ok = v[i] == v[i + r];
        // i + r wraps for i >= n - r; since r | n those comparisons are implied.
        if (ok) return r;
    }
    return n;
}

CyclicFn shift(const CyclicFn& f, std::int64_t k);
CyclicFn reversal(const CyclicFn& f);
/// sigma is a bijection on element codes of f's field.
CyclicFn compose_perm(const CyclicFn& f, std::span<const Elem> sigma);

/// Values of f (over the tower base) mapped into the extension field.
CyclicFn lift(const CyclicFn& f, const gf::Tower& t);

}  // namespace ffp::zfun

#endif  // FFP_ZFUN_HPP

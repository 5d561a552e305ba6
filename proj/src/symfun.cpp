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

#include "ffp/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "ffp/error.hpp"

namespace ffp::symfun {

namespace {

u64 prime_of(u64 q) {
    auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    return pp->p;
}

void check_w(unsigned n, unsigned w) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    if (w > n) throw Error(ErrorCode::WOutOfRange, "w = " + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
}

void check_permutation(std::span<const unsigned> rho, unsigned n) {
    if (rho.size() != n) throw Error(ErrorCode::BadPermutation, "permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (unsigned r : rho) {
        if (r >= n || seen[r]) throw Error(ErrorCode::BadPermutation, "not a bijection of [0, n-1]");
        seen[r] = true;
    }
}

}  // namespace

u64 cyclic_modulus(u64 q, unsigned n, u64 cap) {
    u64 qn;
    try {
        qn = checked_pow(q, n);
    } catch (const Error&) {
        throw Error(ErrorCode::SizeCapExceeded, std::to_string(q) + "^" + std::to_string(n));
    }
    if (qn - 1 > cap) {
        throw Error(ErrorCode::SizeCapExceeded,
                    std::to_string(q) + "^" + std::to_string(n) + " - 1 exceeds cap " + std::to_string(cap));
    }
    return qn - 1;
}

unsigned DigitVector::digit_sum() const { return std::accumulate(digits.begin(), digits.end(), 0u); }

OmegaSet omega(u64 q, unsigned n, unsigned w) {
    check_w(n, w);
    prime_of(q);
    const u64 N = cyclic_modulus(q, n);
    std::vector<u64> members;
    // Each w-subset of digit positions, via a selection mask.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + w, true);
    do {
        u64 k = 0, place = 1;
        for (unsigned i = 0; i < n; ++i, place *= q) {
            if (pick[i]) k += place;
        }
        // Only (q, w) = (2, n) hits q^n - 1, which is 0 in Z_N and has no digit form.
        if (k != N) members.push_back(k);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {q, n, w, SupportSet(N, std::move(members))};
}

CyclicFn delta(u64 q, unsigned n, unsigned w, const zfun::FieldRef& ctx) {
    if (ctx->p() != prime_of(q)) throw Error(ErrorCode::CtxMismatch, "value field has the wrong characteristic");
    return CyclicFn::indicator(ctx, omega(q, n, w).members);
}

CyclicFn delta_wc(u64 q, unsigned n, unsigned w, const zfun::FieldElement& c) {
    if (w < 1 || w > n) throw Error(ErrorCode::WOutOfRange, "w must lie in [1, n]");
    if (q == 2 && w == n) throw Error(ErrorCode::ExcludedCase, "(q, w) = (2, n)");
    const auto& ctx = c.ctx();
    if (ctx->p() != prime_of(q)) throw Error(ErrorCode::CtxMismatch, "value field has the wrong characteristic");
    if (c.pow(q) != c) throw Error(ErrorCode::BadSubfield, "c is not in the F_q-subfield");

    const CyclicFn d0 = CyclicFn::kronecker(ctx, cyclic_modulus(q, n));
    const CyclicFn dw = delta(q, n, w, ctx);
    const gf::Elem sign = (w % 2 == 0) ? 1 : ctx->neg(1);
    const CyclicFn base = dw.scaled(sign) - d0.scaled(c.code());
    return d0 - zfun::conv_power(base, q - 1);
}

DigitVector digits(u64 k, u64 q, unsigned n) {
    const u64 N = cyclic_modulus(q, n);
    DigitVector dv{k % N, std::vector<unsigned>(n, 0)};
    u64 v = dv.k;
    for (unsigned i = 0; i < n; ++i) {
        dv.digits[i] = static_cast<unsigned>(v % q);
        v /= q;
    }
    return dv;
}

u64 digit_sum(u64 k, u64 q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "base must be >= 2");
    u64 s = 0;
    for (; k != 0; k /= q) s += k % q;
    return s;
}

u64 phi_rho(std::span<const unsigned> rho, u64 k, u64 q, unsigned n) {
    check_permutation(rho, n);
    const auto dv = digits(k, q, n);
    u64 out = 0, place = 1;
    for (unsigned i = 0; i < n; ++i, place *= q) out += dv.digits[rho[i]] * place;
    return out;
}

bool is_q_symmetric(const CyclicFn& f, u64 q, unsigned n, unsigned trials, u64 seed) {
    const u64 N = cyclic_modulus(q, n);
    if (f.modulus() != N) {
        throw Error(ErrorCode::ModulusMismatch, "function is not on Z_{q^n - 1}");
    }
    std::vector<u64> place(n);
    place[0] = 1;
    for (unsigned i = 1; i < n; ++i) place[i] = place[i - 1] * q;
    std::vector<unsigned char> dig(N * n);
    for (u64 k = 0; k < N; ++k) {
        u64 v = k;
        for (unsigned i = 0; i < n; ++i, v /= q) dig[k * n + i] = static_cast<unsigned char>(v % q);
    }
    const auto vals = f.values();
    std::vector<u64> weight(n);
    auto invariant_under = [&](const std::vector<unsigned>& rho) {
        // phi_rho(k) = sum_j a_j q^{rho^{-1}(j)}
        for (unsigned i = 0; i < n; ++i) weight[rho[i]] = place[i];
        for (u64 k = 0; k < N; ++k) {
            u64 img = 0;
            const unsigned char* a = &dig[k * n];
            for (unsigned j = 0; j < n; ++j) img += a[j] * weight[j];
            if (vals[img] != vals[k]) return false;
        }
        return true;
    };

    std::vector<unsigned> rho(n);
    std::iota(rho.begin(), rho.end(), 0u);
    if (n <= 8) {
        do {
            if (!invariant_under(rho)) return false;
        } while (std::next_permutation(rho.begin(), rho.end()));
        return true;
    }
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::shuffle(rho.begin(), rho.end(), rng);
        if (!invariant_under(rho)) return false;
    }
    return true;
}

}  // namespace ffp::symfun

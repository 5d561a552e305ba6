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

#ifndef FFP_SYMFUN_HPP
#define FFP_SYMFUN_HPP

#include <span>
#include <vector>

#include "ffp/zfun.hpp"

namespace ffp::symfun {

using zfun::CyclicFn;
using zfun::SupportSet;

inline constexpr u64 kDefaultModulusCap = u64{1} << 22;

/// q^n - 1, throwing SizeCapExceeded above `cap`.
u64 cyclic_modulus(u64 q, unsigned n, u64 cap = kDefaultModulusCap);

/// Elements of Z_{q^n-1} whose base-q digits are 0/1 with exactly w ones.
struct OmegaSet {
    u64 q;
    unsigned n;
    unsigned w;
    SupportSet members;
};

/// base-q digits eps_0(k) .. eps_{n-1}(k) of the canonical representative.
struct DigitVector {
    u64 k;
    std::vector<unsigned> digits;

    unsigned digit_sum() const;
};

OmegaSet omega(u64 q, unsigned n, unsigned w);

/// Indicator of Omega(w) with values in {0, 1} of ctx (characteristic of q).
CyclicFn delta(u64 q, unsigned n, unsigned w, const zfun::FieldRef& ctx);

/// delta_0 - ((-1)^w delta_w - c delta_0)^{(x)(q-1)} over the field of c.
/// c must lie in the F_q-subfield. Throws ExcludedCase for (q, w) = (2, n).
CyclicFn delta_wc(u64 q, unsigned n, unsigned w, const zfun::FieldElement& c);

DigitVector digits(u64 k, u64 q, unsigned n);
/// s_q(k) for a non-negative integer k.
u64 digit_sum(u64 k, u64 q);

/// Digit permutation: the result has digit a_{rho(i)} at position i.
u64 phi_rho(std::span<const unsigned> rho, u64 k, u64 q, unsigned n);

/// f o phi_rho == f for every rho: all n! permutations when n <= 8,
/// otherwise `trials` random permutations drawn from `seed`.
bool is_q_symmetric(const CyclicFn& f, u64 q, unsigned n, unsigned trials = 1000, u64 seed = 0);

}  // namespace ffp::symfun

#endif  // FFP_SYMFUN_HPP

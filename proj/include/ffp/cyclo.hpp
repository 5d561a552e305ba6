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

#ifndef FFP_CYCLO_HPP
#define FFP_CYCLO_HPP

#include "ffp/numtheory.hpp"

namespace ffp::cyclo {

/// Phi_n(q) together with the period threshold (q^n - 1) / Phi_n(q).
struct CycloValue {
    unsigned n;
    u64 q;
    u128 phi;
    u128 threshold;
};

/// Phi_n(q) from the Moebius product prod_{d|n} (q^{n/d} - 1)^{mu(d)}:
/// numerator and denominator are accumulated separately and divided once.
/// Overflow of the 128-bit accumulators throws Error(Overflow).
u128 cyclotomic_value(unsigned n, u64 q);

/// (q^n - 1) / Phi_n(q) for n >= 2, cross-checked against
/// lcm{q^d - 1 : d | n, d < n}.
u128 threshold(unsigned n, u64 q);

CycloValue cyclo_value(unsigned n, u64 q);

/// Phi_n(q) | (q^n - 1) / (q^m - 1) for m | n, 0 < m < n.
bool divisibility_check(unsigned n, unsigned m, u64 q);

/// lcm{q^d - 1 : d | n, d < n}
u128 threshold_by_lcm(unsigned n, u64 q);
/// gcd{(q^n - 1) / (q^d - 1) : d | n, d < n}
u128 phi_by_gcd(unsigned n, u64 q);

}  // namespace ffp::cyclo

#endif  // FFP_CYCLO_HPP

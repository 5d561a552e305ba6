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

#include "ffp/cyclo.hpp"

#include <string>

#include "ffp/error.hpp"

namespace ffp::cyclo {

namespace {

void require_args(unsigned n, u64 q) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
}

u128 qpow_minus_one(u64 q, unsigned e) { return checked_pow128(q, e) - 1; }

u128 lcm128(u128 a, u128 b) { return checked_mul(a / gcd128(a, b), b); }

}  // namespace

u128 cyclotomic_value(unsigned n, u64 q) {
    require_args(n, q);
    u128 num = 1, den = 1;
    for (u64 d : divisors(n)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const u128 factor = qpow_minus_one(q, static_cast<unsigned>(n / d));
        if (mu > 0) num = checked_mul(num, factor);
        else den = checked_mul(den, factor);
    }
    if (num % den != 0) throw Error(ErrorCode::Internal, "Moebius product is not integral");
    return num / den;
}

u128 threshold_by_lcm(unsigned n, u64 q) {
    require_args(n, q);
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "threshold needs n >= 2");
    u128 acc = 1;
    for (u64 d : divisors(n)) {
        if (d == n) continue;
        acc = lcm128(acc, qpow_minus_one(q, static_cast<unsigned>(d)));
    }
    return acc;
}

u128 phi_by_gcd(unsigned n, u64 q) {
    require_args(n, q);
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "gcd identity needs n >= 2");
    const u128 top = qpow_minus_one(q, n);
    u128 acc = 0;
    for (u64 d : divisors(n)) {
        if (d == n) continue;
        acc = gcd128(acc, top / qpow_minus_one(q, static_cast<unsigned>(d)));
    }
    return acc;
}

u128 threshold(unsigned n, u64 q) {
    require_args(n, q);
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "threshold needs n >= 2");
    const u128 top = qpow_minus_one(q, n);
    const u128 phi = cyclotomic_value(n, q);
    const u128 t = top / phi;
    if (t * phi != top || t != threshold_by_lcm(n, q) || phi != phi_by_gcd(n, q)) {
        throw Error(ErrorCode::Internal, "cyclotomic identities disagree at n=" + std::to_string(n) +
                                             " q=" + std::to_string(q));
    }
    return t;
}

CycloValue cyclo_value(unsigned n, u64 q) {
    const u128 phi = cyclotomic_value(n, q);
    return {n, q, phi, qpow_minus_one(q, n) / phi};
}

bool divisibility_check(unsigned n, unsigned m, u64 q) {
    if (m == 0 || m >= n || n % m != 0) {
        throw Error(ErrorCode::BadDivisorPair, "(" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    const u128 quotient = qpow_minus_one(q, n) / qpow_minus_one(q, m);
    return quotient % cyclotomic_value(n, q) == 0;
}

}  // namespace ffp::cyclo

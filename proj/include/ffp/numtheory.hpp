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

#ifndef FFP_NUMTHEORY_HPP
#define FFP_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Prime power decomposition q = p^m.
struct PrimePower {
    u64 p;
    unsigned m;
};

// Checked arithmetic: every overflow throws Error(Overflow), never wraps.
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);
u128 checked_mul(u128 a, u128 b);
u128 checked_pow128(u64 base, unsigned exp);

std::string to_string(u128 v);
u64 narrow(u128 v);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u128 gcd128(u128 a, u128 b);

bool is_prime(u64 n);
std::optional<PrimePower> as_prime_power(u64 q);

/// Positive divisors of n in increasing order (trial division).
std::vector<u64> divisors(u64 n);
/// Distinct prime factors of n, increasing.
std::vector<u64> prime_factors(u64 n);
int mobius(u64 n);

/// a^e mod m for 64-bit operands.
u64 powmod(u64 a, u64 e, u64 m);

}  // namespace ffp

#endif  // FFP_NUMTHEORY_HPP

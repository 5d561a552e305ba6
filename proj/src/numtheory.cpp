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

#include "ffp/numtheory.hpp"

#include <algorithm>

#include "ffp/error.hpp"

namespace ffp {

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, to_string(a) + " * " + to_string(b));
    }
    return r;
}

u128 checked_pow128(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, static_cast<u128>(base));
    return r;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u64 narrow(u128 v) {
    if (v > static_cast<u128>(UINT64_MAX)) {
        throw Error(ErrorCode::Overflow, to_string(v) + " does not fit in 64 bits");
    }
    return static_cast<u64>(v);
}

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto ps = prime_factors(q);
    if (ps.size() != 1) return std::nullopt;
    PrimePower pp{ps[0], 0};
    while (q > 1) {
        q /= pp.p;
        ++pp.m;
    }
    return pp;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

int mobius(u64 n) {
    int sign = 1;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

u64 powmod(u64 a, u64 e, u64 m) {
    u128 r = 1 % m, b = a % m;
    while (e != 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

}  // namespace ffp

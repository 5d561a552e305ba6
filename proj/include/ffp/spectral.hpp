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

#ifndef FFP_SPECTRAL_HPP
#define FFP_SPECTRAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffp/poly.hpp"
#include "ffp/zfun.hpp"

namespace ffp::spectral {

using gf::PolyFq;

/// The period criteria are one-directional, so there is no "disproven".
enum class Status { Proven, Inconclusive };

std::string_view to_string(Status s) noexcept;

struct Evidence {
    u64 modulus = 0;          // q^n - 1
    u64 least_period = 0;     // r
    u128 threshold = 0;       // (q^n - 1) / Phi_n(q)
    u64 subfield_order = 0;   // #L, when an S(x) was built
    std::optional<std::pair<u64, u64>> divisor_pair;
};

struct Verdict {
    Status status = Status::Inconclusive;
    Evidence evidence;

    bool proven() const noexcept { return status == Status::Proven; }
};

/// S(x) = (1 - h(x)^{#L - 1}) mod (x^{q^n - 1} - 1) and its coefficient sequence.
struct SPoly {
    PolyFq base;
    u64 subfield_order;
    PolyFq poly;
    zfun::CyclicFn coeff_seq;
};

/// Smallest F_{q^d}, d | n, containing h(F_{q^n}^*); returns q^d.
u64 auto_subfield_order(const PolyFq& h, u64 q, unsigned n);

/// h must be over the canonical F_q. With no L the smallest subfield is used;
/// an explicit L must be a subfield of F_{q^n} containing the image of h.
SPoly build_S(const PolyFq& h, u64 q, unsigned n, std::optional<u64> subfield_order = std::nullopt);

/// Proven iff the least period of S's coefficients does not divide the threshold.
Verdict degree_n_factor_test(const PolyFq& h, u64 q, unsigned n,
                             std::optional<u64> subfield_order = std::nullopt);

struct SupportDegreeReport {
    Verdict sufficient_i;  // r does not divide the threshold
    bool necessary_ii;     // r divides no q^d - 1 for proper d | n
    bool primitive_iii;    // r = q^n - 1
};

SupportDegreeReport support_degree_test(const zfun::SupportSet& s, u64 q, unsigned n);

/// Irreducibility certificate for deg h = n >= 2; DegreeMismatch otherwise.
Verdict irreducible_sufficient_test(const PolyFq& h, u64 q, unsigned n,
                                    std::optional<u64> subfield_order = std::nullopt);

/// Proven on the lexicographically smallest pair of divisors a <= b of
/// q^n - 1 with gcd(a, b) = 1 and h(zeta^a) = h(zeta^b) = 0.
Verdict coprime_divisor_test(const PolyFq& h, u64 q, unsigned n);

// Independent checks built on Frobenius powers, not on periods.
bool oracle_irreducible(const PolyFq& h);
std::vector<unsigned> oracle_factor_degrees(const PolyFq& h);

}  // namespace ffp::spectral

#endif  // FFP_SPECTRAL_HPP

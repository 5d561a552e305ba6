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

#ifndef FFP_HARNESS_HPP
#define FFP_HARNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffp/poly.hpp"

namespace ffp::hm {

using gf::Elem;
using gf::PolyFq;

/// I/II/III/Excluded select which period bound applies; Norm marks w = n tuples, which
/// are checked by witness search alone.
enum class CaseLabel { I, II, III, Excluded, Norm };
enum class Outcome { Pass, Fail, Excluded, Capped };

std::string_view to_string(CaseLabel c) noexcept;
std::string_view to_string(Outcome o) noexcept;

CaseLabel classify(u64 q, unsigned n, unsigned w, Elem c);

struct Claims {
    bool r_gt_threshold = false;
    bool r_not_dividing_threshold = false;
    bool case_claim = false;

    bool all() const noexcept { return r_gt_threshold && r_not_dividing_threshold && case_claim; }
};

struct PeriodReport {
    u64 q = 0;
    unsigned n = 0;
    unsigned w = 0;
    Elem c = 0;
    u64 modulus = 0;
    u64 r = 0;  // 0 when no period was computed
    u128 threshold = 0;
    CaseLabel case_label = CaseLabel::I;
    Claims claims;
    bool witness_searched = false;
    std::optional<PolyFq> witness;
    std::optional<unsigned> delegated_to;  // w' = n - w whose period stands in
    Outcome outcome = Outcome::Pass;
    std::string note;
};

/// Period check of Delta_{w,c} for 1 <= w <= n/2. c is an F_q code.
PeriodReport verify_period_claims(u64 q, unsigned n, unsigned w, Elem c, u64 size_cap = u64{1} << 22);

/// First xi = zeta^k (ascending k) of degree n whose characteristic polynomial
/// has [x^{n-w}] = c; the result is rechecked for irreducibility.
/// w = n with c = 0 is rejected with InvalidArgument.
std::optional<PolyFq> hm_witness(u64 q, unsigned n, unsigned w, Elem c);

enum class WPolicy { Half, Full };

struct SweepConfig {
    std::vector<u64> q_list;
    unsigned n_min = 2;
    unsigned n_max = 2;
    WPolicy w_policy = WPolicy::Half;
    std::optional<unsigned> only_w;
    std::optional<Elem> only_c;
    u64 size_cap = u64{1} << 22;
    bool with_witness = true;
    unsigned threads = 1;
};

/// FFP_SIZE_CAP from the environment, else `fallback`.
u64 size_cap_from_env(u64 fallback);

struct SweepSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t excluded = 0;
    std::size_t capped = 0;
};

struct SweepResult {
    std::vector<PeriodReport> reports;
    SweepSummary summary;
};

/// Reports come back in (q, n, w, c) order whatever the thread count.
SweepResult sweep(const SweepConfig& cfg);

}  // namespace ffp::hm

#endif  // FFP_HARNESS_HPP

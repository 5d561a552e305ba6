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

#include "ffp/report.hpp"

#include <iomanip>

#include "ffp/error.hpp"

namespace ffp::report {

using nlohmann::json;

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(s) + "'");
}

json big_json(u128 v) {
    if (v <= ~u64{0}) return static_cast<u64>(v);
    return to_string(v);
}

json poly_json(const gf::PolyFq& p) { return json(p.coeffs()); }

namespace {

std::string witness_text(const hm::PeriodReport& r) {
    if (!r.witness_searched) return "";
    return r.witness ? gf::to_string(*r.witness) : "none";
}

}  // namespace

json to_json(const hm::PeriodReport& r) {
    json j = {
        {"q", r.q},
        {"n", r.n},
        {"w", r.w},
        {"c", r.c},
        {"modulus", r.modulus},
        {"r", r.r},
        {"threshold", big_json(r.threshold)},
        {"case_label", hm::to_string(r.case_label)},
        {"claims",
         {{"r_gt_threshold", r.claims.r_gt_threshold},
          {"r_not_dividing_threshold", r.claims.r_not_dividing_threshold},
          {"case_claim", r.claims.case_claim}}},
        {"outcome", hm::to_string(r.outcome)},
    };
    if (r.witness_searched) j["witness"] = r.witness ? poly_json(*r.witness) : json(nullptr);
    if (r.delegated_to) j["delegated_to_w"] = *r.delegated_to;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const hm::SweepResult& res) {
    json reports = json::array();
    for (const auto& r : res.reports) reports.push_back(to_json(r));
    return {{"reports", std::move(reports)},
            {"summary",
             {{"pass", res.summary.pass},
              {"fail", res.summary.fail},
              {"excluded", res.summary.excluded},
              {"capped", res.summary.capped}}}};
}

void write(std::ostream& os, const hm::SweepResult& res, Format f) {
    switch (f) {
        case Format::Json:
            os << to_json(res).dump(2) << '\n';
            return;
        case Format::Csv:
            os << "q,n,w,c,modulus,r,threshold,case_label,r_gt_threshold,r_not_dividing_threshold,case_claim,"
                  "delegated_to_w,witness,outcome\n";
            for (const auto& r : res.reports) {
                std::string wit;
                if (r.witness) {
                    for (std::size_t i = 0; i < r.witness->coeffs().size(); ++i) {
                        wit += (i ? " " : "") + std::to_string(r.witness->coeffs()[i]);
                    }
                }
                os << r.q << ',' << r.n << ',' << r.w << ',' << r.c << ',' << r.modulus << ',' << r.r << ','
                   << to_string(r.threshold) << ',' << hm::to_string(r.case_label) << ',' << r.claims.r_gt_threshold
                   << ',' << r.claims.r_not_dividing_threshold << ',' << r.claims.case_claim << ','
                   << (r.delegated_to ? std::to_string(*r.delegated_to) : "") << ',' << wit << ','
                   << hm::to_string(r.outcome) << '\n';
            }
            return;
        case Format::Text:
            for (const auto& r : res.reports) {
                os << "q=" << r.q << " n=" << r.n << " w=" << r.w << " c=" << r.c << "  case "
                   << hm::to_string(r.case_label);
                if (r.r) os << "  r=" << r.r << " threshold=" << to_string(r.threshold);
                if (r.delegated_to) os << "  (period from w=" << *r.delegated_to << ")";
                if (r.witness_searched) os << "  witness: " << witness_text(r);
                os << "  " << hm::to_string(r.outcome);
                if (!r.note.empty()) os << "  [" << r.note << "]";
                os << '\n';
            }
            os << "summary: pass=" << res.summary.pass << " fail=" << res.summary.fail
               << " excluded=" << res.summary.excluded << " capped=" << res.summary.capped << '\n';
            return;
    }
}

}  // namespace ffp::report

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

#ifndef FFP_REPORT_HPP
#define FFP_REPORT_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "ffp/harness.hpp"
#include "json.hpp"

namespace ffp::report {

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view s);

/// Integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json big_json(u128 v);
/// Little-endian coefficient codes.
nlohmann::json poly_json(const gf::PolyFq& p);
nlohmann::json to_json(const hm::PeriodReport& r);
nlohmann::json to_json(const hm::SweepResult& res);

void write(std::ostream& os, const hm::SweepResult& res, Format f);

}  // namespace ffp::report

#endif  // FFP_REPORT_HPP

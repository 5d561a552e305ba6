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

#include "ffp/error.hpp"

namespace ffp {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::BadTower: return "BadTower";
        case ErrorCode::WOutOfRange: return "WOutOfRange";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::CtxMismatch: return "CtxMismatch";
        case ErrorCode::BadDivisorPair: return "BadDivisorPair";
        case ErrorCode::ExcludedCase: return "ExcludedCase";
        case ErrorCode::BadPermutation: return "BadPermutation";
        case ErrorCode::BadSubfield: return "BadSubfield";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace ffp

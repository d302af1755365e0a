// Copyright 2026 The stoqcure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stoqcure {

enum class ErrorCode {
    MixedLength,
    TooLarge,
    NotSquare,
    UnsupportedLetter,
    InvalidInput,
    UncoverableTerm,
    BudgetExceeded,
    NotDecodable,
    ConstraintViolated,
    NotStoquasticInput,
    UnsatisfiableParameters,
    NotOrthogonal,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedLength: return "MixedLength";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::UnsupportedLetter: return "UnsupportedLetter";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UncoverableTerm: return "UncoverableTerm";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotDecodable: return "NotDecodable";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::NotStoquasticInput: return "NotStoquasticInput";
        case ErrorCode::UnsatisfiableParameters: return "UnsatisfiableParameters";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace stoqcure
